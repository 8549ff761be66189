#include "radscale/lexicon.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <istream>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>

#include "radscale/error.hpp"

namespace radscale {

namespace {

bool isWordChar(UChar32 c) {
  if (c < 0) return false;
  if (u_hasBinaryProperty(c, UCHAR_ALPHABETIC)) return true;
  const auto category = u_charType(c);
  return category == U_NON_SPACING_MARK || category == U_COMBINING_SPACING_MARK;
}

bool isHandleChar(UChar32 c) { return c == '_' || (c >= 0 && (u_isalnum(c) != 0)); }

void appendLower(std::string& out, UChar32 c) {
  const UChar32 lower = u_tolower(c);
  char buf[U8_MAX_LENGTH];
  std::int32_t len = 0;
  U8_APPEND_UNSAFE(buf, len, lower);
  out.append(buf, static_cast<std::size_t>(len));
}

bool startsWithUrl(std::string_view text) {
  auto hasPrefix = [&](std::string_view p) {
    if (text.size() < p.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const char c = text[i];
      const char lower = (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
      if (lower != p[i]) return false;
    }
    return true;
  };
  return hasPrefix("http://") || hasPrefix("https://") || hasPrefix("www.");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> splitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool parseInt(std::string_view s, int& value) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::uint8_t axisBit(Foundation f) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(f)); }

}  // namespace

Lexicon::Lexicon(std::map<int, std::string> categories, std::vector<LexiconEntry> entries)
    : categories_(std::move(categories)), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.pattern.empty()) throw Error(ErrorKind::InvalidParameter, "empty lexicon pattern");
    for (const int id : e.categoryIds) {
      if (!categories_.contains(id)) throw Error(ErrorKind::UnknownCategoryId, std::to_string(id));
    }
    if (e.isPrefix) {
      prefix_[e.pattern].push_back(i);
      longestPrefix_ = std::max(longestPrefix_, e.pattern.size());
    } else {
      exact_[e.pattern].push_back(i);
    }
  }
}

bool Lexicon::hasCategory(std::string_view name) const {
  return std::any_of(categories_.begin(), categories_.end(), [&](const auto& kv) { return kv.second == name; });
}

std::vector<std::size_t> Lexicon::match(std::string_view token) const {
  std::vector<std::size_t> hits;
  std::string key(token);
  if (const auto it = exact_.find(key); it != exact_.end()) hits = it->second;
  const auto limit = std::min(longestPrefix_, token.size());
  for (std::size_t len = 1; len <= limit; ++len) {
    key.assign(token.substr(0, len));
    if (const auto it = prefix_.find(key); it != prefix_.end()) hits.insert(hits.end(), it->second.begin(), it->second.end());
  }
  return hits;
}

Lexicon parseMfdDic(std::istream& in) {
  std::map<int, std::string> categories;
  std::vector<LexiconEntry> entries;
  // 0: before the opening '%', 1: inside the category block, 2: entries.
  int section = 0;
  // A bad category line is only reported once the block is known to close.
  std::optional<LineError> badCategory;
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line == "%") {
      if (section == 2) throw LineError(ErrorKind::MalformedLine, lineNo, "unexpected third '%' delimiter");
      if (section == 1 && badCategory) throw *badCategory;
      ++section;
      continue;
    }
    if (section == 0) throw Error(ErrorKind::MissingDelimiter, "file must open with a '%' line");
    if (section == 1) {
      const auto fields = splitWhitespace(line);
      int id = 0;
      if (fields.size() < 2 || !parseInt(fields[0], id)) {
        if (!badCategory) badCategory.emplace(ErrorKind::MalformedLine, lineNo, "expected 'id name'");
        continue;
      }
      std::string name(fields[1]);
      for (std::size_t i = 2; i < fields.size(); ++i) name += " " + std::string(fields[i]);
      if (!categories.emplace(id, name).second) {
        throw LineError(ErrorKind::MalformedLine, lineNo, "duplicate category id " + std::to_string(id));
      }
      continue;
    }

    std::string_view pattern;
    std::string_view rest;
    if (const auto tab = line.find('\t'); tab != std::string_view::npos) {
      pattern = trim(line.substr(0, tab));
      rest = line.substr(tab + 1);
    } else {
      const auto space = line.find(' ');
      pattern = line.substr(0, space);
      rest = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    }
    LexiconEntry entry;
    entry.pattern = toLowerUtf8(pattern);
    if (!entry.pattern.empty() && entry.pattern.back() == '*') {
      entry.isPrefix = true;
      entry.pattern.pop_back();
    }
    if (entry.pattern.empty()) throw LineError(ErrorKind::MalformedLine, lineNo, "empty pattern");
    for (const auto field : splitWhitespace(rest)) {
      int id = 0;
      if (!parseInt(field, id)) throw LineError(ErrorKind::MalformedLine, lineNo, "bad category id '" + std::string(field) + "'");
      if (!categories.contains(id)) throw LineError(ErrorKind::UnknownCategoryId, lineNo, std::to_string(id));
      if (std::find(entry.categoryIds.begin(), entry.categoryIds.end(), id) == entry.categoryIds.end()) {
        entry.categoryIds.push_back(id);
      }
    }
    if (entry.categoryIds.empty()) throw LineError(ErrorKind::MalformedLine, lineNo, "entry has no category ids");
    entries.push_back(std::move(entry));
  }
  if (section < 2) throw Error(ErrorKind::MissingDelimiter, "category block is not closed by '%'");
  return Lexicon(std::move(categories), std::move(entries));
}

std::string toLowerUtf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  while (i < length) {
    const std::int32_t start = i;
    UChar32 c = 0;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      out.append(text.substr(static_cast<std::size_t>(start), static_cast<std::size_t>(i - start)));
    } else {
      appendLower(out, c);
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };

  const auto* s = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  std::int32_t i = 0;
  bool afterWordChar = false;
  while (i < length) {
    if (!afterWordChar && startsWithUrl(text.substr(static_cast<std::size_t>(i)))) {
      flush();
      // The URL runs to the next whitespace.
      while (i < length) {
        UChar32 c = 0;
        const std::int32_t at = i;
        U8_NEXT(s, i, length, c);
        if (c >= 0 && u_isUWhiteSpace(c)) {
          i = at;
          break;
        }
      }
      continue;
    }
    UChar32 c = 0;
    U8_NEXT(s, i, length, c);
    if (c == '@') {
      flush();
      while (i < length) {
        const std::int32_t at = i;
        UChar32 h = 0;
        U8_NEXT(s, i, length, h);
        if (!isHandleChar(h)) {
          i = at;
          break;
        }
      }
      afterWordChar = false;
      continue;
    }
    if (isWordChar(c)) {
      appendLower(current, c);
      afterWordChar = true;
    } else {
      flush();
      afterWordChar = false;
    }
  }
  flush();
  return tokens;
}

std::string_view toString(Foundation f) noexcept {
  switch (f) {
    case Foundation::Fairness: return "Fairness";
    case Foundation::IngroupLoyalty: return "IngroupLoyalty";
    case Foundation::Authority: return "Authority";
    case Foundation::Purity: return "Purity";
  }
  return "?";
}

FoundationMap defaultFoundationMap() {
  FoundationMap map;
  map.categories = {{
      {"FairnessVirtue", "FairnessVice"},
      {"IngroupVirtue", "IngroupVice"},
      {"AuthorityVirtue", "AuthorityVice"},
      {"PurityVirtue", "PurityVice"},
  }};
  return map;
}

FoundationMap parseFoundationMap(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SchemaMismatch, std::string("foundation map is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::SchemaMismatch, "foundation map must be a JSON object");
  FoundationMap map;
  std::array<bool, kFoundationCount> seen{};
  for (const auto& [key, value] : doc.items()) {
    if (key == "Care" || key == "Harm") continue;
    const auto* axis = std::find_if(kFoundations.begin(), kFoundations.end(), [&](Foundation f) { return toString(f) == key; });
    if (axis == kFoundations.end()) throw Error(ErrorKind::SchemaMismatch, "unknown foundation axis '" + key + "'");
    if (!value.is_array()) throw Error(ErrorKind::SchemaMismatch, "axis '" + key + "' must list category names");
    auto& names = map.categories[static_cast<std::size_t>(*axis)];
    for (const auto& name : value) {
      if (!name.is_string()) throw Error(ErrorKind::SchemaMismatch, "category names must be strings");
      names.push_back(name.get<std::string>());
    }
    seen[static_cast<std::size_t>(*axis)] = true;
  }
  for (const auto f : kFoundations) {
    if (!seen[static_cast<std::size_t>(f)] || map.of(f).empty()) {
      throw Error(ErrorKind::SchemaMismatch, "axis '" + std::string(toString(f)) + "' has no categories");
    }
  }
  return map;
}

void validateFoundationMap(const FoundationMap& map, const Lexicon& lexicon) {
  for (const auto f : kFoundations) {
    const auto& names = map.of(f);
    if (std::none_of(names.begin(), names.end(), [&](const std::string& n) { return lexicon.hasCategory(n); })) {
      throw Error(ErrorKind::SchemaMismatch,
                  "axis '" + std::string(toString(f)) + "' names no category present in the dictionary");
    }
  }
}

CorpusScorer::CorpusScorer(const Lexicon& lexicon, const FoundationMap& map) : lexicon_(&lexicon) {
  std::map<int, std::uint8_t> categoryAxes;
  for (const auto& [id, name] : lexicon.categories()) {
    std::uint8_t mask = 0;
    for (const auto f : kFoundations) {
      const auto& names = map.of(f);
      if (std::find(names.begin(), names.end(), name) != names.end()) mask |= axisBit(f);
    }
    categoryAxes[id] = mask;
  }
  entryAxes_.reserve(lexicon.entries().size());
  for (const auto& entry : lexicon.entries()) {
    std::uint8_t mask = 0;
    for (const int id : entry.categoryIds) mask |= categoryAxes[id];
    entryAxes_.push_back(mask);
  }
}

std::uint8_t CorpusScorer::axesOf(std::string_view token) const {
  std::uint8_t mask = 0;
  for (const auto idx : lexicon_->match(token)) mask |= entryAxes_[idx];
  return mask;
}

FoundationScores CorpusScorer::score(std::span<const std::string> docs, const std::string& label) const {
  FoundationScores scores;
  scores.communityLabel = label;
  for (const auto& doc : docs) {
    for (const auto& token : tokenize(doc)) {
      ++scores.tokenCount;
      const auto mask = axesOf(token);
      for (const auto f : kFoundations) {
        if (mask & axisBit(f)) ++scores.matches[static_cast<std::size_t>(f)];
      }
    }
  }
  if (scores.tokenCount == 0) throw Error(ErrorKind::EmptyCorpus, label);
  for (std::size_t a = 0; a < kFoundationCount; ++a) {
    scores.frequency[a] = static_cast<double>(scores.matches[a]) / static_cast<double>(scores.tokenCount);
  }
  return scores;
}

FoundationScores scoreCorpus(const Lexicon& lexicon, const FoundationMap& map, std::span<const std::string> docs,
                             const std::string& label) {
  return CorpusScorer(lexicon, map).score(docs, label);
}

std::vector<FoundationScores> scoreByCommunity(const Lexicon& lexicon, const FoundationMap& map,
                                               const std::map<std::string, std::vector<std::string>>& docsByCommunity) {
  const CorpusScorer scorer(lexicon, map);
  std::vector<FoundationScores> out;
  out.reserve(docsByCommunity.size());
  for (const auto& [label, docs] : docsByCommunity) out.push_back(scorer.score(docs, label));
  return out;
}

}  // namespace radscale
