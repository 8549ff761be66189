#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace radscale {

struct LexiconEntry {
  std::string pattern;        // lowercase, wildcard stripped
  bool isPrefix = false;      // source token ended with '*'
  std::vector<int> categoryIds;
};

// A LIWC-style moral foundations dictionary.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::map<int, std::string> categories, std::vector<LexiconEntry> entries);

  const std::map<int, std::string>& categories() const noexcept { return categories_; }
  const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }
  bool hasCategory(std::string_view name) const;

  // Indices of the entries matching a lowercase token: exact patterns equal
  // to it and prefix patterns it starts with.
  std::vector<std::size_t> match(std::string_view token) const;

 private:
  std::map<int, std::string> categories_;
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> exact_;
  std::unordered_map<std::string, std::vector<std::size_t>> prefix_;
  std::size_t longestPrefix_ = 0;
};

// Percent-delimited .dic: a category block ("id name" lines) between two
// lines holding only '%', then "pattern<TAB>id [id ...]" entries.
// Throws MissingDelimiter, LineError(UnknownCategoryId) or LineError(MalformedLine).
Lexicon parseMfdDic(std::istream& in);

// Lowercases and segments text into letter runs (Unicode-aware, combining
// marks kept with their base). @-handles, URLs, digits and punctuation are dropped.
std::vector<std::string> tokenize(std::string_view text);

std::string toLowerUtf8(std::string_view text);

// Radicalization axes. Care is deliberately not an axis.
enum class Foundation : std::uint8_t { Fairness, IngroupLoyalty, Authority, Purity };
inline constexpr std::size_t kFoundationCount = 4;
inline constexpr std::array<Foundation, kFoundationCount> kFoundations = {
    Foundation::Fairness, Foundation::IngroupLoyalty, Foundation::Authority, Foundation::Purity};

std::string_view toString(Foundation f) noexcept;

// Which dictionary categories feed each foundation axis.
struct FoundationMap {
  std::array<std::vector<std::string>, kFoundationCount> categories;

  const std::vector<std::string>& of(Foundation f) const { return categories[static_cast<std::size_t>(f)]; }
};

// Virtue and vice categories merged per axis, using standard MFD category names.
FoundationMap defaultFoundationMap();

// JSON object {"Fairness": [...], "IngroupLoyalty": [...], "Authority": [...],
// "Purity": [...]}. "Care"/"Harm" keys are accepted and ignored; any other
// key, or a missing axis, throws SchemaMismatch.
FoundationMap parseFoundationMap(std::istream& in);

// Every axis must name at least one category present in the lexicon.
void validateFoundationMap(const FoundationMap& map, const Lexicon& lexicon);

struct FoundationScores {
  std::string communityLabel;
  std::size_t tokenCount = 0;
  std::array<std::size_t, kFoundationCount> matches{};
  std::array<double, kFoundationCount> frequency{};

  double of(Foundation f) const { return frequency[static_cast<std::size_t>(f)]; }
};

// Precomputes the category -> axis mapping once for repeated scoring.
class CorpusScorer {
 public:
  CorpusScorer(const Lexicon& lexicon, const FoundationMap& map);

  // Bitmask of the axes a token counts toward (bit i = kFoundations[i]).
  std::uint8_t axesOf(std::string_view token) const;

  // A token counts at most once per axis. Throws EmptyCorpus when the
  // documents hold no tokens.
  FoundationScores score(std::span<const std::string> docs, const std::string& label) const;

 private:
  const Lexicon* lexicon_;
  std::vector<std::uint8_t> entryAxes_;
};

FoundationScores scoreCorpus(const Lexicon& lexicon, const FoundationMap& map, std::span<const std::string> docs,
                             const std::string& label);

// One score per community, ordered by label.
std::vector<FoundationScores> scoreByCommunity(const Lexicon& lexicon, const FoundationMap& map,
                                               const std::map<std::string, std::vector<std::string>>& docsByCommunity);

}  // namespace radscale
