#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "radscale/error.hpp"
#include "radscale/lexicon.hpp"
#include "radscale/synth.hpp"

using namespace radscale;

namespace {

Lexicon parse(const std::string& text) {
  std::istringstream in(text);
  return parseMfdDic(in);
}

FoundationMap loyaltyOnlyMap() {
  FoundationMap map = defaultFoundationMap();
  return map;
}

std::size_t index(Foundation f) { return static_cast<std::size_t>(f); }

}  // namespace

TEST_CASE("parseMfdDic minimal file") {
  const Lexicon lex = parse("%\n1\tIngroupVirtue\n%\nloyal*\t1\n");
  REQUIRE(lex.categories().size() == 1);
  CHECK(lex.categories().at(1) == "IngroupVirtue");
  REQUIRE(lex.entries().size() == 1);
  CHECK(lex.entries()[0].pattern == "loyal");
  CHECK(lex.entries()[0].isPrefix);
}

TEST_CASE("parseMfdDic multi-category entries and case folding") {
  const Lexicon lex = parse("%\n1\tFairnessVirtue\n2\tFairnessVice\n%\nFair\t1 2\nJUSTIÇA*\t1\n");
  REQUIRE(lex.entries().size() == 2);
  CHECK(lex.entries()[0].pattern == "fair");
  CHECK_FALSE(lex.entries()[0].isPrefix);
  CHECK(lex.entries()[0].categoryIds == std::vector<int>{1, 2});
  CHECK(lex.entries()[1].pattern == "justiça");
}

TEST_CASE("parseMfdDic errors") {
  try {
    parse("%\n1\tIngroupVirtue\n%\nloyal*\t9\n");
    FAIL("expected UnknownCategoryId");
  } catch (const LineError& e) {
    CHECK((e.kind() == ErrorKind::UnknownCategoryId));
    CHECK(e.line() == 4);
  }
  try {
    parse("1\tIngroupVirtue\n%\nloyal*\t1\n");
    FAIL("expected MissingDelimiter");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::MissingDelimiter));
  }
  try {
    parse("%\n1\tIngroupVirtue\nloyal*\t1\n");
    FAIL("expected MissingDelimiter");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::MissingDelimiter));
  }
  try {
    parse("%\n1\tIngroupVirtue\n%\nloyal*\n");
    FAIL("expected MalformedLine");
  } catch (const LineError& e) {
    CHECK((e.kind() == ErrorKind::MalformedLine));
    CHECK(e.line() == 4);
  }
  try {
    parse("%\none\tIngroupVirtue\n%\n");
    FAIL("expected MalformedLine");
  } catch (const LineError& e) {
    CHECK((e.kind() == ErrorKind::MalformedLine));
  }
}

TEST_CASE("tokenize") {
  CHECK(tokenize("Lealdade à Nação!") == std::vector<std::string>{"lealdade", "à", "nação"});
  CHECK(tokenize("RT @user http://x.co vote") == std::vector<std::string>{"rt", "vote"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("2022 #Brasil, (@joão_1) www.site.br/a?b=c ok") == std::vector<std::string>{"brasil", "ok"});
  CHECK(tokenize("ÁGUA e PÃO") == std::vector<std::string>{"água", "e", "pão"});
  // Decomposed diacritic (a + combining tilde) stays inside the word.
  CHECK(tokenize("na\xCC\x83o") == std::vector<std::string>{"na\xCC\x83o"});
  CHECK(tokenize("abc123def") == std::vector<std::string>{"abc", "def"});
}

TEST_CASE("prefix versus exact matching") {
  const Lexicon prefix = parse("%\n3\tIngroupVirtue\n%\nloyal*\t3\n");
  CHECK_FALSE(prefix.match("loyal").empty());
  CHECK_FALSE(prefix.match("loyalty").empty());
  CHECK(prefix.match("loya").empty());
  CHECK(prefix.match("disloyal").empty());

  const Lexicon exact = parse("%\n3\tIngroupVirtue\n%\nloyal\t3\n");
  CHECK_FALSE(exact.match("loyal").empty());
  CHECK(exact.match("loyalty").empty());
}

TEST_CASE("scoreCorpus hand-counted frequencies") {
  const Lexicon lex = parse("%\n3\tIngroupVirtue\n%\nloyal*\t3\n");
  const std::vector<std::string> docs = {"loyalty means loyal friends"};
  const auto scores = scoreCorpus(lex, loyaltyOnlyMap(), docs, "c");
  CHECK(scores.tokenCount == 4);
  CHECK(scores.matches[index(Foundation::IngroupLoyalty)] == 2);
  CHECK(scores.of(Foundation::IngroupLoyalty) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(scores.of(Foundation::IngroupLoyalty) == 0.5);
  CHECK(scores.of(Foundation::Authority) == 0.0);

  const std::vector<std::string> none = {"nothing here at all"};
  const auto zero = scoreCorpus(lex, loyaltyOnlyMap(), none, "z");
  for (const double f : zero.frequency) CHECK(f == 0.0);

  const std::vector<std::string> empty = {"", "123 !!"};
  try {
    scoreCorpus(lex, loyaltyOnlyMap(), empty, "e");
    FAIL("expected EmptyCorpus");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::EmptyCorpus));
  }
}

TEST_CASE("a token in two categories of one axis counts once") {
  const Lexicon lex = parse("%\n3\tIngroupVirtue\n4\tIngroupVice\n5\tAuthorityVirtue\n%\nnation*\t3\nnational\t4 5\n");
  const std::vector<std::string> docs = {"national pride"};
  const auto scores = scoreCorpus(lex, defaultFoundationMap(), docs, "c");
  CHECK(scores.matches[index(Foundation::IngroupLoyalty)] == 1);
  CHECK(scores.matches[index(Foundation::Authority)] == 1);
  CHECK(scores.of(Foundation::IngroupLoyalty) == 0.5);
}

TEST_CASE("frequency invariants") {
  std::istringstream dic(syntheticDictionary());
  const Lexicon lex = parseMfdDic(dic);
  const FoundationMap map = defaultFoundationMap();
  const std::vector<std::string> words = {"order", "obey", "loyal", "justice", "pure", "city", "news", "vote", "fairly"};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::string> docs;
    for (std::size_t d = 0; d < 1 + rng() % 6; ++d) {
      std::string text;
      for (std::size_t w = 0; w < 1 + rng() % 12; ++w) text += words[rng() % words.size()] + " ";
      docs.push_back(text);
    }
    const auto base = scoreCorpus(lex, map, docs, "c");
    for (const double f : base.frequency) {
      CHECK(f >= 0.0);
      CHECK(f <= 1.0);
    }
    auto doubled = docs;
    doubled.insert(doubled.end(), docs.begin(), docs.end());
    CHECK(scoreCorpus(lex, map, doubled, "c").frequency == base.frequency);

    auto shuffled = docs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(scoreCorpus(lex, map, shuffled, "c").frequency == base.frequency);

    auto diluted = docs;
    diluted.push_back("city news vote");
    const auto lower = scoreCorpus(lex, map, diluted, "c");
    for (std::size_t a = 0; a < kFoundationCount; ++a) {
      if (base.frequency[a] == 0.0) {
        CHECK(lower.frequency[a] == 0.0);
      } else {
        CHECK(lower.frequency[a] < base.frequency[a]);
      }
    }
  }
}

TEST_CASE("scoreByCommunity") {
  std::istringstream dic(syntheticDictionary());
  const Lexicon lex = parseMfdDic(dic);
  const FoundationMap map = defaultFoundationMap();

  // A: 4 authority words in 20 tokens, B: 2 in 20.
  std::map<std::string, std::vector<std::string>> docs;
  docs["B"] = {"order city news vote game music street today people city",
               "obey city news vote game music street today people city"};
  docs["A"] = {"order obey city news vote game music street today people",
               "order obey city news vote game music street today people"};
  const auto scores = scoreByCommunity(lex, map, docs);
  REQUIRE(scores.size() == 2);
  CHECK(scores[0].communityLabel == "A");
  CHECK(scores[1].communityLabel == "B");
  CHECK(std::abs(scores[0].of(Foundation::Authority) - 2.0 * scores[1].of(Foundation::Authority)) <= 1e-12);

  docs["C"] = docs["A"];
  const auto again = scoreByCommunity(lex, map, docs);
  CHECK(again[0].frequency == again[2].frequency);

  docs["D"] = {"42"};
  try {
    scoreByCommunity(lex, map, docs);
    FAIL("expected EmptyCorpus");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::EmptyCorpus));
    CHECK(std::string(e.what()).find("D") != std::string::npos);
  }
}

TEST_CASE("foundation map parsing and validation") {
  std::istringstream good(R"({"Fairness":["FairnessVirtue"],"IngroupLoyalty":["IngroupVirtue","IngroupVice"],
                              "Authority":["AuthorityVirtue"],"Purity":["PurityVirtue"],"Care":["HarmVirtue"]})");
  const auto map = parseFoundationMap(good);
  CHECK(map.of(Foundation::IngroupLoyalty).size() == 2);

  std::istringstream missing(R"({"Fairness":["FairnessVirtue"]})");
  CHECK_THROWS_AS(parseFoundationMap(missing), Error);
  std::istringstream unknown(R"({"Fairness":["a"],"IngroupLoyalty":["b"],"Authority":["c"],"Purity":["d"],"Liberty":["e"]})");
  CHECK_THROWS_AS(parseFoundationMap(unknown), Error);

  const Lexicon lex = parse("%\n3\tIngroupVirtue\n%\nloyal*\t3\n");
  CHECK_THROWS_AS(validateFoundationMap(defaultFoundationMap(), lex), Error);
  std::istringstream dic(syntheticDictionary());
  CHECK_NOTHROW(validateFoundationMap(defaultFoundationMap(), parseMfdDic(dic)));
}
