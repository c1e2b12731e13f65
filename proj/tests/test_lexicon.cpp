#include <doctest.h>

#include <random>

#include "nca/errors.hpp"
#include "nca/lexicon.hpp"
#include "support.hpp"

using namespace nca;
using nca::test::lexicon_from;

TEST_CASE("load_lexicon maps fields") {
  auto lex = lexicon_from(
      "# comment\n"
      "khon\tCL\t\t500\t1\n"
      "\n"
      "nok\tNCMN\t13111\t42\t\n");
  CHECK(lex.size() == 2);

  auto khon = lex.lookup("khon");
  REQUIRE(khon.size() == 1);
  CHECK(khon[0].pos == PosTag::Kind::CL);
  CHECK_FALSE(khon[0].sem);
  CHECK(khon[0].freq == 500);
  CHECK(khon[0].cltype == ClassifierType::Unit);

  auto nok = lex.lookup("nok");
  REQUIRE(nok.size() == 1);
  CHECK(nok[0].pos == PosTag::Kind::NCMN);
  CHECK(nok[0].sem->str() == "13111");
  CHECK(nok[0].freq == 42);
  CHECK_FALSE(nok[0].cltype);
}

TEST_CASE("load_lexicon errors") {
  CHECK_THROWS_AS(lexicon_from("khon\tCL\t\t500\t1\nkhon\tCL\t\t500\t1\n"),
                  DuplicateEntry);
  CHECK_THROWS_AS(lexicon_from("khon\tCL\t\t500\n"), MalformedLexLine);
  CHECK_THROWS_AS(lexicon_from("khon\tCL\t\tmany\t1\n"), MalformedLexLine);
  CHECK_THROWS_AS(lexicon_from("khon\tCL\t\t-3\t1\n"), MalformedLexLine);
  CHECK_THROWS_AS(lexicon_from("khon\tCL\t\t5\t3\n"), MalformedLexLine);
  // CL without a type is rejected rather than defaulted.
  CHECK_THROWS_AS(lexicon_from("khon\tCL\t\t5\t\n"), MalformedLexLine);
  CHECK_THROWS_AS(lexicon_from("nok\tNCMN\t\t5\t1\n"), MalformedLexLine);
  CHECK_THROWS_AS(lexicon_from("nok\tNCMN\t1x\t5\t\n"), MalformedLexLine);

  try {
    lexicon_from("a\tNCMN\t\t1\t\n\nb\tCL\t\t1\t\n");
    FAIL("expected MalformedLexLine");
  } catch (const MalformedLexLine& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("same surface under different POS or class is allowed") {
  auto lex = lexicon_from(
      "khon\tCL\t\t500\t1\n"
      "khon\tNCMN\t111\t120\t\n"
      "khon\tNCMN\t112\t120\t\n");
  CHECK(lex.lookup("khon").size() == 3);
}

TEST_CASE("lookup order: freq desc, then POS label, then class") {
  auto lex = lexicon_from(
      "x\tNCMN\t\t3\t\n"
      "x\tCL\t\t10\t1\n"
      "y\tVERB\t\t5\t\n"
      "y\tNCMN\t2\t5\t\n"
      "y\tNCMN\t1\t5\t\n"
      "y\tDET\t\t5\t\n");
  CHECK(lex.lookup("absent").empty());

  auto x = lex.lookup("x");
  REQUIRE(x.size() == 2);
  CHECK(x[0].freq == 10);
  CHECK(x[1].freq == 3);

  // By hand: DET < NCMN(1) < NCMN(2) < VERB.
  auto y = lex.lookup("y");
  REQUIRE(y.size() == 4);
  CHECK(y[0].pos == PosTag::Kind::DET);
  CHECK(y[1].sem->str() == "1");
  CHECK(y[2].sem->str() == "2");
  CHECK(y[3].pos == PosTag::Kind::VERB);

  for (const auto& e : lex.lookup("y")) CHECK(e.surface == "y");
}

TEST_CASE("is_known_prefix") {
  CHECK_FALSE(Lexicon{}.is_known_prefix(""));
  auto lex = lexicon_from("nakrian\tNCMN\t111\t1\t\nnok\tNCMN\t\t1\t\n");
  CHECK(lex.is_known_prefix(""));
  CHECK(lex.is_known_prefix("nak"));
  CHECK(lex.is_known_prefix("nok"));
  CHECK_FALSE(lex.is_known_prefix("noka"));
  CHECK_FALSE(lex.is_known_prefix("z"));
}

TEST_CASE("is_known_prefix agrees with a linear scan") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> ch('a', 'd'), len(1, 8), nwords(1, 12);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<LexEntry> entries;
    std::vector<std::string> surfaces;
    for (int n = nwords(rng); n > 0; --n) {
      std::string w;
      for (int k = len(rng); k > 0; --k) w += char(ch(rng));
      if (std::find(surfaces.begin(), surfaces.end(), w) != surfaces.end())
        continue;
      surfaces.push_back(w);
      entries.push_back({w, PosTag::Kind::NCMN, std::nullopt, 1, std::nullopt});
    }
    auto lex = Lexicon::from_entries(entries);
    for (int q = 0; q < 20; ++q) {
      std::string probe;
      for (int k = std::uniform_int_distribution<int>(0, 8)(rng); k > 0; --k)
        probe += char(ch(rng));
      bool expected = false;
      for (const auto& s : surfaces)
        if (s.compare(0, probe.size(), probe) == 0 && s.size() >= probe.size())
          expected = true;
      CHECK(lex.is_known_prefix(probe) == expected);
    }
  }
}
