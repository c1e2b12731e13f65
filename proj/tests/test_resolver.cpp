#include <doctest.h>

#include <random>
#include <sstream>

#include "nca/hierarchy.hpp"
#include "nca/resolver.hpp"
#include "support.hpp"

using namespace nca;
using nca::test::code;

namespace {

NCATable reference() { return load_table_file(test::fixture("reference_nca.tsv")); }

}  // namespace

TEST_CASE("nouns missing from the table fall back to their class") {
  auto t = reference();
  auto apple = resolve("appern", code("13114"), ClassifierType::Unit, t);
  CHECK(apple.classifier == "luuk");
  CHECK(apple.provenance == Provenance::ClassExact);
  CHECK(apple.via_class == code("13114"));

  auto magpie = resolve("gangken", code("13111"), ClassifierType::Collective, t);
  CHECK(magpie.classifier == "fuung");
  CHECK(magpie.provenance == Provenance::ClassExact);
}

TEST_CASE("known nouns resolve directly") {
  auto t = reference();
  auto r = resolve("khon", code("111"), ClassifierType::Unit, t);
  CHECK(r.classifier == "khon");
  CHECK(r.provenance == Provenance::Direct);
  CHECK(provenance_string(r) == "direct");

  // thahan's own winner (khon 17) is returned even though naai exists.
  CHECK(resolve("thahan", code("111"), ClassifierType::Unit, t).classifier ==
        "khon");
  // Direct lookup needs the (noun, class) key.
  CHECK(resolve("som", code("13111"), ClassifierType::Unit, t).provenance ==
        Provenance::ClassExact);
}

TEST_CASE("plant collective walks up to the root and finds nothing") {
  auto t = reference();
  auto r = resolve("mamuang", code("13113"), ClassifierType::Collective, t);
  CHECK_FALSE(r.classifier);
  CHECK(r.provenance == Provenance::None);
  CHECK(provenance_string(r) == "none");
  auto unit = resolve("mamuang", code("13113"), ClassifierType::Unit, t);
  CHECK(unit.classifier == "ton");
  CHECK(unit.provenance == Provenance::ClassExact);
}

TEST_CASE("ancestor fallback picks the nearest class with data") {
  auto t = reference();
  t.add("sat", code("131"), "tua", ClassifierType::Collective, 2);
  t.add("sing", code("1"), "an", ClassifierType::Collective, 50);
  auto r = resolve("mamuang", code("13113"), ClassifierType::Collective, t);
  CHECK(r.classifier == "tua");
  CHECK(r.provenance == Provenance::ClassAncestor);
  CHECK(r.via_class == code("131"));
  CHECK(provenance_string(r) == "ancestor:131");
}

TEST_CASE("resolution invariants over random tables") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> len(1, 4), digit(1, 2), coin(0, 1),
      freq(1, 9), count(0, 25);
  auto random_code = [&] {
    std::string s;
    for (int k = len(rng); k > 0; --k) s += char('0' + digit(rng));
    return code(s);
  };
  const std::vector<std::string> nouns = {"a", "b", "c"};
  const std::vector<std::string> cls = {"x", "y", "z"};
  for (int iter = 0; iter < 300; ++iter) {
    NCATable t;
    for (int k = count(rng); k > 0; --k)
      t.add(nouns[rng() % 3], random_code(), cls[rng() % 3],
            coin(rng) ? ClassifierType::Unit : ClassifierType::Collective,
            freq(rng));
    auto q = random_code();
    auto type = coin(rng) ? ClassifierType::Unit : ClassifierType::Collective;
    auto noun = nouns[rng() % 3];
    auto r = resolve(noun, q, type, t);

    CHECK((r.provenance == Provenance::None) == !r.classifier);
    bool has_direct = false;
    for (const auto& e : t.entries_for_noun(noun))
      has_direct |= e.noun_class == q && e.cltype == type;
    CHECK((r.provenance == Provenance::Direct) == has_direct);
    if (r.provenance == Provenance::ClassAncestor) {
      REQUIRE(r.via_class);
      CHECK(is_ancestor(*r.via_class, q));
      CHECK_FALSE(representative_for_class(t, q, type));
      for (const auto& up : ancestors(q)) {
        if (up == *r.via_class) break;
        CHECK_FALSE(representative_for_class(t, up, type));
      }
    }
  }
}

TEST_CASE("resolve_batch keeps order and reports bad lines") {
  auto t = reference();
  std::istringstream empty("");
  CHECK(resolve_batch(empty, t).empty());

  std::istringstream in(
      "appern\t13114\t1\n"
      "khon\t111\t1\n"
      "broken line\n"
      "gangken\t13111\t2\n");
  auto records = resolve_batch(in, t);
  REQUIRE(records.size() == 4);
  CHECK(std::holds_alternative<MalformedQueryLine>(records[2]));
  CHECK(std::get<MalformedQueryLine>(records[2]).line() == 3);

  std::vector<std::string> lines;
  for (std::size_t i : {0u, 1u, 3u})
    lines.push_back(render_resolution(std::get<ResolvedQuery>(records[i])));
  CHECK(lines == std::vector<std::string>{"appern\tluuk\tclass",
                                          "khon\tkhon\tdirect",
                                          "gangken\tfuung\tclass"});

  // Batch answers equal one-at-a-time answers.
  for (std::size_t i : {0u, 1u, 3u}) {
    const auto& rq = std::get<ResolvedQuery>(records[i]);
    CHECK(rq.resolution ==
          resolve(rq.query.noun, rq.query.noun_class, rq.query.cltype, t));
  }
}

TEST_CASE("query line errors") {
  CHECK_THROWS_AS(parse_query_line("a\t1", 1), MalformedQueryLine);
  CHECK_THROWS_AS(parse_query_line("a\t10\t1", 1), MalformedQueryLine);
  CHECK_THROWS_AS(parse_query_line("a\t1\t3", 1), MalformedQueryLine);
  CHECK_THROWS_AS(parse_query_line("a/b\t1\t1", 1), MalformedQueryLine);
}
