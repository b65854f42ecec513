#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing_support;

namespace {

bool same_relation(const Relation& r, const std::vector<std::vector<bool>>& o) {
  for (Item x = 0; x < r.size(); ++x) {
    for (Item y = 0; y < r.size(); ++y) {
      if (r.holds(x, y) != o[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("revealed salience of the frog's legs dinner") {
  const ChoiceFunction c = fixture_choice("luce_raiffa");
  const RevealedSalience rs = revealed_salience(c);
  const Item cc = item_of(c, "c"), f = item_of(c, "f"), s = item_of(c, "s");
  CHECK(rs.relation == Relation::from_pairs(3, std::vector<std::pair<Item, Item>>{{f, cc}, {f, s}}));
  CHECK(rs.provenance.at({f, cc}).base == menu_of(c, {"c", "s"}));
  CHECK(transitive_closure(rs.relation) == rs.relation);
}

TEST_CASE("revealed salience of the acyclic, non-asymmetric example") {
  const ChoiceFunction c = fixture_choice("acyclic_not_asymmetric");
  const Relation r = revealed_salience_relation(c);
  const Item x = item_of(c, "x"), y = item_of(c, "y"), z = item_of(c, "z");
  CHECK(r == Relation::from_pairs(3, std::vector<std::pair<Item, Item>>{{x, y}, {x, z}, {y, x}, {y, z}}));
  const PropertyReport p = check_properties(r);
  CHECK(p.acyclic);
  CHECK_FALSE(p.asymmetric);

  const AxiomVerdict v = is_rls(c);
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness);
  const Witness& w = *v.witness;
  REQUIRE(w.menus.size() == 4);
  // Both switches replay and reveal x |= y and y |= x.
  CHECK(oracle::minimal_switch(c, w.menus[0].mask(), w.items[0]));
  CHECK(w.menus[0].contains(w.items[1]));
  CHECK(oracle::minimal_switch(c, w.menus[2].mask(), w.items[1]));
  CHECK(w.menus[2].contains(w.items[0]));
  try {
    build_rls_witness(c);
    FAIL("expected NotRls");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotRls);
  }
}

TEST_CASE("relation matches the definition on four items and random five") {
  for_all_choices(4, [](const ChoiceFunction& c) {
    REQUIRE(same_relation(revealed_salience_relation(c), oracle::salience(c)));
    REQUIRE(revealed_salience(c).relation == revealed_salience_relation(c));
  });
  std::mt19937_64 rng(31);
  auto g = GroundSet::letters(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const ChoiceFunction c = random_choice(g, rng);
    REQUIRE(same_relation(revealed_salience_relation(c), oracle::salience(c)));
  }
}

TEST_CASE("is_rls matches a direct search over total preorders on four items") {
  int rls = 0;
  for_all_choices(4, [&](const ChoiceFunction& c) {
    const bool v = is_rls(c).holds;
    REQUIRE(v == oracle::rls(c));
    rls += v;
  });
  CHECK(rls == 40 * 24);
}

TEST_CASE("constructed witness for the frog's legs dinner") {
  const ChoiceFunction c = fixture_choice("luce_raiffa");
  const RlsWitness w = build_rls_witness(c);
  const Item cc = item_of(c, "c"), f = item_of(c, "f"), s = item_of(c, "s");
  CHECK(w.salience == std::vector<std::vector<Item>>{{f}, {cc}, {s}});
  CHECK(w.rationales[static_cast<std::size_t>(f)].items() == std::vector<Item>{s, cc, f});
  CHECK(w.rationales[static_cast<std::size_t>(cc)].items() == std::vector<Item>{cc, f, s});
  CHECK(w.rationales[static_cast<std::size_t>(s)].items() == std::vector<Item>{cc, f, s});
  CHECK(verify_rls_witness(c, w));
}

TEST_CASE("published class witnesses replay") {
  for (const char* id : {"luce_raiffa", "decoy", "compromise", "handicap"}) {
    CAPTURE(id);
    const ChoiceFunction c = fixture_choice(id);
    const RlsWitness w = rls_witness_from_json(c.ground(), json::parse(fixture_by_id(id).witness));
    CHECK(verify_rls_witness(c, w));
    CHECK(verify_rls_witness(c, build_rls_witness(c)));
  }
}

TEST_CASE("malformed witnesses are rejected") {
  const ChoiceFunction c = fixture_choice("luce_raiffa");
  const RlsWitness good = rls_witness_from_json(c.ground(), json::parse(fixture_by_id("luce_raiffa").witness));
  REQUIRE(verify_rls_witness(c, good));

  RlsWitness missing = good;
  missing.salience.pop_back();
  CHECK_FALSE(verify_rls_witness(c, missing));

  RlsWitness repeated = good;
  repeated.salience.push_back({0});
  CHECK_FALSE(verify_rls_witness(c, repeated));

  RlsWitness abnormal = good;  // c and s share a class but not a rationale
  abnormal.rationales[static_cast<std::size_t>(item_of(c, "s"))] = LinearOrder({2, 0, 1});
  CHECK_FALSE(verify_rls_witness(c, abnormal));

  RlsWitness wrong = good;  // f no longer most salient
  std::swap(wrong.salience[0], wrong.salience[1]);
  CHECK_FALSE(verify_rls_witness(c, wrong));

  RlsWitness short_family = good;
  short_family.rationales.pop_back();
  CHECK_FALSE(verify_rls_witness(c, short_family));
}

TEST_CASE("generated RLS choices are recognized and witnessed") {
  std::mt19937_64 rng(37);
  for (int n = 3; n <= 9; ++n) {
    for (int trial = 0; trial < (n <= 6 ? 300 : 20); ++trial) {
      const ChoiceFunction c = random_rls_choice(n, rng);
      REQUIRE(is_rls(c).holds);
      REQUIRE(check_axiom(c, Axiom::WarpS).holds);
      REQUIRE(verify_rls_witness(c, build_rls_witness(c)));
    }
  }
}

TEST_CASE("witness construction is gated") {
  auto g = GroundSet::letters(17);
  const ChoiceFunction c = choice_from_order(g, LinearOrder::identity(17));
  try {
    build_rls_witness(c);
    FAIL("expected GroundTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GroundTooLarge);
  }
}
