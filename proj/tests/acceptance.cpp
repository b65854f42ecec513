#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace testing_support;

namespace {

constexpr double kCensusSeconds = 60.0;
constexpr double kEquivalenceSeconds = 300.0;
constexpr int kRandomPerSize = 10000;
constexpr int kSampledRls = 1000;
constexpr std::uint64_t kSeed = 20260419;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string code_of(const ChoiceFunction& c) {
  std::ostringstream out;
  for (Menu m : menus_in_order(c.size())) out << c(m);
  return out.str();
}

/// A simple cycle of length >= 3 through distinct items, by exhaustive DFS.
bool has_long_cycle(const std::vector<std::vector<bool>>& r) {
  const int n = static_cast<int>(r.size());
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<bool(int, int, int)> walk = [&](int start, int u, int len) {
    for (int v = start; v < n; ++v) {
      if (v == u || !r[u][v]) continue;
      if (v == start) {
        if (len >= 3) return true;
        continue;
      }
      if (on_path[v]) continue;
      on_path[v] = true;
      const bool found = walk(start, v, len + 1);
      on_path[v] = false;
      if (found) return true;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    on_path[s] = true;
    const bool found = walk(s, s, 1);
    on_path[s] = false;
    if (found) return true;
  }
  return false;
}

bool asymmetric(const std::vector<std::vector<bool>>& r) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (r[x][y] && r[y][x]) return false;
    }
  }
  return true;
}

Outcome census_exactness() {
  Outcome o;
  const auto t0 = Clock::now();
  const CensusTable t = classify_census(4, 1);
  const double sec = seconds_since(t0);
  o.require(t.total_functions == 20736, "total_functions");
  o.require(t.total_classes == 864, "total_classes");
  o.require(t.warp == 1, "warp");
  o.require(t.rls == 40, "rls");
  o.require(t.cla == 324, "cla");
  o.require(sec < kCensusSeconds, "runtime");
  o.detail << t.total_functions << " functions, " << t.total_classes << " classes, warp " << t.warp << ", rls "
           << t.rls << ", cla " << t.cla << ", " << sec << " s single-threaded";
  return o;
}

Outcome bound_table() {
  Outcome o;
  struct Cell {
    std::uint32_t q;
    int n;
    int stated;
  };
  const Cell cells[] = {{1, 16, -58},   {1, 20, -85},   {1, 28, -167},  {1, 32, -211},
                        {40, 16, -26},  {40, 20, -38},  {40, 28, -76},  {40, 32, -96},
                        {324, 16, -8},  {324, 20, -12}, {324, 28, -24}, {324, 32, -30}};
  for (const Cell& cell : cells) {
    const HereditaryBound b = hereditary_bound(cell.q, cell.n);
    o.require(b.magnitude <= cell.stated, "q=" + std::to_string(cell.q) + " n=" + std::to_string(cell.n));
    o.detail << "(" << cell.q << "," << cell.n << ")=" << b.magnitude << " ";
  }
  return o;
}

Outcome four_way_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  int rls = 0;
  for_all_choices(4, [&](const ChoiceFunction& c) {
    bool built = false;
    try {
      built = verify_rls_witness(c, build_rls_witness(c));
    } catch (const Error& e) {
      o.require(e.code() == Errc::NotRls, "unexpected error " + std::string(e.what()));
    }
    const bool asym = check_properties(revealed_salience_relation(c)).asymmetric;
    const bool no_conflict = find_conflicting_menus(c).empty();
    const bool warp_s = check_axiom(c, Axiom::WarpS).holds;
    const bool reference = oracle::rls(c);
    const bool agree = built == asym && asym == no_conflict && no_conflict == warp_s && warp_s == reference &&
                       is_rls(c).holds == reference;
    o.require(agree, "disagreement on " + code_of(c));
    rls += reference;
  });
  const double sec = seconds_since(t0);
  o.require(rls == 960, "960 RLS choices");
  o.require(sec < kEquivalenceSeconds, "runtime");
  o.detail << "20736 choices, " << rls << " RLS under all four tests and the oracle, " << sec << " s";
  return o;
}

Outcome asymmetry_implies_acyclicity() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  long checked = 0, asym_count = 0;
  auto visit = [&](const ChoiceFunction& c) {
    const auto r = oracle::salience(c);
    const PropertyReport p = check_properties(revealed_salience_relation(c));
    o.require(p.asymmetric == asymmetric(r), "library and oracle disagree on asymmetry");
    o.require(p.acyclic == !has_long_cycle(r), "library and oracle disagree on acyclicity");
    ++checked;
    if (!asymmetric(r)) return;
    ++asym_count;
    o.require(!has_long_cycle(r), "asymmetric but cyclic: " + code_of(c));
  };
  for_all_choices(4, visit);
  long random_asym = 0;
  for (int n : {5, 6}) {
    const auto g = GroundSet::letters(n);
    const long before = asym_count;
    for (int i = 0; i < kRandomPerSize; ++i) visit(random_choice(g, rng));
    random_asym += asym_count - before;
    for (int i = 0; i < kRandomPerSize / 10; ++i) visit(random_rls_choice(n, rng));
  }
  RlsSampler sampler(5);
  for (int i = 0; i < kRandomPerSize / 10; ++i) visit(sampler.draw(rng));
  o.detail << checked << " choices (n=4 exhaustive, " << kRandomPerSize << " uniform each at n=5,6, "
           << kRandomPerSize / 10 << " generated RLS each at n=5,6, " << kRandomPerSize / 10
           << " sampled RLS at n=5); " << asym_count << " asymmetric, " << random_asym
           << " of them uniform draws; 0 cyclic required";
  return o;
}

Outcome rls_equals_csla() {
  Outcome o;
  int witnesses = 0;
  for_all_choices(4, [&](const ChoiceFunction& c) {
    const bool rls = is_rls(c).holds;
    o.require(rls == is_csla_exhaustive(c), "is_rls vs exhaustive CSLA on " + code_of(c));
    if (!rls) return;
    o.require(verify_salient_filter(c, build_csla_witness(c)), "constructed filter fails on " + code_of(c));
    ++witnesses;
  });
  o.detail << "20736 choices agree; " << witnesses << " constructed filters verified";
  return o;
}

Outcome rls_within_cla() {
  Outcome o;
  int cla = 0;
  for_all_choices(4, [&](const ChoiceFunction& c) {
    const bool is_cla_choice = is_cla(c).holds;
    cla += is_cla_choice;
    if (is_rls(c).holds) o.require(is_cla_choice, "RLS but not CLA: " + code_of(c));
    o.require(revealed_preference_p(c).subset_of(revealed_preference_p_tilde(c)), "P not within P~: " + code_of(c));
  });
  o.detail << "RLS => CLA and P within P~ on 20736 choices; " << cla << " CLA choices";
  return o;
}

Outcome hereditariness() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 1);
  RlsSampler sampler(5);
  long subchoices = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < kSampledRls; ++i) {
    const ChoiceFunction c = sampler.draw(rng);
    o.require(oracle::rls(c), "sampled choice fails the oracle");
    for (Menu m : menus_in_order(5)) {
      if (m.size() < 3 || m.size() == 5) continue;
      const ChoiceFunction s = subchoice(c, m);
      o.require(is_rls(s).holds && oracle::rls(s), "non-RLS subchoice of " + code_of(c));
      ++subchoices;
    }
  }
  o.detail << kSampledRls << " uniform RLS choices at n=5 (" << sampler.equivalent_attempts()
           << " equivalent uniform draws), " << subchoices << " subchoices all RLS, " << seconds_since(t0) << " s";
  return o;
}

Outcome fixture_goldens() {
  Outcome o;
  for (const Fixture& f : builtin_fixtures()) {
    o.require(evaluate_fixture(f) == f.expected, "verdict map of " + f.id);
  }
  o.require(builtin_fixtures().size() == 8, "eight fixtures");
  o.require(canonical_form(fixture_choice("decoy")) == canonical_form(fixture_choice("handicap")),
            "decoy and handicap isomorphic");
  const ChoiceFunction shortlist = fixture_choice("shortlist");
  const ChoiceFunction weak = fixture_choice("weak_warp_violation");
  o.require(check_axiom(shortlist, Axiom::WeakWarp).holds && !is_rls(shortlist).holds, "Weak WARP without RLS");
  o.require(!check_axiom(weak, Axiom::WeakWarp).holds && is_rls(weak).holds, "RLS without Weak WARP");
  o.detail << builtin_fixtures().size() << " fixture maps match; decoy ~ handicap; Weak WARP and RLS independent";
  return o;
}

Outcome moodiness() {
  Outcome o;
  long moody = 0, warp_choices = 0;
  for (int n : {3, 4}) {
    for_all_choices(n, [&](const ChoiceFunction& c) {
      const int k = minimal_rationale_count(c);
      moody += k == n;
      if (oracle::warp(c)) {
        ++warp_choices;
        o.require(k == 1, "WARP choice needs more than one rationale");
      }
    });
  }
  o.require(moody == 0, "moody choice found");
  std::mt19937_64 rng(kSeed + 2);
  for (int trial = 0; trial < 20; ++trial) {
    o.require(minimal_rationale_count(choice_from_order(GroundSet::letters(5), random_order(5, rng))) == 1,
              "WARP choice on five items");
  }
  const int luce = minimal_rationale_count(fixture_choice("luce_raiffa"));
  o.require(luce == 2, "frog's legs dinner k=2");
  int flipped = 0;
  for (int n = 6; n <= 10; ++n) {
    std::vector<Item> best_first;
    for (Item x = n - 1; x >= 0; --x) best_first.push_back(x);
    for (FillRule fill : {FillRule::Worst, FillRule::Best}) {
      const ChoiceFunction c = make_flipped_choice(n, fill);
      o.require(check_flipped(c, LinearOrder(best_first)).holds, "flipped round trip n=" + std::to_string(n));
      o.require(parse_choice_file(serialize_choice_file(c)) == c, "flipped file round trip");
      ++flipped;
    }
  }
  o.detail << "no moody choice at n=3,4; " << warp_choices << " WARP choices with k=1; frog's legs k=" << luce
           << "; " << flipped << " flipped choices round-trip";
  return o;
}

Outcome witness_replay() {
  Outcome o;
  long rls = 0, trivial = 0;
  for_all_choices(4, [&](const ChoiceFunction& c) {
    if (!is_rls(c).holds) return;
    ++rls;
    o.require(verify_rls_witness(c, build_rls_witness(c)), "RLS witness replay on " + code_of(c));
  });
  for (int n = 2; n <= 4; ++n) {
    for_all_choices(n, [&](const ChoiceFunction& c) {
      o.require(verify_rs_witness(c, trivial_rs(c)), "trivial witness replay");
      ++trivial;
    });
  }
  o.detail << rls << " RLS witnesses and " << trivial << " trivial witnesses replay";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"census exactness", census_exactness},
      {"hereditary bound table", bound_table},
      {"four-way RLS equivalence", four_way_equivalence},
      {"asymmetric salience is acyclic", asymmetry_implies_acyclicity},
      {"RLS equals CSLA", rls_equals_csla},
      {"RLS within CLA, P within P~", rls_within_cla},
      {"RLS is hereditary", hereditariness},
      {"fixture goldens", fixture_goldens},
      {"moodiness and flipped choices", moodiness},
      {"witness replay", witness_replay},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
