#include "salience/lab.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "salience/attention.hpp"
#include "salience/salience.hpp"

namespace salience {

int RsWitness::distinct_count() const {
  std::set<std::vector<Item>> seen;
  for (const auto& r : rationales) seen.insert(r.items());
  return static_cast<int>(seen.size());
}

bool verify_rs_witness(const ChoiceFunction& c, const RsWitness& w) {
  const int n = c.size();
  if (w.salience.size() != n || static_cast<int>(w.rationales.size()) != n) return false;
  for (const auto& r : w.rationales) {
    if (r.size() != n) return false;
  }
  for (Item x = 0; x < n; ++x) {
    if (!w.salience.holds(x, x)) return false;
  }
  if (find_cycle(w.salience.strict_part())) return false;
  for (Menu a : menus_in_order(n)) {
    bool justified = false;
    for_each_member(maximal_elements(a, w.salience), [&](Item x) {
      if (w.rationales[static_cast<std::size_t>(x)].top(a) == c(a)) justified = true;
    });
    if (!justified) return false;
  }
  return true;
}

namespace {

Relation identity_relation(int n) {
  Relation r(n);
  for (Item x = 0; x < n; ++x) r.set(x, x);
  return r;
}

}  // namespace

RsWitness trivial_rs(const ChoiceFunction& c) {
  const int n = c.size();
  RsWitness w{identity_relation(n), {}};
  for (Item x = 0; x < n; ++x) {
    std::vector<Item> order{x};
    for (Item y = 0; y < n; ++y) {
      if (y != x) order.push_back(y);
    }
    w.rationales.emplace_back(std::move(order));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Moodiness: partition items into blocks sharing a rationale, then search
// for one strict order per block such that every menu has a member whose
// block order puts the chosen item on top.

namespace {

class BlockSearch {
 public:
  BlockSearch(const ChoiceFunction& c, std::vector<int> block_of, int blocks)
      : c_(c), n_(c.size()), members_(static_cast<std::size_t>(blocks), 0),
        closure_(static_cast<std::size_t>(blocks), std::vector<std::uint32_t>(static_cast<std::size_t>(c.size()), 0)),
        block_of_(std::move(block_of)) {
    for (Item x = 0; x < n_; ++x) members_[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(x)])] |= 1u << x;
    menus_ = menus_in_order(n_);
    std::stable_sort(menus_.begin(), menus_.end(), [](Menu a, Menu b) { return a.size() > b.size(); });
  }

  bool solve() { return solve(0); }

  RsWitness witness() const {
    RsWitness w{identity_relation(n_), {}};
    for (Item x = 0; x < n_; ++x) {
      const auto& rows = closure_[static_cast<std::size_t>(block_of_[static_cast<std::size_t>(x)])];
      Relation r(n_);
      for (Item u = 0; u < n_; ++u) for_each_member(Menu(rows[static_cast<std::size_t>(u)]), [&](Item v) { r.set(u, v); });
      w.rationales.push_back(linear_extension(r));
    }
    return w;
  }

 private:
  bool solve(std::size_t i) {
    if (i == menus_.size()) return true;
    const Menu a = menus_[i];
    const Item y = c_(a);
    const std::uint32_t rest = a.without(y).mask();
    const auto blocks = static_cast<int>(members_.size());
    for (int b = 0; b < blocks; ++b) {
      if ((members_[static_cast<std::size_t>(b)] & a.mask()) == 0) continue;
      if ((closure_[static_cast<std::size_t>(b)][static_cast<std::size_t>(y)] & rest) == rest) return solve(i + 1);
    }
    for (int b = 0; b < blocks; ++b) {
      if ((members_[static_cast<std::size_t>(b)] & a.mask()) == 0) continue;
      auto& rows = closure_[static_cast<std::size_t>(b)];
      bool cyclic = false;
      std::uint32_t reach = rest;
      for_each_member(Menu(rest), [&](Item o) {
        if ((rows[static_cast<std::size_t>(o)] >> y) & 1u) cyclic = true;
        reach |= rows[static_cast<std::size_t>(o)];
      });
      if (cyclic) continue;
      const std::vector<std::uint32_t> saved = rows;
      for (Item u = 0; u < n_; ++u) {
        if (u == y || ((rows[static_cast<std::size_t>(u)] >> y) & 1u)) rows[static_cast<std::size_t>(u)] |= reach;
      }
      if (solve(i + 1)) return true;
      rows = saved;
    }
    return false;
  }

  const ChoiceFunction& c_;
  int n_;
  std::vector<Menu> menus_;
  std::vector<std::uint32_t> members_;
  std::vector<std::vector<std::uint32_t>> closure_;
  std::vector<int> block_of_;
};

/// Calls fn(block_of) for each partition of n items into exactly k blocks,
/// as restricted growth strings; stops when fn returns true.
template <class Fn>
bool for_each_partition(int n, int k, Fn&& fn) {
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int used) -> bool {
    if (n - i < k - used) return false;
    if (i == n) return used == k && fn(rgs);
    for (int b = 0; b <= std::min(used, k - 1); ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      if (self(self, i + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

void check_moodiness_gate(const ChoiceFunction& c) {
  if (c.size() > kMaxMoodinessItems) {
    throw Error(Errc::GroundTooLarge,
                "rationale search is limited to " + std::to_string(kMaxMoodinessItems) + " items");
  }
}

}  // namespace

RsWitness minimal_rationale_witness(const ChoiceFunction& c) {
  check_moodiness_gate(c);
  const int n = c.size();
  for (int k = 1; k <= n; ++k) {
    std::optional<RsWitness> found;
    for_each_partition(n, k, [&](const std::vector<int>& block_of) {
      BlockSearch search(c, block_of, k);
      if (!search.solve()) return false;
      found = search.witness();
      return true;
    });
    if (found) return *found;
  }
  throw Error(Errc::InternalContractBreach, "no rationalization by salience found");
}

int minimal_rationale_count(const ChoiceFunction& c) { return minimal_rationale_witness(c).distinct_count(); }

bool is_moody(const ChoiceFunction& c) { return minimal_rationale_count(c) == c.size(); }

// ---------------------------------------------------------------------------

namespace {

/// Expected pick for menus of size 2..6; `best` and `worst` rank by the
/// reference order.
template <class Best, class Worst>
std::optional<Item> flipped_pick(Menu a, Best best, Worst worst) {
  switch (a.size()) {
    case 2: return worst(a);
    case 3: return best(a);
    case 4: return worst(a.without(worst(a)));
    case 5: return best(a.without(best(a)));
    case 6: return worst(a);
    default: return std::nullopt;
  }
}

}  // namespace

ChoiceFunction make_flipped_choice(int n, FillRule fill) {
  if (n < kMinFlippedItems) throw Error(Errc::TooSmall, "flipped choices need at least 6 items");
  if (n > kMaxItems) throw Error(Errc::GroundTooLarge, "at most " + std::to_string(kMaxItems) + " items");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  auto ground = std::make_shared<const GroundSet>(std::move(labels));
  auto worst = [](Menu a) { return a.lowest(); };
  auto best = [](Menu a) { return static_cast<Item>(31 - std::countl_zero(a.mask())); };
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Item x = 0; x < n; ++x) table[std::size_t{1} << x] = static_cast<std::uint8_t>(x);
  for (Menu a : menus_in_order(n)) {
    const Item pick = flipped_pick(a, best, worst).value_or(fill == FillRule::Worst ? worst(a) : best(a));
    table[a.mask()] = static_cast<std::uint8_t>(pick);
  }
  return ChoiceFunction::from_table(std::move(ground), std::move(table));
}

AxiomVerdict check_flipped(const ChoiceFunction& c, const LinearOrder& order) {
  if (order.size() != c.size()) throw Error(Errc::InvalidArgument, "reference order has the wrong size");
  auto best = [&](Menu a) { return order.top(a); };
  auto worst = [&](Menu a) { return order.bottom(a); };
  for (Menu a : menus_in_order(c.size())) {
    if (a.size() > 6) break;
    const Item expected = *flipped_pick(a, best, worst);
    if (c(a) != expected) return AxiomVerdict{"flipped", false, Witness{{a}, {expected, c(a)}}};
  }
  return AxiomVerdict{"flipped", true, std::nullopt};
}

// ---------------------------------------------------------------------------

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

double Fraction::log10() const {
  if (num == 0) return -std::numeric_limits<double>::infinity();
  return std::log10(static_cast<double>(num)) - std::log10(static_cast<double>(den));
}

namespace {

Fraction reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return Fraction{0, 1};
  const std::uint64_t g = std::gcd(num, den);
  return Fraction{num / (g ? g : 1), den / (g ? g : 1)};
}

struct ClassEntry {
  std::uint64_t count = 0;
  bool seen_representative = false;
  bool warp = false;
  bool rls = false;
  bool cla = false;
};

using ClassMap = std::map<CanonicalCode, ClassEntry>;

void merge_into(ClassMap& into, const ClassMap& from) {
  for (const auto& [code, e] : from) {
    ClassEntry& t = into[code];
    t.count += e.count;
    if (e.seen_representative) {
      t.seen_representative = true;
      t.warp = e.warp;
      t.rls = e.rls;
      t.cla = e.cla;
    }
  }
}

}  // namespace

Fraction CensusTable::fraction_warp() const { return reduced(warp, total_classes); }
Fraction CensusTable::fraction_rls() const { return reduced(rls, total_classes); }
Fraction CensusTable::fraction_cla() const { return reduced(cla, total_classes); }

CensusTable classify_census(int n, int jobs) {
  if (jobs < 1) throw Error(Errc::InvalidArgument, "jobs must be at least 1");
  const ChoiceEnumerator all(n);
  const std::uint64_t total = all.total();
  const auto workers = static_cast<std::uint64_t>(jobs);

  std::vector<ClassMap> partial(workers);
  auto work = [&](std::uint64_t w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    ClassMap& local = partial[w];
    all.for_each(begin, end, [&](const ChoiceFunction& c) {
      CanonicalCode code = canonical_form(c);
      ClassEntry& e = local[code];
      ++e.count;
      if (serialize_code(c) == code) {
        e.seen_representative = true;
        e.warp = check_axiom(c, Axiom::Warp).holds;
        e.rls = is_rls(c).holds;
        e.cla = is_cla(c).holds;
      }
    });
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  ClassMap merged;
  for (const auto& p : partial) merge_into(merged, p);

  std::uint64_t orbit = 1;
  for (int k = 2; k <= n; ++k) orbit *= static_cast<std::uint64_t>(k);

  CensusTable t;
  t.n = n;
  t.total_functions = total;
  t.total_classes = merged.size();
  for (const auto& [code, e] : merged) {
    if (!e.seen_representative) throw Error(Errc::InternalContractBreach, "class without a representative");
    if (e.count != orbit) t.uniform_orbits = false;
    if (e.warp) ++t.warp, t.warp_functions += e.count;
    if (e.rls) ++t.rls, t.rls_functions += e.count;
    if (e.cla) ++t.cla, t.cla_functions += e.count;
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

using Rows = std::array<std::uint8_t, kMaxRlsSampleItems>;

/// Records c(B - x) != c(B) != x for every x; false once some pair of items
/// reveals salience both ways.
bool reveal(const std::vector<std::uint8_t>& table, Menu b, Rows& rows) {
  if (b.size() < 3) return true;
  const Item chosen = table[b.mask()];
  bool asymmetric = true;
  for_each_member(b.without(chosen), [&](Item x) {
    const Menu a = b.without(x);
    if (table[a.mask()] == chosen) return;
    for_each_member(a, [&](Item z) {
      if ((rows[static_cast<std::size_t>(z)] >> x) & 1u) asymmetric = false;
    });
    rows[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(rows[static_cast<std::size_t>(x)] | a.mask());
  });
  return asymmetric;
}

}  // namespace

RlsSampler::RlsSampler(int n) {
  if (n > kMaxRlsSampleItems) {
    throw Error(Errc::GroundTooLarge, "RLS sampling is limited to " + std::to_string(kMaxRlsSampleItems) + " items");
  }
  ground_ = GroundSet::letters(n);
  for (Menu m : menus_in_order(n)) (m.size() <= 3 ? prefix_ : rest_).push_back(m);
  for (Menu m : prefix_) prefix_total_ *= static_cast<std::uint64_t>(m.size());

  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Item x = 0; x < n; ++x) table[std::size_t{1} << x] = static_cast<std::uint8_t>(x);
  auto rec = [&](auto&& self, std::size_t i, Rows rows) -> void {
    if (i == prefix_.size()) {
      for (Menu m : prefix_) packed_.push_back(table[m.mask()]);
      packed_.insert(packed_.end(), rows.begin(), rows.end());
      ++survivors_;
      return;
    }
    const Menu b = prefix_[i];
    for_each_member(b, [&](Item y) {
      table[b.mask()] = static_cast<std::uint8_t>(y);
      Rows next = rows;
      if (reveal(table, b, next)) self(self, i + 1, next);
    });
  };
  rec(rec, 0, Rows{});
}

double RlsSampler::equivalent_attempts() const {
  return static_cast<double>(attempts_) * static_cast<double>(prefix_total_) / static_cast<double>(survivors_);
}

ChoiceFunction RlsSampler::draw(std::mt19937_64& rng) {
  const int n = ground_->size();
  auto take = [&](int width) {
    if (bits_left_ < width) {
      bits_ = rng();
      bits_left_ = 64;
    }
    const auto v = static_cast<int>(bits_ & ((1u << width) - 1));
    bits_ >>= width;
    bits_left_ -= width;
    return v;
  };
  // Uniform digit in [0, k) by rejection on ceil(log2 k) bits.
  auto digit = [&](int k) {
    const int width = std::bit_width(static_cast<unsigned>(k - 1));
    for (;;) {
      const int v = take(width);
      if (v < k) return v;
    }
  };

  const std::size_t stride = prefix_.size() + kMaxRlsSampleItems;
  std::uniform_int_distribution<std::uint64_t> pick(0, survivors_ - 1);
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Item x = 0; x < n; ++x) table[std::size_t{1} << x] = static_cast<std::uint8_t>(x);
  for (;;) {
    ++attempts_;
    const std::uint8_t* s = packed_.data() + pick(rng) * stride;
    for (std::size_t i = 0; i < prefix_.size(); ++i) table[prefix_[i].mask()] = s[i];
    Rows rows;
    std::copy(s + prefix_.size(), s + stride, rows.begin());
    bool asymmetric = true;
    for (Menu b : rest_) {
      int d = digit(b.size());
      std::uint32_t bits = b.mask();
      while (d-- > 0) bits &= bits - 1;
      table[b.mask()] = static_cast<std::uint8_t>(std::countr_zero(bits));
      if (!(asymmetric = reveal(table, b, rows))) break;
    }
    if (!asymmetric) continue;
    ChoiceFunction c = ChoiceFunction::from_table(ground_, table);
    if (!is_rls(c).holds) throw Error(Errc::InternalContractBreach, "sampler accepted a choice that is not RLS");
    return c;
  }
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint32_t kClassesOnFour = 864;
constexpr std::pair<int, int> kExponents[] = {{16, 20}, {20, 29}, {28, 57}, {32, 72}};

}  // namespace

std::vector<std::pair<int, int>> hereditary_exponents() {
  return {std::begin(kExponents), std::end(kExponents)};
}

HereditaryBound hereditary_bound(std::uint32_t q, int n) {
  using boost::multiprecision::cpp_int;
  if (q == 0 || q > kClassesOnFour) {
    throw Error(Errc::InvalidArgument, "q must lie in 1..864, got " + std::to_string(q));
  }
  const auto it = std::find_if(std::begin(kExponents), std::end(kExponents), [&](auto p) { return p.first == n; });
  if (it == std::end(kExponents)) {
    throw Error(Errc::UnsupportedN, "no exponent for n = " + std::to_string(n) + "; supported: 16, 20, 28, 32");
  }
  const auto e = static_cast<unsigned>(it->second);
  const std::uint32_t g = std::gcd(q, kClassesOnFour);
  const cpp_int num = boost::multiprecision::pow(cpp_int(q / g), e);
  const cpp_int den = boost::multiprecision::pow(cpp_int(kClassesOnFour / g), e);

  // value <= 1, so the magnitude m is <= 0: find the least m with
  // num * 10^(-m) <= den.
  int m = 0;
  cpp_int scaled = num;
  while (scaled * 10 <= den) {
    scaled *= 10;
    --m;
  }

  HereditaryBound b;
  b.q = q;
  b.n = n;
  b.exponent = it->second;
  b.numerator = num.str();
  b.denominator = den.str();
  b.magnitude = m;
  b.log10 = static_cast<double>(e) * (std::log10(static_cast<double>(q)) - std::log10(double{kClassesOnFour}));
  return b;
}

}  // namespace salience
