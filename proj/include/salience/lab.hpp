#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "salience/axioms.hpp"
#include "salience/core.hpp"
#include "salience/relations.hpp"

namespace salience {

inline constexpr int kMaxMoodinessItems = 5;
inline constexpr int kMinFlippedItems = 6;

/// Salience is a reflexive relation whose strict part is acyclic; one
/// rationale per item.
struct RsWitness {
  Relation salience;
  std::vector<LinearOrder> rationales;

  int distinct_count() const;
};

/// Every menu A is decided by the rationale of some member of max(A, salience).
bool verify_rs_witness(const ChoiceFunction& c, const RsWitness& w);

/// Identity salience; rationale of x puts x first, the rest by index.
RsWitness trivial_rs(const ChoiceFunction& c);

/// Fewest distinct rationales over all rationalizations by salience.
/// Throws GroundTooLarge for n > 5.
int minimal_rationale_count(const ChoiceFunction& c);

/// A witness attaining minimal_rationale_count, under identity salience.
RsWitness minimal_rationale_witness(const ChoiceFunction& c);

bool is_moody(const ChoiceFunction& c);

enum class FillRule { Worst, Best };

/// Items x1..xn, listed in increasing order of the reference order. Menus of
/// size 2..6 pick worst, best, second-worst, second-best, worst; larger
/// menus follow `fill`. Throws TooSmall for n < 6.
ChoiceFunction make_flipped_choice(int n, FillRule fill = FillRule::Worst);

/// `order` lists the reference order best first. Verdict "flipped";
/// witness menus [A], items [expected, actual].
AxiomVerdict check_flipped(const ChoiceFunction& c, const LinearOrder& order);

/// Non-negative fraction num/den in lowest terms.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  std::string str() const;
  /// log10 of the value; -inf for zero.
  double log10() const;
};

struct CensusTable {
  int n = 0;
  std::uint64_t total_functions = 0;
  std::uint64_t total_classes = 0;
  /// Isomorphism classes with the property.
  std::uint64_t warp = 0;
  std::uint64_t rls = 0;
  std::uint64_t cla = 0;
  /// Choice functions with the property.
  std::uint64_t warp_functions = 0;
  std::uint64_t rls_functions = 0;
  std::uint64_t cla_functions = 0;
  /// Every orbit has exactly n! members.
  bool uniform_orbits = true;

  Fraction fraction_warp() const;
  Fraction fraction_rls() const;
  Fraction fraction_cla() const;

  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Exhaustive census over all choice functions on n <= 4 items, split
/// across `jobs` disjoint rank ranges.
CensusTable classify_census(int n, int jobs = 1);

inline constexpr int kMaxRlsSampleItems = 5;

/// Uniform over the RLS choice functions on 2..5 items, by rejection from
/// the uniform distribution on all choice functions. Every assignment to
/// the menus of size <= 3 has the same number of completions, so the
/// assignments whose revealed salience is already asymmetric are enumerated
/// once and drawn uniformly; larger menus are then drawn one at a time and
/// the draw is abandoned as soon as revealed salience turns symmetric.
class RlsSampler {
 public:
  explicit RlsSampler(int n);

  ChoiceFunction draw(std::mt19937_64& rng);

  /// Full draws from all choice functions that the accepted ones stand for:
  /// attempts made after the prefix, scaled by the prefix survival rate.
  double equivalent_attempts() const;
  /// Draws started after the prefix, accepted or not.
  std::uint64_t attempts() const { return attempts_; }
  /// Surviving prefixes and all prefixes.
  std::uint64_t prefix_survivors() const { return survivors_; }
  std::uint64_t prefix_total() const { return prefix_total_; }

 private:
  std::shared_ptr<const GroundSet> ground_;
  std::vector<Menu> prefix_;
  std::vector<Menu> rest_;
  /// Per survivor: chosen item per prefix menu, then the revealed rows.
  std::vector<std::uint8_t> packed_;
  std::uint64_t survivors_ = 0;
  std::uint64_t prefix_total_ = 1;
  std::uint64_t attempts_ = 0;
  std::uint64_t bits_ = 0;
  int bits_left_ = 0;
};

/// (q/864)^e for a hereditary property held by q of the 864 classes on
/// four items, with e fixed per supported n.
struct HereditaryBound {
  std::uint32_t q = 0;
  int n = 0;
  int exponent = 0;
  std::string numerator;
  std::string denominator;
  /// Least integer m with value <= 10^m.
  int magnitude = 0;
  double log10 = 0.0;
};

/// Throws UnsupportedN unless n is 16, 20, 28 or 32; InvalidArgument unless
/// 1 <= q <= 864.
HereditaryBound hereditary_bound(std::uint32_t q, int n);

/// The n values hereditary_bound accepts, with their exponents.
std::vector<std::pair<int, int>> hereditary_exponents();

}  // namespace salience
