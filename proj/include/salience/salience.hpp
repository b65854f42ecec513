#pragma once

#include <map>
#include <utility>
#include <vector>

#include "salience/axioms.hpp"
#include "salience/core.hpp"
#include "salience/relations.hpp"

namespace salience {

inline constexpr int kMaxWitnessItems = 16;

/// x |= y iff adding x to some menu containing y causes a switch.
struct RevealedSalience {
  Relation relation;
  /// First minimal switch (in find_minimal_switches order) behind each pair.
  std::map<std::pair<Item, Item>, Switch> provenance;
};

RevealedSalience revealed_salience(const ChoiceFunction& c);

/// The relation alone, without provenance.
Relation revealed_salience_relation(const ChoiceFunction& c);

/// Holds iff revealed salience is asymmetric. On failure the witness is
/// menus [A, A+x, B, B+y], items [x, y] where the two switches show x |= y
/// and y |= x.
AxiomVerdict is_rls(const ChoiceFunction& c);

/// Salience as indifference classes, most salient first, and one rationale
/// per item. Items in the same class must share a rationale.
struct RlsWitness {
  std::vector<std::vector<Item>> salience;
  std::vector<LinearOrder> rationales;

  /// Number of distinct rationales.
  int distinct_rationales() const;
};

/// Linear salience extending the closure of |=, rationales extending the
/// per-item revealed orders. Throws NotRls, GroundTooLarge (n > 16).
RlsWitness build_rls_witness(const ChoiceFunction& c);

/// Replays the witness: every menu is decided by the rationale of its most
/// salient class. Malformed witnesses (not a total preorder, rationale
/// count, normality) are rejected.
bool verify_rls_witness(const ChoiceFunction& c, const RlsWitness& w);

}  // namespace salience
