#pragma once

#include <cstdint>
#include <vector>

#include "salience/axioms.hpp"
#include "salience/core.hpp"
#include "salience/relations.hpp"

namespace salience {

inline constexpr int kMaxCslaSearchItems = 5;

/// A choice correspondence, one nonempty submenu per menu. Entries are
/// indexed by mask; singletons map to themselves.
class FilterTable {
 public:
  FilterTable() = default;
  explicit FilterTable(int n);

  int size() const { return n_; }
  Menu operator()(Menu m) const { return m.size() == 1 ? m : Menu(entries_[m.mask()]); }
  void set(Menu m, Menu attended);

  /// Every entry of size >= 2 menus is a nonempty subset of its menu.
  bool is_correspondence() const;

  friend bool operator==(const FilterTable&, const FilterTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> entries_;
};

struct CslaWitness {
  LinearOrder rationale;
  FilterTable filter;
};

/// x P y iff x = c(A) != c(A - y) for some menu A holding x and y.
Relation revealed_preference_p(const ChoiceFunction& c);

/// The converse of revealed salience.
Relation revealed_preference_p_tilde(const ChoiceFunction& c);

/// Holds iff P has no cycle of any length >= 2. Witness: the cycle as
/// items, with the menus that reveal each arc.
AxiomVerdict is_cla(const ChoiceFunction& c);

/// c(A) and everything the rationale ranks below it, within A.
FilterTable canonical_filter(const ChoiceFunction& c, const LinearOrder& rationale);

/// Rationale: linear extension of P~; filter: canonical_filter. Throws
/// NotRls, or InternalContractBreach if the result fails verification.
CslaWitness build_csla_witness(const ChoiceFunction& c);

/// (i) c(A) is the rationale-best member of the filter on every menu, and
/// (ii) removing any x other than min(B) and max(filter(B)) commutes with
/// the filter.
bool verify_salient_filter(const ChoiceFunction& c, const CslaWitness& w);

/// Searches all n! rationales with their canonical filters (n <= 5).
bool is_csla_exhaustive(const ChoiceFunction& c);

}  // namespace salience
