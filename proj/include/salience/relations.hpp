#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "salience/core.hpp"

namespace salience {

/// n x n incidence table; row x holds the set {y : x R y}.
class Relation {
 public:
  explicit Relation(int n = 0);
  static Relation from_pairs(int n, std::span<const std::pair<Item, Item>> pairs);

  int size() const { return static_cast<int>(rows_.size()); }
  bool holds(Item x, Item y) const { return (rows_[static_cast<std::size_t>(x)] >> y) & 1u; }
  void set(Item x, Item y, bool value = true);
  Menu row(Item x) const { return Menu(rows_[static_cast<std::size_t>(x)]); }

  /// Items y with y R x.
  Menu column(Item x) const;

  Relation converse() const;
  /// x P y iff x R y and not y R x.
  Relation strict_part() const;
  bool subset_of(const Relation& other) const;
  bool empty() const;

  /// Ordered pairs in (x, y) index order.
  std::vector<std::pair<Item, Item>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<std::uint32_t> rows_;
};

/// Property flags of a relation. Asymmetry (no 2-cycles, no loops) and
/// acyclicity (no simple cycles of length >= 3) are reported separately.
/// Each failed flag carries a witness.
struct PropertyReport {
  bool reflexive = true;
  bool asymmetric = true;
  bool symmetric = true;
  bool antisymmetric = true;
  bool transitive = true;
  bool acyclic = true;
  bool complete = true;

  std::optional<Item> reflexive_witness;                    // x with not x R x
  std::optional<std::pair<Item, Item>> asymmetric_witness;  // x R y and y R x
  std::optional<std::pair<Item, Item>> symmetric_witness;   // x R y, not y R x
  std::optional<std::pair<Item, Item>> antisymmetric_witness;
  std::optional<std::array<Item, 3>> transitive_witness;    // x R y R z, not x R z
  std::vector<Item> cycle_witness;                          // x1 R x2 ... R xk R x1
  std::optional<std::pair<Item, Item>> complete_witness;    // neither way
};

PropertyReport check_properties(const Relation& r);

/// A simple cycle of length >= 3, if any. The diagonal is ignored.
std::optional<std::vector<Item>> find_long_cycle(const Relation& r);

/// A simple cycle of length >= 2, if any. The diagonal is ignored.
std::optional<std::vector<Item>> find_cycle(const Relation& r);

Relation transitive_closure(const Relation& r);

/// A strict linear order, stored best to worst.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// `best_to_worst` must be a permutation of 0..n-1.
  explicit LinearOrder(std::vector<Item> best_to_worst);
  static LinearOrder identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<Item>& items() const { return order_; }
  int rank(Item x) const { return rank_[static_cast<std::size_t>(x)]; }
  bool better(Item x, Item y) const { return rank(x) < rank(y); }

  /// The best member of a nonempty menu.
  Item top(Menu m) const;
  /// The worst member of a nonempty menu.
  Item bottom(Menu m) const;

  /// Strict relation x R y iff x is ranked above y.
  Relation as_relation() const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.order_ == b.order_; }

 private:
  std::vector<Item> order_;
  std::vector<int> rank_;
};

/// Deterministic linear extension: repeatedly take the lowest-index item
/// with no remaining predecessor. Throws NotExtendable on any cycle.
LinearOrder linear_extension(const Relation& r);

/// Members of `menu` not strictly dominated by another member.
Menu maximal_elements(Menu menu, const Relation& r);

}  // namespace salience
