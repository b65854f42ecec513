#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "salience/error.hpp"

namespace salience {

inline constexpr int kMaxItems = 24;
inline constexpr int kMaxCanonicalItems = 8;
inline constexpr int kMaxExhaustiveItems = 4;
inline constexpr int kMaxSampledItems = 6;

using Item = int;

/// A nonempty subset of item indices, stored as a bit mask.
class Menu {
 public:
  constexpr Menu() = default;
  constexpr explicit Menu(std::uint32_t mask) : mask_(mask) {}

  static constexpr Menu singleton(Item x) { return Menu(std::uint32_t{1} << x); }
  static constexpr Menu full(int n) {
    return Menu(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }
  static Menu of(std::initializer_list<Item> items);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(Item x) const { return (mask_ >> x) & 1u; }
  constexpr Menu with(Item x) const { return Menu(mask_ | (std::uint32_t{1} << x)); }
  constexpr Menu without(Item x) const { return Menu(mask_ & ~(std::uint32_t{1} << x)); }
  constexpr bool subset_of(Menu other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr Item lowest() const { return std::countr_zero(mask_); }

  std::vector<Item> members() const;

  constexpr Menu operator|(Menu o) const { return Menu(mask_ | o.mask_); }
  constexpr Menu operator&(Menu o) const { return Menu(mask_ & o.mask_); }
  constexpr Menu operator-(Menu o) const { return Menu(mask_ & ~o.mask_); }

  friend constexpr bool operator==(Menu, Menu) = default;
  friend constexpr auto operator<=>(Menu a, Menu b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_ = 0;
};

/// Calls `fn(x)` for each member of `m` in increasing index order.
template <class Fn>
constexpr void for_each_member(Menu m, Fn&& fn) {
  for (std::uint32_t bits = m.mask(); bits != 0; bits &= bits - 1) {
    fn(static_cast<Item>(std::countr_zero(bits)));
  }
}

/// Menu order used for enumeration and canonical codes: by size, then mask.
constexpr bool menu_order_less(Menu a, Menu b) {
  return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
}

/// All menus of size >= 2 over n items, in (size, mask) order. Cached.
const std::vector<Menu>& menus_in_order(int n);

class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  /// Labels "a", "b", ... for n items.
  static std::shared_ptr<const GroundSet> letters(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(Item x) const { return labels_.at(static_cast<std::size_t>(x)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Item> index_of(std::string_view label) const;
  Menu full_menu() const { return Menu::full(size()); }

  /// Space separated member labels in index order.
  std::string format(Menu m) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A total map from menus to members. Entries are indexed by mask; the
/// singleton entries are forced by c({x}) = x and never come from input.
class ChoiceFunction {
 public:
  /// Validates that every menu of size >= 2 picks one of its members.
  static ChoiceFunction from_table(std::shared_ptr<const GroundSet> ground,
                                   std::vector<std::uint8_t> table);

  const GroundSet& ground() const { return *ground_; }
  const std::shared_ptr<const GroundSet>& ground_ptr() const { return ground_; }
  int size() const { return ground_->size(); }

  Item operator()(Menu m) const { return table_[m.mask()]; }

  std::span<const std::uint8_t> table() const { return table_; }

  friend bool operator==(const ChoiceFunction& a, const ChoiceFunction& b) {
    return *a.ground_ == *b.ground_ && a.table_ == b.table_;
  }

 private:
  ChoiceFunction(std::shared_ptr<const GroundSet> ground, std::vector<std::uint8_t> table)
      : ground_(std::move(ground)), table_(std::move(table)) {}

  std::shared_ptr<const GroundSet> ground_;
  std::vector<std::uint8_t> table_;
};

/// Builds a choice from explicit (menu, chosen item) assignments. The
/// assignments must cover every menu of size >= 2 exactly once.
ChoiceFunction make_choice(const GroundSet& ground,
                           std::span<const std::pair<Menu, Item>> assignments);

/// Restriction of c to the submenus of `menu`, over the ground set `menu`.
ChoiceFunction subchoice(const ChoiceFunction& c, Menu menu);

/// The isomorphic copy of c under the bijection old item x -> perm[x].
/// Labels travel with the items.
ChoiceFunction relabel(const ChoiceFunction& c, std::span<const Item> perm);

using CanonicalCode = std::vector<std::uint8_t>;

/// Lexicographically least serialization over all n! relabelings.
CanonicalCode canonical_form(const ChoiceFunction& c);

/// The serialization of c itself (the identity relabeling).
CanonicalCode serialize_code(const ChoiceFunction& c);

/// Product over k = 2..n of k^C(n,k). Throws GroundTooLarge on overflow.
std::uint64_t choice_count(int n);

/// Exhaustive enumeration of all choice functions on n <= 4 items in
/// mixed-radix order (menus by (size, mask), last menu fastest).
class ChoiceEnumerator {
 public:
  explicit ChoiceEnumerator(int n);
  ChoiceEnumerator(std::shared_ptr<const GroundSet> ground);

  int size() const { return n_; }
  std::uint64_t total() const { return total_; }

  ChoiceFunction at(std::uint64_t rank) const;

  /// Visits ranks in [begin, end). Disjoint ranges partition the work.
  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    for (std::uint64_t r = begin; r < end && r < total_; ++r) fn(at(r));
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(0, total_, std::forward<Fn>(fn));
  }

 private:
  int n_;
  std::shared_ptr<const GroundSet> ground_;
  std::uint64_t total_;
};

/// Uniformly random choice function on n <= 6 items.
ChoiceFunction random_choice(const std::shared_ptr<const GroundSet>& ground,
                             std::mt19937_64& rng);

}  // namespace salience
