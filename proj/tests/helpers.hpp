#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "salience/io.hpp"

namespace testing_support {

using namespace salience;

inline ChoiceFunction fixture_choice(std::string_view id) {
  return parse_choice_file(fixture_by_id(id).payload);
}

/// c(A) = best member of A under `order`.
inline ChoiceFunction choice_from_order(std::shared_ptr<const GroundSet> g, const LinearOrder& order) {
  std::vector<std::uint8_t> table(std::size_t{1} << g->size(), 0);
  for (Menu m : menus_in_order(g->size())) table[m.mask()] = static_cast<std::uint8_t>(order.top(m));
  return ChoiceFunction::from_table(std::move(g), std::move(table));
}

inline LinearOrder random_order(int n, std::mt19937_64& rng) {
  std::vector<Item> items(static_cast<std::size_t>(n));
  for (Item x = 0; x < n; ++x) items[static_cast<std::size_t>(x)] = x;
  std::shuffle(items.begin(), items.end(), rng);
  return LinearOrder(items);
}

/// Linear salience `s` and one rationale per item: each menu is decided by
/// the rationale of its most salient member.
inline ChoiceFunction choice_from_salience(std::shared_ptr<const GroundSet> g, const LinearOrder& s,
                                           const std::vector<LinearOrder>& rationales) {
  std::vector<std::uint8_t> table(std::size_t{1} << g->size(), 0);
  for (Menu m : menus_in_order(g->size())) {
    table[m.mask()] = static_cast<std::uint8_t>(rationales[static_cast<std::size_t>(s.top(m))].top(m));
  }
  return ChoiceFunction::from_table(std::move(g), std::move(table));
}

inline ChoiceFunction random_rls_choice(int n, std::mt19937_64& rng) {
  std::vector<LinearOrder> rationales;
  for (int i = 0; i < n; ++i) rationales.push_back(random_order(n, rng));
  return choice_from_salience(GroundSet::letters(n), random_order(n, rng), rationales);
}

inline Menu menu_of(const ChoiceFunction& c, std::initializer_list<const char*> labels) {
  std::uint32_t mask = 0;
  for (const char* l : labels) mask |= std::uint32_t{1} << *c.ground().index_of(l);
  return Menu(mask);
}

inline Item item_of(const ChoiceFunction& c, const char* label) { return *c.ground().index_of(label); }

template <class Fn>
void for_all_choices(int n, Fn&& fn) {
  ChoiceEnumerator(n).for_each(std::forward<Fn>(fn));
}

}  // namespace testing_support
