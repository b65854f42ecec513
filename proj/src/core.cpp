#include "salience/core.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace salience {

Menu Menu::of(std::initializer_list<Item> items) {
  std::uint32_t mask = 0;
  for (Item x : items) mask |= std::uint32_t{1} << x;
  return Menu(mask);
}

std::vector<Item> Menu::members() const {
  std::vector<Item> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_member(*this, [&](Item x) { out.push_back(x); });
  return out;
}

const std::vector<Menu>& menus_in_order(int n) {
  if (n < 0 || n > kMaxItems) {
    throw Error(Errc::GroundTooLarge, "menu order requested for " + std::to_string(n) + " items");
  }
  static std::array<std::once_flag, kMaxItems + 1> flags;
  static std::array<std::vector<Menu>, kMaxItems + 1> cache;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] {
    auto& menus = cache[static_cast<std::size_t>(n)];
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      if (std::popcount(mask) >= 2) menus.emplace_back(mask);
    }
    std::stable_sort(menus.begin(), menus.end(), menu_order_less);
  });
  return cache[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw Error(Errc::InvalidGround, "a ground set needs at least two items");
  }
  if (labels_.size() > static_cast<std::size_t>(kMaxItems)) {
    throw Error(Errc::GroundTooLarge,
                std::to_string(labels_.size()) + " items exceed the cap of " + std::to_string(kMaxItems));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(Errc::InvalidGround, "empty item label");
    if (!seen.insert(l).second) throw Error(Errc::InvalidGround, "duplicate item label '" + l + "'");
  }
}

std::shared_ptr<const GroundSet> GroundSet::letters(int n) {
  if (n > kMaxItems) throw Error(Errc::GroundTooLarge, std::to_string(n) + " items");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return std::make_shared<const GroundSet>(std::move(labels));
}

std::optional<Item> GroundSet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<Item>(i);
  }
  return std::nullopt;
}

std::string GroundSet::format(Menu m) const {
  std::string out;
  for_each_member(m, [&](Item x) {
    if (!out.empty()) out += ' ';
    out += label(x);
  });
  return out;
}

// ---------------------------------------------------------------------------

ChoiceFunction ChoiceFunction::from_table(std::shared_ptr<const GroundSet> ground,
                                          std::vector<std::uint8_t> table) {
  const int n = ground->size();
  const std::size_t expected = std::size_t{1} << n;
  if (table.size() != expected) {
    throw Error(Errc::InvalidArgument, "choice table has " + std::to_string(table.size()) +
                                           " entries, expected " + std::to_string(expected));
  }
  table[0] = 0xFF;
  for (std::uint32_t mask = 1; mask < expected; ++mask) {
    const Menu m(mask);
    if (m.size() == 1) {
      table[mask] = static_cast<std::uint8_t>(m.lowest());
    } else if (table[mask] >= n || !m.contains(table[mask])) {
      throw Error(Errc::NonMemberChoice, "menu {" + ground->format(m) + "} chooses a non-member");
    }
  }
  return ChoiceFunction(std::move(ground), std::move(table));
}

ChoiceFunction make_choice(const GroundSet& ground,
                           std::span<const std::pair<Menu, Item>> assignments) {
  const int n = ground.size();
  const std::size_t size = std::size_t{1} << n;
  constexpr std::uint8_t kUnset = 0xFE;
  std::vector<std::uint8_t> table(size, kUnset);
  for (const auto& [menu, item] : assignments) {
    if (menu.empty() || !menu.subset_of(Menu::full(n))) {
      throw Error(Errc::InvalidArgument, "menu outside the ground set");
    }
    if (menu.size() < 2) {
      throw Error(Errc::InvalidArgument, "singleton menu {" + ground.format(menu) + "} is implied, not assigned");
    }
    if (table[menu.mask()] != kUnset) {
      throw Error(Errc::DuplicateMenu, "menu {" + ground.format(menu) + "} assigned twice");
    }
    if (item < 0 || item >= n || !menu.contains(item)) {
      throw Error(Errc::NonMemberChoice, "menu {" + ground.format(menu) + "} cannot choose " +
                                             (item >= 0 && item < n ? ground.label(item) : std::to_string(item)));
    }
    table[menu.mask()] = static_cast<std::uint8_t>(item);
  }
  for (Menu m : menus_in_order(n)) {
    if (table[m.mask()] == kUnset) {
      throw Error(Errc::MissingMenu, "no choice given for menu {" + ground.format(m) + "}");
    }
  }
  return ChoiceFunction::from_table(std::make_shared<const GroundSet>(ground), std::move(table));
}

ChoiceFunction subchoice(const ChoiceFunction& c, Menu menu) {
  if (menu.size() < 2 || !menu.subset_of(c.ground().full_menu())) {
    throw Error(Errc::InvalidArgument, "subchoice needs a menu of at least two items");
  }
  const std::vector<Item> members = menu.members();
  const int k = static_cast<int>(members.size());
  std::vector<std::string> labels;
  for (Item x : members) labels.push_back(c.ground().label(x));
  auto ground = std::make_shared<const GroundSet>(std::move(labels));

  std::vector<Item> new_index(static_cast<std::size_t>(c.size()), -1);
  for (int i = 0; i < k; ++i) new_index[static_cast<std::size_t>(members[static_cast<std::size_t>(i)])] = i;

  std::vector<std::uint8_t> table(std::size_t{1} << k, 0);
  for (std::uint32_t sub = 1; sub < table.size(); ++sub) {
    std::uint32_t old_mask = 0;
    for_each_member(Menu(sub), [&](Item i) { old_mask |= std::uint32_t{1} << members[static_cast<std::size_t>(i)]; });
    table[sub] = static_cast<std::uint8_t>(new_index[static_cast<std::size_t>(c(Menu(old_mask)))]);
  }
  return ChoiceFunction::from_table(std::move(ground), std::move(table));
}

namespace {

void check_permutation(std::span<const Item> perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw Error(Errc::InvalidArgument, "permutation has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Item x : perm) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) {
      throw Error(Errc::InvalidArgument, "not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

std::uint32_t image_mask(std::uint32_t mask, std::span<const Item> perm) {
  std::uint32_t out = 0;
  for_each_member(Menu(mask), [&](Item x) { out |= std::uint32_t{1} << perm[static_cast<std::size_t>(x)]; });
  return out;
}

}  // namespace

ChoiceFunction relabel(const ChoiceFunction& c, std::span<const Item> perm) {
  const int n = c.size();
  check_permutation(perm, n);
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (Item x = 0; x < n; ++x) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = c.ground().label(x);
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < table.size(); ++mask) {
    table[image_mask(mask, perm)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(c(Menu(mask)))]);
  }
  return ChoiceFunction::from_table(std::make_shared<const GroundSet>(std::move(labels)), std::move(table));
}

CanonicalCode serialize_code(const ChoiceFunction& c) {
  CanonicalCode code;
  code.push_back(static_cast<std::uint8_t>(c.size()));
  for (Menu m : menus_in_order(c.size())) code.push_back(static_cast<std::uint8_t>(c(m)));
  return code;
}

CanonicalCode canonical_form(const ChoiceFunction& c) {
  const int n = c.size();
  if (n > kMaxCanonicalItems) {
    throw Error(Errc::GroundTooLarge, "canonical form is limited to " + std::to_string(kMaxCanonicalItems) + " items");
  }
  const auto& menus = menus_in_order(n);
  CanonicalCode best;
  CanonicalCode current(menus.size() + 1);
  current[0] = static_cast<std::uint8_t>(n);

  // perm maps old -> new; to read the relabeled choice at new menu M we
  // need the preimage of M, i.e. the inverse permutation.
  std::vector<Item> inverse(static_cast<std::size_t>(n));
  std::iota(inverse.begin(), inverse.end(), 0);
  std::vector<Item> perm(static_cast<std::size_t>(n));
  do {
    for (Item i = 0; i < n; ++i) perm[static_cast<std::size_t>(inverse[static_cast<std::size_t>(i)])] = i;
    bool greater = false;
    bool decided = best.empty();
    for (std::size_t j = 0; j < menus.size(); ++j) {
      const std::uint32_t old_mask = image_mask(menus[j].mask(), inverse);
      const auto value = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(c(Menu(old_mask)))]);
      current[j + 1] = value;
      if (!decided) {
        if (value > best[j + 1]) {
          greater = true;
          break;
        }
        if (value < best[j + 1]) decided = true;
      }
    }
    if (!greater && (best.empty() || decided)) best = current;
  } while (std::next_permutation(inverse.begin(), inverse.end()));
  return best;
}

std::uint64_t choice_count(int n) {
  if (n < 1) return 0;
  std::uint64_t total = 1;
  std::uint64_t binom = 1;  // C(n, k)
  for (int k = 1; k <= n; ++k) {
    binom = binom * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
    for (std::uint64_t i = 0; i < binom; ++i) {
      if (total > UINT64_MAX / static_cast<std::uint64_t>(k)) {
        throw Error(Errc::GroundTooLarge, "choice count overflows 64 bits at n = " + std::to_string(n));
      }
      total *= static_cast<std::uint64_t>(k);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

ChoiceEnumerator::ChoiceEnumerator(int n) : ChoiceEnumerator(GroundSet::letters(n)) {}

ChoiceEnumerator::ChoiceEnumerator(std::shared_ptr<const GroundSet> ground)
    : n_(ground->size()), ground_(std::move(ground)), total_(0) {
  if (n_ > kMaxExhaustiveItems) {
    throw Error(Errc::GroundTooLarge, "exhaustive enumeration is limited to " +
                                          std::to_string(kMaxExhaustiveItems) + " items");
  }
  total_ = choice_count(n_);
}

ChoiceFunction ChoiceEnumerator::at(std::uint64_t rank) const {
  if (rank >= total_) throw Error(Errc::InvalidArgument, "rank out of range");
  const auto& menus = menus_in_order(n_);
  std::vector<std::uint8_t> table(std::size_t{1} << n_, 0);
  for (std::size_t j = menus.size(); j-- > 0;) {
    const Menu m = menus[j];
    const auto k = static_cast<std::uint64_t>(m.size());
    auto digit = static_cast<int>(rank % k);
    rank /= k;
    std::uint32_t bits = m.mask();
    while (digit-- > 0) bits &= bits - 1;
    table[m.mask()] = static_cast<std::uint8_t>(std::countr_zero(bits));
  }
  return ChoiceFunction::from_table(ground_, std::move(table));
}

ChoiceFunction random_choice(const std::shared_ptr<const GroundSet>& ground, std::mt19937_64& rng) {
  const int n = ground->size();
  if (n > kMaxSampledItems) {
    throw Error(Errc::GroundTooLarge, "random sampling is limited to " + std::to_string(kMaxSampledItems) + " items");
  }
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (Menu m : menus_in_order(n)) {
    std::uniform_int_distribution<int> pick(0, m.size() - 1);
    int digit = pick(rng);
    std::uint32_t bits = m.mask();
    while (digit-- > 0) bits &= bits - 1;
    table[m.mask()] = static_cast<std::uint8_t>(std::countr_zero(bits));
  }
  return ChoiceFunction::from_table(ground, std::move(table));
}

}  // namespace salience
