#include "salience/axioms.hpp"

namespace salience {

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Warp: return "warp";
    case Axiom::WarpS: return "warp_s";
    case Axiom::WeakWarp: return "weak_warp";
    case Axiom::AlwaysChosen: return "always_chosen";
    case Axiom::ExpansionGamma: return "expansion_gamma";
  }
  return "unknown";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

bool is_switch(const ChoiceFunction& c, Menu a, Menu b) {
  if (a.empty() || !a.subset_of(b) || !b.subset_of(c.ground().full_menu())) return false;
  return c(a) != c(b) && a.contains(c(b));
}

std::vector<Switch> find_minimal_switches(const ChoiceFunction& c) {
  std::vector<Switch> out;
  const int n = c.size();
  for (Menu a : menus_in_order(n)) {
    const Item old_choice = c(a);
    for (Item x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      const Item new_choice = c(a.with(x));
      if (new_choice != old_choice && new_choice != x) out.push_back({a, x, old_choice, new_choice});
    }
  }
  return out;
}

Switch reduce_switch(const ChoiceFunction& c, Menu a, Menu b) {
  if (!is_switch(c, a, b)) {
    throw Error(Errc::NotASwitch, "({" + c.ground().format(a) + "}, {" + c.ground().format(b) + "}) is not a switch");
  }
  while ((b - a).size() > 1) {
    const Item x = (b - a).lowest();
    const Menu smaller = b.without(x);
    if (c(smaller) != c(b) && c(b) != x) return {smaller, x, c(smaller), c(b)};
    // Otherwise c(b) == c(smaller), so (a, smaller) is still a switch.
    b = smaller;
  }
  const Item x = (b - a).lowest();
  return {a, x, c(a), c(b)};
}

namespace {

std::optional<Witness> warp_violation(const ChoiceFunction& c) {
  const int n = c.size();
  for (Menu a : menus_in_order(n)) {
    for (Item x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      const Item big = c(a.with(x));
      if (big != c(a) && big != x) return Witness{{a, a.with(x)}, {c(a), big}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> warp_s_violation(const ChoiceFunction& c) {
  const int n = c.size();
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (Menu a : menus_in_order(n)) {
    for (Item b = 0; b < n; ++b) {
      if (a.contains(b)) continue;
      const Item grown = c(a.with(b));
      if (grown == c(a) || grown == b) continue;
      // (A, A+b) is a switch; no a in A may switch any B containing b.
      for (std::uint32_t mask = 1; mask < limit; ++mask) {
        const Menu bm(mask);
        if (!bm.contains(b)) continue;
        for (Item x : (a - bm).members()) {
          const Item chosen = c(bm.with(x));
          if (chosen != c(bm) && chosen != x) return Witness{{a, bm}, {b, x}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> weak_warp_violation(const ChoiceFunction& c) {
  for (Menu big : menus_in_order(c.size())) {
    const Item x = c(big);
    for (Item y : big.without(x).members()) {
      const Menu pair = Menu::singleton(x).with(y);
      if (c(pair) != x) continue;
      for (Menu a : menus_in_order(c.size())) {
        if (pair.subset_of(a) && a.subset_of(big) && c(a) == y) return Witness{{pair, a, big}, {x, y}};
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> always_chosen_violation(const ChoiceFunction& c) {
  for (Menu a : menus_in_order(c.size())) {
    for (Item x : a.members()) {
      bool beats_all = true;
      for_each_member(a.without(x), [&](Item y) {
        if (c(Menu::singleton(x).with(y)) != x) beats_all = false;
      });
      if (beats_all && c(a) != x) return Witness{{a}, {x}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> expansion_gamma_violation(const ChoiceFunction& c) {
  const auto& menus = menus_in_order(c.size());
  for (std::size_t i = 0; i < menus.size(); ++i) {
    const Item x = c(menus[i]);
    for (std::size_t j = i + 1; j < menus.size(); ++j) {
      if (c(menus[j]) == x && c(menus[i] | menus[j]) != x) return Witness{{menus[i], menus[j]}, {x}};
    }
  }
  return std::nullopt;
}

}  // namespace

AxiomVerdict check_axiom(const ChoiceFunction& c, Axiom axiom) {
  std::optional<Witness> w;
  switch (axiom) {
    case Axiom::Warp: w = warp_violation(c); break;
    case Axiom::WarpS: w = warp_s_violation(c); break;
    case Axiom::WeakWarp: w = weak_warp_violation(c); break;
    case Axiom::AlwaysChosen: w = always_chosen_violation(c); break;
    case Axiom::ExpansionGamma: w = expansion_gamma_violation(c); break;
  }
  return AxiomVerdict{std::string(to_string(axiom)), !w.has_value(), std::move(w)};
}

bool replay_witness(const ChoiceFunction& c, Axiom axiom, const Witness& w) {
  const Menu full = c.ground().full_menu();
  for (Menu m : w.menus) {
    if (m.empty() || !m.subset_of(full)) return false;
  }
  for (Item x : w.items) {
    if (x < 0 || x >= c.size()) return false;
  }
  const auto menus = w.menus.size();
  const auto items = w.items.size();
  switch (axiom) {
    case Axiom::Warp: {
      // x, y in both menus, c(M1) = x, c(M2) = y, x != y.
      if (menus != 2 || items != 2) return false;
      const Menu both = w.menus[0] & w.menus[1];
      const Item x = w.items[0], y = w.items[1];
      return x != y && both.contains(x) && both.contains(y) && c(w.menus[0]) == x && c(w.menus[1]) == y;
    }
    case Axiom::WarpS: {
      if (menus != 2 || items != 2) return false;
      const Menu a = w.menus[0], bm = w.menus[1];
      const Item b = w.items[0], x = w.items[1];
      if (!a.contains(x) || !bm.contains(b)) return false;
      const bool first = c(a) != c(a.with(b)) && c(a.with(b)) != b;
      const bool second = c(bm) != c(bm.with(x));
      return first && second && c(bm.with(x)) != x;
    }
    case Axiom::WeakWarp: {
      if (menus != 3 || items != 2) return false;
      const Item x = w.items[0], y = w.items[1];
      const Menu pair = Menu::singleton(x).with(y);
      return x != y && w.menus[0] == pair && pair.subset_of(w.menus[1]) && w.menus[1].subset_of(w.menus[2]) &&
             c(pair) == x && c(w.menus[2]) == x && c(w.menus[1]) == y;
    }
    case Axiom::AlwaysChosen: {
      if (menus != 1 || items != 1) return false;
      const Menu a = w.menus[0];
      const Item x = w.items[0];
      if (!a.contains(x) || c(a) == x) return false;
      bool beats_all = true;
      for_each_member(a.without(x), [&](Item y) {
        if (c(Menu::singleton(x).with(y)) != x) beats_all = false;
      });
      return beats_all;
    }
    case Axiom::ExpansionGamma: {
      if (menus != 2 || items != 1) return false;
      const Item x = w.items[0];
      return c(w.menus[0]) == x && c(w.menus[1]) == x && c(w.menus[0] | w.menus[1]) != x;
    }
  }
  return false;
}

std::vector<Conflict> find_conflicting_menus(const ChoiceFunction& c) {
  const std::vector<Switch> switches = find_minimal_switches(c);
  std::vector<Conflict> out;
  for (const Switch& s1 : switches) {
    for (const Switch& s2 : switches) {
      if (s1.base == s2.base) continue;
      // s1 = (A, A + b), s2 = (B, B + a), a in A, b in B.
      if (s2.base.contains(s1.added) && s1.base.contains(s2.added)) {
        out.push_back({s1.base, s2.base, s2.added, s1.added});
      }
    }
  }
  return out;
}

}  // namespace salience
