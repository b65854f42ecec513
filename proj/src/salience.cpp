#include "salience/salience.hpp"

#include <algorithm>
#include <set>

namespace salience {

Relation revealed_salience_relation(const ChoiceFunction& c) {
  const int n = c.size();
  Relation r(n);
  for (Menu a : menus_in_order(n)) {
    const Item old_choice = c(a);
    for (Item x = 0; x < n; ++x) {
      if (a.contains(x)) continue;
      const Item new_choice = c(a.with(x));
      if (new_choice != old_choice && new_choice != x) {
        for_each_member(a, [&](Item y) { r.set(x, y); });
      }
    }
  }
  return r;
}

RevealedSalience revealed_salience(const ChoiceFunction& c) {
  RevealedSalience out{Relation(c.size()), {}};
  for (const Switch& s : find_minimal_switches(c)) {
    for_each_member(s.base, [&](Item y) {
      out.relation.set(s.added, y);
      out.provenance.try_emplace({s.added, y}, s);
    });
  }
  return out;
}

AxiomVerdict is_rls(const ChoiceFunction& c) {
  const Relation r = revealed_salience_relation(c);
  for (auto [x, y] : r.pairs()) {
    if (x < y && r.holds(y, x)) {
      const RevealedSalience full = revealed_salience(c);
      const Switch& sx = full.provenance.at({x, y});
      const Switch& sy = full.provenance.at({y, x});
      return AxiomVerdict{"rls", false, Witness{{sx.base, sx.extended(), sy.base, sy.extended()}, {x, y}}};
    }
  }
  return AxiomVerdict{"rls", true, std::nullopt};
}

int RlsWitness::distinct_rationales() const {
  std::set<std::vector<Item>> seen;
  for (const auto& r : rationales) seen.insert(r.items());
  return static_cast<int>(seen.size());
}

RlsWitness build_rls_witness(const ChoiceFunction& c) {
  const int n = c.size();
  if (n > kMaxWitnessItems) {
    throw Error(Errc::GroundTooLarge, "RLS witness construction is limited to " + std::to_string(kMaxWitnessItems) +
                                          " items (it scans 2^|down-set| menus per item)");
  }
  const Relation revealed = revealed_salience_relation(c);
  if (!check_properties(revealed).asymmetric) {
    throw Error(Errc::NotRls, "revealed salience is not asymmetric");
  }
  const LinearOrder salience = linear_extension(transitive_closure(revealed));

  RlsWitness w;
  for (Item x : salience.items()) w.salience.push_back({x});
  w.rationales.resize(static_cast<std::size_t>(n));

  for (Item x = 0; x < n; ++x) {
    // Items strictly below x in salience; the down-set is this plus x.
    std::uint32_t below = 0;
    for (Item y = 0; y < n; ++y) {
      if (salience.rank(y) > salience.rank(x)) below |= std::uint32_t{1} << y;
    }
    // y >_x z iff some menu A inside the down-set of x, with x in A,
    // contains z and chooses y.
    Relation revealed_order(n);
    for (std::uint32_t sub = below;; sub = (sub - 1) & below) {
      if (sub != 0) {
        const Menu a = Menu(sub).with(x);
        const Item y = c(a);
        for_each_member(a.without(y), [&](Item z) { revealed_order.set(y, z); });
      }
      if (sub == 0) break;
    }
    try {
      w.rationales[static_cast<std::size_t>(x)] = linear_extension(revealed_order);
    } catch (const Error&) {
      throw Error(Errc::InternalContractBreach, "revealed order below " + c.ground().label(x) + " is cyclic");
    }
  }
  return w;
}

bool verify_rls_witness(const ChoiceFunction& c, const RlsWitness& w) {
  const int n = c.size();
  if (static_cast<int>(w.rationales.size()) != n) return false;
  for (const auto& r : w.rationales) {
    if (r.size() != n) return false;
  }
  // The classes must partition the items.
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < w.salience.size(); ++k) {
    if (w.salience[k].empty()) return false;
    for (Item x : w.salience[k]) {
      if (x < 0 || x >= n || class_of[static_cast<std::size_t>(x)] != -1) return false;
      class_of[static_cast<std::size_t>(x)] = static_cast<int>(k);
    }
  }
  if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end()) return false;
  // Normality.
  for (const auto& cls : w.salience) {
    for (Item x : cls) {
      if (!(w.rationales[static_cast<std::size_t>(x)] == w.rationales[static_cast<std::size_t>(cls.front())])) {
        return false;
      }
    }
  }
  for (Menu a : menus_in_order(n)) {
    Item most_salient = -1;
    for_each_member(a, [&](Item x) {
      if (most_salient < 0 || class_of[static_cast<std::size_t>(x)] < class_of[static_cast<std::size_t>(most_salient)]) {
        most_salient = x;
      }
    });
    if (w.rationales[static_cast<std::size_t>(most_salient)].top(a) != c(a)) return false;
  }
  return true;
}

}  // namespace salience
