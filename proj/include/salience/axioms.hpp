#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "salience/core.hpp"

namespace salience {

/// Minimal switch (A, A + x): c(A) != c(A + x) != x.
struct Switch {
  Menu base;
  Item added = -1;
  Item old_choice = -1;
  Item new_choice = -1;

  Menu extended() const { return base.with(added); }
  friend bool operator==(const Switch&, const Switch&) = default;
};

/// Menus and items that reproduce a violation when fed back through c.
/// Their meaning depends on the axiom; see replay_witness.
struct Witness {
  std::vector<Menu> menus;
  std::vector<Item> items;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomVerdict {
  std::string axiom;
  bool holds = true;
  std::optional<Witness> witness;
};

enum class Axiom { Warp, WarpS, WeakWarp, AlwaysChosen, ExpansionGamma };

inline constexpr Axiom kAllAxioms[] = {Axiom::Warp, Axiom::WarpS, Axiom::WeakWarp, Axiom::AlwaysChosen,
                                       Axiom::ExpansionGamma};

std::string_view to_string(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);

/// (A, B) with A a subset of B and c(A) != c(B) in A.
bool is_switch(const ChoiceFunction& c, Menu a, Menu b);

/// All minimal switches, ordered by base menu (size, mask) then added item.
std::vector<Switch> find_minimal_switches(const ChoiceFunction& c);

/// Descends from a switch (A, B) to a minimal switch (C, C + x) with
/// A within C and C + x within B. Throws NotASwitch.
Switch reduce_switch(const ChoiceFunction& c, Menu a, Menu b);

/// Witness layouts on failure:
///   warp            menus [A, A+x]        items [c(A), c(A+x)]
///   warp_s          menus [A, B]          items [b, a]      (c(B+a) != a)
///   weak_warp       menus [xy, A, B]      items [x, y]      (c(xy)=x=c(B), c(A)=y)
///   always_chosen   menus [A]             items [x]
///   expansion_gamma menus [A, B]          items [x]         (c(A)=c(B)=x != c(A|B))
AxiomVerdict check_axiom(const ChoiceFunction& c, Axiom axiom);

/// True iff the witness demonstrates a violation of `axiom` on c.
bool replay_witness(const ChoiceFunction& c, Axiom axiom, const Witness& w);

/// Conflicting menus: (A, A + b) and (B, B + a) are switches, a in A, b in B.
struct Conflict {
  Menu first;
  Menu second;
  Item a = -1;
  Item b = -1;
  friend bool operator==(const Conflict&, const Conflict&) = default;
};

/// Every ordered quadruple, in minimal-switch order of (A, A + b) then (B, B + a).
std::vector<Conflict> find_conflicting_menus(const ChoiceFunction& c);

}  // namespace salience
