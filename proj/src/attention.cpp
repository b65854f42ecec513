#include "salience/attention.hpp"

#include <algorithm>
#include <numeric>

#include "salience/salience.hpp"

namespace salience {

FilterTable::FilterTable(int n) : n_(n), entries_(std::size_t{1} << n, 0) {
  for (std::uint32_t m = 1; m < entries_.size(); ++m) entries_[m] = m;
}

void FilterTable::set(Menu m, Menu attended) {
  if (m.mask() >= entries_.size()) throw Error(Errc::InvalidArgument, "menu outside the filter table");
  entries_[m.mask()] = attended.mask();
}

bool FilterTable::is_correspondence() const {
  for (Menu m : menus_in_order(n_)) {
    const Menu g = (*this)(m);
    if (g.empty() || !g.subset_of(m)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Relation revealed_preference_p(const ChoiceFunction& c) {
  Relation p(c.size());
  for (Menu a : menus_in_order(c.size())) {
    const Item x = c(a);
    for_each_member(a.without(x), [&](Item y) {
      if (c(a.without(y)) != x) p.set(x, y);
    });
  }
  return p;
}

Relation revealed_preference_p_tilde(const ChoiceFunction& c) {
  return revealed_salience_relation(c).converse();
}

AxiomVerdict is_cla(const ChoiceFunction& c) {
  const Relation p = revealed_preference_p(c);
  auto cycle = find_cycle(p);
  if (!cycle) return AxiomVerdict{"cla", true, std::nullopt};
  // Attach, per arc x P y, the first menu A with x = c(A) != c(A - y).
  Witness w;
  w.items = *cycle;
  for (std::size_t i = 0; i < cycle->size(); ++i) {
    const Item x = (*cycle)[i];
    const Item y = (*cycle)[(i + 1) % cycle->size()];
    for (Menu a : menus_in_order(c.size())) {
      if (a.contains(y) && c(a) == x && c(a.without(y)) != x) {
        w.menus.push_back(a);
        break;
      }
    }
  }
  return AxiomVerdict{"cla", false, std::move(w)};
}

FilterTable canonical_filter(const ChoiceFunction& c, const LinearOrder& rationale) {
  FilterTable f(c.size());
  for (Menu a : menus_in_order(c.size())) {
    const Item chosen = c(a);
    std::uint32_t attended = 0;
    for_each_member(a, [&](Item y) {
      if (y == chosen || rationale.better(chosen, y)) attended |= std::uint32_t{1} << y;
    });
    f.set(a, Menu(attended));
  }
  return f;
}

CslaWitness build_csla_witness(const ChoiceFunction& c) {
  const Relation p_tilde = revealed_preference_p_tilde(c);
  if (!check_properties(p_tilde).asymmetric) throw Error(Errc::NotRls, "revealed salience is not asymmetric");
  LinearOrder rationale;
  try {
    rationale = linear_extension(p_tilde);
  } catch (const Error&) {
    throw Error(Errc::InternalContractBreach, "asymmetric revealed salience has a long cycle");
  }
  CslaWitness w{rationale, canonical_filter(c, rationale)};
  if (!verify_salient_filter(c, w)) {
    throw Error(Errc::InternalContractBreach, "canonical filter fails the salient-attention law");
  }
  return w;
}

bool verify_salient_filter(const ChoiceFunction& c, const CslaWitness& w) {
  const int n = c.size();
  if (w.rationale.size() != n || w.filter.size() != n || !w.filter.is_correspondence()) return false;
  for (Menu b : menus_in_order(n)) {
    const Menu attended = w.filter(b);
    const Item best = w.rationale.top(attended);
    if (best != c(b)) return false;
    const Item worst = w.rationale.bottom(b);
    for (Item x : b.members()) {
      if (x == worst || x == best) continue;
      if (attended.without(x) != w.filter(b.without(x))) return false;
    }
  }
  return true;
}

bool is_csla_exhaustive(const ChoiceFunction& c) {
  const int n = c.size();
  if (n > kMaxCslaSearchItems) {
    throw Error(Errc::GroundTooLarge, "exhaustive CSLA search is limited to " + std::to_string(kMaxCslaSearchItems) +
                                          " items");
  }
  std::vector<Item> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    const LinearOrder rationale(order);
    if (verify_salient_filter(c, CslaWitness{rationale, canonical_filter(c, rationale)})) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace salience
