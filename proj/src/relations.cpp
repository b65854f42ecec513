#include "salience/relations.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace salience {

Relation::Relation(int n) : rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxItems) throw Error(Errc::GroundTooLarge, "relation over " + std::to_string(n) + " items");
}

Relation Relation::from_pairs(int n, std::span<const std::pair<Item, Item>> pairs) {
  Relation r(n);
  for (auto [x, y] : pairs) r.set(x, y);
  return r;
}

void Relation::set(Item x, Item y, bool value) {
  if (x < 0 || y < 0 || x >= size() || y >= size()) throw Error(Errc::InvalidArgument, "item outside relation");
  auto& row = rows_[static_cast<std::size_t>(x)];
  const std::uint32_t bit = std::uint32_t{1} << y;
  row = value ? (row | bit) : (row & ~bit);
}

Menu Relation::column(Item x) const {
  std::uint32_t out = 0;
  for (Item y = 0; y < size(); ++y) {
    if (holds(y, x)) out |= std::uint32_t{1} << y;
  }
  return Menu(out);
}

Relation Relation::converse() const {
  Relation out(size());
  for (auto [x, y] : pairs()) out.set(y, x);
  return out;
}

Relation Relation::strict_part() const {
  Relation out(size());
  for (auto [x, y] : pairs()) {
    if (!holds(y, x)) out.set(x, y);
  }
  return out;
}

bool Relation::subset_of(const Relation& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((rows_[i] & ~other.rows_[i]) != 0) return false;
  }
  return true;
}

bool Relation::empty() const {
  return std::all_of(rows_.begin(), rows_.end(), [](std::uint32_t r) { return r == 0; });
}

std::vector<std::pair<Item, Item>> Relation::pairs() const {
  std::vector<std::pair<Item, Item>> out;
  for (Item x = 0; x < size(); ++x) {
    for_each_member(row(x), [&](Item y) { out.emplace_back(x, y); });
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Tarjan's SCC over the off-diagonal arcs; returns component id per item.
std::vector<int> strongly_connected_components(const Relation& r, int& count) {
  const int n = r.size();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<Item> stack;
  int next_index = 0;
  count = 0;
  std::function<void(Item)> visit = [&](Item v) {
    const auto sv = static_cast<std::size_t>(v);
    index[sv] = low[sv] = next_index++;
    stack.push_back(v);
    on_stack[sv] = true;
    for_each_member(r.row(v).without(v), [&](Item w) {
      const auto sw = static_cast<std::size_t>(w);
      if (index[sw] < 0) {
        visit(w);
        low[sv] = std::min(low[sv], low[sw]);
      } else if (on_stack[sw]) {
        low[sv] = std::min(low[sv], index[sw]);
      }
    });
    if (low[sv] == index[sv]) {
      Item w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = false;
        comp[static_cast<std::size_t>(w)] = count;
      } while (w != v);
      ++count;
    }
  };
  for (Item v = 0; v < n; ++v) {
    if (index[static_cast<std::size_t>(v)] < 0) visit(v);
  }
  return comp;
}

/// Shortest path from `from` to `to` using arcs inside `allowed`.
std::vector<Item> shortest_path(const Relation& r, Item from, Item to, Menu allowed) {
  const int n = r.size();
  std::vector<Item> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<Item> queue{from};
  seen[static_cast<std::size_t>(from)] = true;
  while (!queue.empty()) {
    const Item v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for_each_member(r.row(v) & allowed, [&](Item w) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    });
  }
  std::vector<Item> path;
  if (!seen[static_cast<std::size_t>(to)]) return path;
  for (Item v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::vector<Item>> find_long_cycle(const Relation& r) {
  // Inside a strongly connected component with no cycle of length >= 3,
  // every arc is symmetric and the undirected skeleton is a tree.
  const int n = r.size();
  int count = 0;
  const std::vector<int> comp = strongly_connected_components(r, count);
  for (int k = 0; k < count; ++k) {
    std::uint32_t members = 0;
    for (Item v = 0; v < n; ++v) {
      if (comp[static_cast<std::size_t>(v)] == k) members |= std::uint32_t{1} << v;
    }
    const Menu scc(members);
    if (scc.size() < 3) continue;

    // An asymmetric arc u -> v closes with a path v ~> u of length >= 2.
    for (Item u : scc.members()) {
      for (Item v : (r.row(u) & scc).without(u).members()) {
        if (!r.holds(v, u)) {
          std::vector<Item> back = shortest_path(r, v, u, scc);
          std::vector<Item> cycle{u};
          cycle.insert(cycle.end(), back.begin(), back.end() - 1);
          return cycle;
        }
      }
    }

    // All arcs symmetric: look for an undirected cycle by DFS.
    std::vector<Item> parent(static_cast<std::size_t>(n), -2);
    std::vector<Item> stack{scc.lowest()};
    parent[static_cast<std::size_t>(scc.lowest())] = -1;
    std::vector<Item> order;
    while (!stack.empty()) {
      const Item v = stack.back();
      stack.pop_back();
      for (Item w : (r.row(v) & scc).without(v).members()) {
        if (w == parent[static_cast<std::size_t>(v)]) continue;
        if (parent[static_cast<std::size_t>(w)] != -2) {
          // Tree paths from v and w to the root meet at their lowest common ancestor.
          std::vector<Item> pv, pw;
          for (Item a = v; a != -1; a = parent[static_cast<std::size_t>(a)]) pv.push_back(a);
          for (Item a = w; a != -1; a = parent[static_cast<std::size_t>(a)]) pw.push_back(a);
          while (pv.size() > 1 && pw.size() > 1 && pv[pv.size() - 2] == pw[pw.size() - 2]) {
            pv.pop_back();
            pw.pop_back();
          }
          // pv ends at the common ancestor; walk v -> ancestor, then ancestor -> w.
          std::vector<Item> cycle(pv.begin(), pv.end());
          for (std::size_t i = pw.size() - 1; i-- > 0;) cycle.push_back(pw[i]);
          std::reverse(cycle.begin(), cycle.end());
          if (cycle.size() >= 3) return cycle;
          continue;
        }
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Item>> find_cycle(const Relation& r) {
  for (auto [x, y] : r.pairs()) {
    if (x != y && r.holds(y, x)) return std::vector<Item>{x, y};
  }
  return find_long_cycle(r);
}

PropertyReport check_properties(const Relation& r) {
  PropertyReport rep;
  const int n = r.size();
  for (Item x = 0; x < n && rep.reflexive; ++x) {
    if (!r.holds(x, x)) {
      rep.reflexive = false;
      rep.reflexive_witness = x;
    }
  }
  for (auto [x, y] : r.pairs()) {
    if (r.holds(y, x) && rep.asymmetric) {
      rep.asymmetric = false;
      rep.asymmetric_witness = std::pair{x, y};
    }
    if (!r.holds(y, x) && rep.symmetric) {
      rep.symmetric = false;
      rep.symmetric_witness = std::pair{x, y};
    }
    if (x != y && r.holds(y, x) && rep.antisymmetric) {
      rep.antisymmetric = false;
      rep.antisymmetric_witness = std::pair{x, y};
    }
    if (rep.transitive) {
      const Menu missing = r.row(y) - r.row(x);
      if (!missing.empty()) {
        rep.transitive = false;
        rep.transitive_witness = std::array<Item, 3>{x, y, missing.lowest()};
      }
    }
  }
  for (Item x = 0; x < n && rep.complete; ++x) {
    for (Item y = x + 1; y < n; ++y) {
      if (!r.holds(x, y) && !r.holds(y, x)) {
        rep.complete = false;
        rep.complete_witness = std::pair{x, y};
        break;
      }
    }
  }
  if (auto cycle = find_long_cycle(r)) {
    rep.acyclic = false;
    rep.cycle_witness = std::move(*cycle);
  }
  return rep;
}

Relation transitive_closure(const Relation& r) {
  const int n = r.size();
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
  for (Item x = 0; x < n; ++x) rows[static_cast<std::size_t>(x)] = r.row(x).mask();
  for (Item k = 0; k < n; ++k) {
    const std::uint32_t through = rows[static_cast<std::size_t>(k)];
    for (Item x = 0; x < n; ++x) {
      if ((rows[static_cast<std::size_t>(x)] >> k) & 1u) rows[static_cast<std::size_t>(x)] |= through;
    }
  }
  Relation out(n);
  for (Item x = 0; x < n; ++x) {
    for_each_member(Menu(rows[static_cast<std::size_t>(x)]), [&](Item y) { out.set(x, y); });
  }
  return out;
}

// ---------------------------------------------------------------------------

LinearOrder::LinearOrder(std::vector<Item> best_to_worst) : order_(std::move(best_to_worst)) {
  const int n = static_cast<int>(order_.size());
  rank_.assign(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Item x = order_[static_cast<std::size_t>(i)];
    if (x < 0 || x >= n || rank_[static_cast<std::size_t>(x)] != -1) {
      throw Error(Errc::InvalidArgument, "linear order is not a permutation of the items");
    }
    rank_[static_cast<std::size_t>(x)] = i;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<Item> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return LinearOrder(std::move(order));
}

Item LinearOrder::top(Menu m) const {
  Item best = -1;
  for_each_member(m, [&](Item x) {
    if (best < 0 || rank(x) < rank(best)) best = x;
  });
  return best;
}

Item LinearOrder::bottom(Menu m) const {
  Item worst = -1;
  for_each_member(m, [&](Item x) {
    if (worst < 0 || rank(x) > rank(worst)) worst = x;
  });
  return worst;
}

Relation LinearOrder::as_relation() const {
  Relation r(size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (std::size_t j = i + 1; j < order_.size(); ++j) r.set(order_[i], order_[j]);
  }
  return r;
}

LinearOrder linear_extension(const Relation& r) {
  const int n = r.size();
  std::vector<std::uint32_t> preds(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : r.pairs()) {
    if (x != y) preds[static_cast<std::size_t>(y)] |= std::uint32_t{1} << x;
  }
  std::uint32_t remaining = Menu::full(n).mask();
  std::vector<Item> order;
  order.reserve(static_cast<std::size_t>(n));
  while (remaining != 0) {
    Item pick = -1;
    for_each_member(Menu(remaining), [&](Item x) {
      if (pick < 0 && (preds[static_cast<std::size_t>(x)] & remaining) == 0) pick = x;
    });
    if (pick < 0) throw Error(Errc::NotExtendable, "relation has a cycle");
    order.push_back(pick);
    remaining &= ~(std::uint32_t{1} << pick);
  }
  return LinearOrder(std::move(order));
}

Menu maximal_elements(Menu menu, const Relation& r) {
  std::uint32_t out = 0;
  for_each_member(menu, [&](Item x) {
    bool dominated = false;
    for_each_member(menu, [&](Item y) {
      if (y != x && r.holds(y, x) && !r.holds(x, y)) dominated = true;
    });
    if (!dominated) out |= std::uint32_t{1} << x;
  });
  if (out == 0) throw Error(Errc::EmptyMax, "no maximal element: strict part is cyclic on the menu");
  return Menu(out);
}

}  // namespace salience
