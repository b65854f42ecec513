#include "salience/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace salience {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

ChoiceFunction parse_choice_file(std::string_view text) {
  std::shared_ptr<const GroundSet> ground;
  std::vector<std::pair<Menu, Item>> assignments;
  std::vector<int> line_of;
  std::map<std::uint32_t, int> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!ground) {
      constexpr std::string_view kHeader = "items:";
      if (line.substr(0, kHeader.size()) != kHeader) {
        throw Error(Errc::ParseError, "expected header 'items: ...'", line_no);
      }
      try {
        ground = std::make_shared<const GroundSet>(split_ws(line.substr(kHeader.size())));
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), line_no);
      }
      continue;
    }

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw Error(Errc::ParseError, "expected 'members -> choice'", line_no);
    const auto members = split_ws(line.substr(0, arrow));
    const auto chosen = split_ws(line.substr(arrow + 2));
    if (chosen.size() != 1) throw Error(Errc::ParseError, "expected exactly one chosen item after '->'", line_no);

    std::uint32_t mask = 0;
    for (const auto& label : members) {
      const auto x = ground->index_of(label);
      if (!x) throw Error(Errc::ParseError, "unknown item '" + label + "'", line_no);
      if ((mask >> *x) & 1u) throw Error(Errc::ParseError, "item '" + label + "' repeated in menu", line_no);
      mask |= std::uint32_t{1} << *x;
    }
    const Menu menu(mask);
    if (menu.size() < 2) throw Error(Errc::ParseError, "menus need at least two items", line_no);
    if (auto [it, inserted] = seen.emplace(mask, line_no); !inserted) {
      throw Error(Errc::DuplicateMenu,
                  "menu {" + ground->format(menu) + "} already given at line " + std::to_string(it->second), line_no);
    }
    const auto pick = ground->index_of(chosen.front());
    if (!pick || !menu.contains(*pick)) {
      throw Error(Errc::NonMemberChoice, "menu {" + ground->format(menu) + "} cannot choose " + chosen.front(),
                  line_no);
    }
    assignments.emplace_back(menu, *pick);
  }
  if (!ground) throw Error(Errc::ParseError, "missing header 'items: ...'", line_no);
  return make_choice(*ground, assignments);
}

ChoiceFunction read_choice_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_choice_file(buf.str());
}

std::string serialize_choice_file(const ChoiceFunction& c) {
  const GroundSet& g = c.ground();
  std::vector<std::pair<int, std::vector<Item>>> menus;
  for (Menu m : menus_in_order(c.size())) menus.emplace_back(m.size(), m.members());
  std::sort(menus.begin(), menus.end());

  std::string out = "items:";
  for (const auto& label : g.labels()) out += " " + label;
  out += "\n";
  for (const auto& [size, members] : menus) {
    std::uint32_t mask = 0;
    for (Item x : members) {
      out += g.label(x) + " ";
      mask |= std::uint32_t{1} << x;
    }
    out += "-> " + g.label(c(Menu(mask))) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Item label_index(const GroundSet& g, const json& j) {
  if (!j.is_string()) throw Error(Errc::ParseError, "expected an item label, got " + j.dump());
  const auto x = g.index_of(j.get<std::string>());
  if (!x) throw Error(Errc::ParseError, "unknown item '" + j.get<std::string>() + "'");
  return *x;
}

LinearOrder order_from_json(const GroundSet& g, const json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "expected a list of labels");
  std::vector<Item> items;
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  for (const auto& e : j) {
    const Item x = label_index(g, e);
    if (used[static_cast<std::size_t>(x)]) throw Error(Errc::ParseError, "label repeated in an order");
    used[static_cast<std::size_t>(x)] = true;
    items.push_back(x);
  }
  if (static_cast<int>(items.size()) != g.size()) throw Error(Errc::ParseError, "an order must list every item");
  return LinearOrder(std::move(items));
}

json rationales_to_json(const GroundSet& g, const std::vector<LinearOrder>& rationales) {
  json out = json::object();
  for (Item x = 0; x < static_cast<Item>(rationales.size()); ++x) {
    out[g.label(x)] = order_to_json(g, rationales[static_cast<std::size_t>(x)]);
  }
  return out;
}

std::vector<LinearOrder> rationales_from_json(const GroundSet& g, const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "rationales must be an object keyed by label");
  std::vector<LinearOrder> out(static_cast<std::size_t>(g.size()));
  std::vector<bool> given(static_cast<std::size_t>(g.size()), false);
  for (const auto& [label, order] : j.items()) {
    const Item x = label_index(g, json(label));
    out[static_cast<std::size_t>(x)] = order_from_json(g, order);
    given[static_cast<std::size_t>(x)] = true;
  }
  if (std::find(given.begin(), given.end(), false) != given.end()) {
    throw Error(Errc::ParseError, "every item needs a rationale");
  }
  return out;
}

Menu menu_from_key(const GroundSet& g, const std::string& key) {
  std::uint32_t mask = 0;
  std::stringstream in(key);
  for (std::string label; std::getline(in, label, ',');) mask |= std::uint32_t{1} << label_index(g, json(label));
  return Menu(mask);
}

}  // namespace

json menu_to_json(const GroundSet& g, Menu m) {
  json out = json::array();
  for_each_member(m, [&](Item x) { out.push_back(g.label(x)); });
  return out;
}

std::string menu_key(const GroundSet& g, Menu m) {
  std::vector<std::string> labels;
  for_each_member(m, [&](Item x) { labels.push_back(g.label(x)); });
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

json verdict_to_json(const GroundSet& g, const AxiomVerdict& v) {
  json out{{"axiom", v.axiom}, {"holds", v.holds}};
  if (v.witness) {
    json menus = json::array();
    for (Menu m : v.witness->menus) menus.push_back(menu_to_json(g, m));
    json items = json::array();
    for (Item x : v.witness->items) items.push_back(g.label(x));
    out["witness"] = {{"menus", menus}, {"items", items}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json relation_to_json(const GroundSet& g, const Relation& r) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [x, y] : r.pairs()) pairs.emplace_back(g.label(x), g.label(y));
  std::sort(pairs.begin(), pairs.end());
  json out = json::array();
  for (const auto& [x, y] : pairs) out.push_back({x, y});
  return out;
}

json order_to_json(const GroundSet& g, const LinearOrder& o) {
  json out = json::array();
  for (Item x : o.items()) out.push_back(g.label(x));
  return out;
}

json switch_to_json(const GroundSet& g, const Switch& s) {
  return {{"base", menu_to_json(g, s.base)},
          {"added", g.label(s.added)},
          {"old_choice", g.label(s.old_choice)},
          {"new_choice", g.label(s.new_choice)}};
}

json rls_witness_to_json(const GroundSet& g, const RlsWitness& w) {
  json out = json::object();
  const bool linear = std::all_of(w.salience.begin(), w.salience.end(), [](const auto& c) { return c.size() == 1; });
  if (linear) {
    json order = json::array();
    for (const auto& cls : w.salience) order.push_back(g.label(cls.front()));
    out["salience"] = order;
  } else {
    json classes = json::array();
    for (const auto& cls : w.salience) {
      json row = json::array();
      for (Item x : cls) row.push_back(g.label(x));
      classes.push_back(row);
    }
    out["salience_classes"] = classes;
  }
  out["rationales"] = rationales_to_json(g, w.rationales);
  return out;
}

RlsWitness rls_witness_from_json(const GroundSet& g, const json& j) {
  RlsWitness w;
  if (j.contains("salience_classes")) {
    for (const auto& cls : j.at("salience_classes")) {
      if (!cls.is_array()) throw Error(Errc::ParseError, "salience_classes must be a list of lists");
      std::vector<Item> row;
      for (const auto& e : cls) row.push_back(label_index(g, e));
      w.salience.push_back(std::move(row));
    }
  } else if (j.contains("salience")) {
    if (!j.at("salience").is_array()) throw Error(Errc::ParseError, "salience must be a list of labels");
    for (const auto& e : j.at("salience")) w.salience.push_back({label_index(g, e)});
  } else {
    throw Error(Errc::ParseError, "witness needs 'salience' or 'salience_classes'");
  }
  if (!j.contains("rationales")) throw Error(Errc::ParseError, "witness needs 'rationales'");
  w.rationales = rationales_from_json(g, j.at("rationales"));
  return w;
}

json csla_witness_to_json(const GroundSet& g, const CslaWitness& w) {
  json filter = json::object();
  std::vector<Menu> menus = menus_in_order(g.size());
  std::vector<std::pair<std::string, Menu>> keyed;
  for (Menu m : menus) keyed.emplace_back(menu_key(g, m), m);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.second.size() != b.second.size() ? a.second.size() < b.second.size() : a.first < b.first;
  });
  for (const auto& [key, m] : keyed) filter[key] = menu_to_json(g, w.filter(m));
  return {{"rationale", order_to_json(g, w.rationale)}, {"filter", filter}};
}

CslaWitness csla_witness_from_json(const GroundSet& g, const json& j) {
  if (!j.contains("rationale") || !j.contains("filter") || !j.at("filter").is_object()) {
    throw Error(Errc::ParseError, "witness needs 'rationale' and a 'filter' object");
  }
  CslaWitness w{order_from_json(g, j.at("rationale")), FilterTable(g.size())};
  for (const auto& [key, members] : j.at("filter").items()) {
    const Menu m = menu_from_key(g, key);
    if (m.size() < 2) throw Error(Errc::ParseError, "filter key '" + key + "' is not a menu of size >= 2");
    std::uint32_t mask = 0;
    for (const auto& e : members) mask |= std::uint32_t{1} << label_index(g, e);
    w.filter.set(m, Menu(mask));
  }
  return w;
}

json rs_witness_to_json(const GroundSet& g, const RsWitness& w) {
  Relation off_diagonal = w.salience;
  for (Item x = 0; x < g.size(); ++x) off_diagonal.set(x, x, false);
  return {{"salience_relation", relation_to_json(g, off_diagonal)},
          {"rationales", rationales_to_json(g, w.rationales)}};
}

RsWitness rs_witness_from_json(const GroundSet& g, const json& j) {
  if (!j.contains("salience_relation") || !j.contains("rationales")) {
    throw Error(Errc::ParseError, "witness needs 'salience_relation' and 'rationales'");
  }
  RsWitness w{Relation(g.size()), rationales_from_json(g, j.at("rationales"))};
  for (Item x = 0; x < g.size(); ++x) w.salience.set(x, x);
  for (const auto& pair : j.at("salience_relation")) {
    if (!pair.is_array() || pair.size() != 2) throw Error(Errc::ParseError, "salience pairs must be [x, y]");
    w.salience.set(label_index(g, pair[0]), label_index(g, pair[1]));
  }
  return w;
}

json census_to_json(const CensusTable& t) {
  auto fraction = [](const Fraction& f) { return json{{"exact", f.str()}, {"log10", f.log10()}}; };
  return {{"n", t.n},
          {"total_functions", t.total_functions},
          {"total_classes", t.total_classes},
          {"warp", t.warp},
          {"rls", t.rls},
          {"cla", t.cla},
          {"fraction_warp", fraction(t.fraction_warp())},
          {"fraction_rls", fraction(t.fraction_rls())},
          {"fraction_cla", fraction(t.fraction_cla())},
          {"functions", {{"warp", t.warp_functions}, {"rls", t.rls_functions}, {"cla", t.cla_functions}}},
          {"uniform_orbits", t.uniform_orbits}};
}

std::string census_tsv_header() {
  return "n\ttotal_functions\ttotal_classes\twarp\trls\tcla\tfraction_warp\tfraction_rls\tfraction_cla";
}

std::string census_tsv_row(const CensusTable& t) {
  std::ostringstream out;
  out << t.n << '\t' << t.total_functions << '\t' << t.total_classes << '\t' << t.warp << '\t' << t.rls << '\t'
      << t.cla << '\t' << t.fraction_warp().str() << '\t' << t.fraction_rls().str() << '\t'
      << t.fraction_cla().str();
  return out.str();
}

json bound_to_json(const HereditaryBound& b) {
  return {{"q", b.q},
          {"n", b.n},
          {"exponent", b.exponent},
          {"exact", b.numerator + "/" + b.denominator},
          {"magnitude", b.magnitude},
          {"log10", b.log10}};
}

}  // namespace salience
