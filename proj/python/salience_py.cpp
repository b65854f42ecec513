#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "salience/cli.hpp"
#include "salience/io.hpp"

namespace py = pybind11;
using namespace salience;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::string> labels_of(const GroundSet& g, Menu m) {
  std::vector<std::string> out;
  for_each_member(m, [&](Item x) { out.push_back(g.label(x)); });
  return out;
}

std::vector<std::pair<std::string, std::string>> pairs_of(const GroundSet& g, const Relation& r) {
  return to_python(relation_to_json(g, r)).cast<std::vector<std::pair<std::string, std::string>>>();
}

Menu menu_from_labels(const GroundSet& g, const std::vector<std::string>& labels) {
  std::uint32_t mask = 0;
  for (const auto& l : labels) {
    const auto x = g.index_of(l);
    if (!x) throw Error(Errc::InvalidArgument, "unknown item '" + l + "'");
    mask |= std::uint32_t{1} << *x;
  }
  if (mask == 0) throw Error(Errc::InvalidArgument, "empty menu");
  return Menu(mask);
}

}  // namespace

PYBIND11_MODULE(salience, m) {
  m.doc() = "Choice functions, revealed salience and limited attention.";

  py::register_exception<Error>(m, "SalienceError", PyExc_ValueError);

  py::class_<ChoiceFunction>(m, "ChoiceFunction")
      .def_static("parse", [](const std::string& text) { return parse_choice_file(text); }, py::arg("text"))
      .def_static("read", [](const std::string& path) { return read_choice_file(path); }, py::arg("path"))
      .def_static("fixture", [](const std::string& id) { return parse_choice_file(fixture_by_id(id).payload); },
                  py::arg("id"))
      .def_static(
          "flipped",
          [](int n, const std::string& fill) {
            if (fill != "worst" && fill != "best") throw Error(Errc::InvalidArgument, "fill must be worst or best");
            return make_flipped_choice(n, fill == "best" ? FillRule::Best : FillRule::Worst);
          },
          py::arg("n"), py::arg("fill") = "worst")
      .def_property_readonly("items", [](const ChoiceFunction& c) { return c.ground().labels(); })
      .def("__call__",
           [](const ChoiceFunction& c, const std::vector<std::string>& menu) {
             return c.ground().label(c(menu_from_labels(c.ground(), menu)));
           })
      .def("__eq__", [](const ChoiceFunction& a, const ChoiceFunction& b) { return a == b; })
      .def("__str__", [](const ChoiceFunction& c) { return serialize_choice_file(c); })
      .def("subchoice",
           [](const ChoiceFunction& c, const std::vector<std::string>& menu) {
             return subchoice(c, menu_from_labels(c.ground(), menu));
           })
      .def("canonical_code",
           [](const ChoiceFunction& c) {
             const CanonicalCode code = canonical_form(c);
             return std::vector<int>(code.begin(), code.end());
           })
      .def("check",
           [](const ChoiceFunction& c, const std::string& axiom) {
             if (axiom == "rls") return to_python(verdict_to_json(c.ground(), is_rls(c)));
             if (axiom == "cla") return to_python(verdict_to_json(c.ground(), is_cla(c)));
             const auto a = parse_axiom(axiom);
             if (!a) throw Error(Errc::InvalidArgument, "unknown axiom '" + axiom + "'");
             return to_python(verdict_to_json(c.ground(), check_axiom(c, *a)));
           })
      .def("is_rls", [](const ChoiceFunction& c) { return is_rls(c).holds; })
      .def("is_cla", [](const ChoiceFunction& c) { return is_cla(c).holds; })
      .def("is_csla", [](const ChoiceFunction& c) { return is_csla_exhaustive(c); })
      .def("revealed_salience",
           [](const ChoiceFunction& c) { return pairs_of(c.ground(), revealed_salience_relation(c)); })
      .def("revealed_preference",
           [](const ChoiceFunction& c) { return pairs_of(c.ground(), revealed_preference_p(c)); })
      .def("conflicting_menus",
           [](const ChoiceFunction& c) {
             std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
             for (const Conflict& k : find_conflicting_menus(c)) {
               out.emplace_back(labels_of(c.ground(), k.first), labels_of(c.ground(), k.second));
             }
             return out;
           })
      .def("rls_witness", [](const ChoiceFunction& c) { return to_python(rls_witness_to_json(c.ground(), build_rls_witness(c))); })
      .def("csla_witness",
           [](const ChoiceFunction& c) { return to_python(csla_witness_to_json(c.ground(), build_csla_witness(c))); })
      .def("minimal_rationale_witness",
           [](const ChoiceFunction& c) { return to_python(rs_witness_to_json(c.ground(), minimal_rationale_witness(c))); })
      .def("minimal_rationale_count", [](const ChoiceFunction& c) { return minimal_rationale_count(c); })
      .def("is_moody", [](const ChoiceFunction& c) { return is_moody(c); });

  m.def("census", [](int n, int jobs) { return to_python(census_to_json(classify_census(n, jobs))); }, py::arg("n"),
        py::arg("jobs") = 1);
  m.def("hereditary_bound", [](std::uint32_t q, int n) { return to_python(bound_to_json(hereditary_bound(q, n))); },
        py::arg("q"), py::arg("n"));
  m.def("fixtures", [] {
    std::vector<std::string> ids;
    for (const Fixture& f : builtin_fixtures()) ids.push_back(f.id);
    return ids;
  });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        const Report r = run_command(args);
        return py::make_tuple(r.exit_code, r.out, r.err);
      },
      py::arg("args"));
}
