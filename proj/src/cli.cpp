#include "salience/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "salience/io.hpp"

namespace salience {

namespace {

constexpr int kSchema = 1;

json header(const std::string& command) { return json{{"schema", kSchema}, {"command", command}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> verdict_names() {
  std::vector<std::string> names;
  for (Axiom a : kAllAxioms) names.emplace_back(to_string(a));
  names.emplace_back("rls");
  names.emplace_back("cla");
  return names;
}

AxiomVerdict verdict_by_name(const ChoiceFunction& c, const std::string& name) {
  if (name == "rls") return is_rls(c);
  if (name == "cla") return is_cla(c);
  return check_axiom(c, *parse_axiom(name));
}

json items_json(const GroundSet& g) { return g.labels(); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

Report run_command(const std::vector<std::string>& args) {
  CLI::App app{"Decide and witness salience-based properties of finite choice functions", "salience"};
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "Add wall-clock timings to the report");

  std::string file;
  std::vector<std::string> axioms;
  auto* check = app.add_subcommand("check", "Axiom verdicts with replayable witnesses");
  check->add_option("file", file, "Choice file")->required();
  check->add_option("--axiom", axioms, "Restrict to these verdicts")
      ->check(CLI::IsMember(verdict_names()))
      ->take_all();

  auto* sal = app.add_subcommand("salience", "Revealed salience with the switch behind each pair");
  sal->add_option("file", file, "Choice file")->required();

  std::string model;
  auto* wit = app.add_subcommand("witness", "Construct and verify a witness");
  wit->add_option("file", file, "Choice file")->required();
  wit->add_option("--model", model, "rls, csla or rs-trivial")
      ->required()
      ->check(CLI::IsMember({"rls", "csla", "rs-trivial"}));

  std::string witness_path;
  auto* ver = app.add_subcommand("verify", "Replay a witness against a choice");
  ver->add_option("file", file, "Choice file")->required();
  ver->add_option("--witness", witness_path, "Witness JSON file")->required();

  auto* moody = app.add_subcommand("moody", "Minimal number of rationales (n <= 5)");
  moody->add_option("file", file, "Choice file")->required();

  int n = 0;
  int jobs = 1;
  std::string format = "tsv";
  auto* census = app.add_subcommand("census", "Exhaustive isomorphism census (n <= 4)");
  census->add_option("-n", n, "Number of items")->required();
  census->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  census->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  std::string fill = "worst";
  std::string flipped_format = "json";
  auto* flipped = app.add_subcommand("flipped", "Generate and check a flipped choice (n >= 6)");
  flipped->add_option("-n", n, "Number of items")->required();
  flipped->add_option("--fill", fill, "Rule for menus above six items")->check(CLI::IsMember({"worst", "best"}));
  flipped->add_option("--format", flipped_format, "json or choice")->check(CLI::IsMember({"json", "choice"}));

  std::uint32_t q = 0;
  auto* bound = app.add_subcommand("bound", "Hereditary fraction bound (q/864)^e");
  bound->add_option("--q", q, "Classes on four items with the property")->required();
  bound->add_option("-n", n, "Ground set size: 16, 20, 28 or 32")->required();

  Report report;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    report.exit_code = app.exit(e, out, err);
    if (report.exit_code != 0) report.exit_code = 2;
    report.out = out.str();
    report.err = err.str();
    return report;
  }

  const Stopwatch clock;
  auto finish = [&](json j) {
    if (timings) j["timings"] = {{"seconds", clock.seconds()}};
    out << dump(j);
  };

  try {
    if (check->parsed()) {
      const ChoiceFunction c = read_choice_file(file);
      json j = header("check");
      j["file"] = file;
      j["items"] = items_json(c.ground());
      json verdicts = json::array();
      for (const auto& name : axioms.empty() ? verdict_names() : axioms) {
        verdicts.push_back(verdict_to_json(c.ground(), verdict_by_name(c, name)));
      }
      j["verdicts"] = verdicts;
      finish(std::move(j));
    } else if (sal->parsed()) {
      const ChoiceFunction c = read_choice_file(file);
      const RevealedSalience rs = revealed_salience(c);
      const PropertyReport props = check_properties(rs.relation);
      json j = header("salience");
      j["file"] = file;
      j["items"] = items_json(c.ground());
      j["relation"] = relation_to_json(c.ground(), rs.relation);
      json provenance = json::array();
      for (const auto& [pair, sw] : rs.provenance) {
        provenance.push_back({{"pair", {c.ground().label(pair.first), c.ground().label(pair.second)}},
                              {"switch", switch_to_json(c.ground(), sw)}});
      }
      j["provenance"] = provenance;
      j["properties"] = {{"asymmetric", props.asymmetric}, {"acyclic", props.acyclic}, {"transitive", props.transitive}};
      finish(std::move(j));
    } else if (wit->parsed()) {
      const ChoiceFunction c = read_choice_file(file);
      json j = header("witness");
      j["file"] = file;
      j["model"] = model;
      if (model == "rls") {
        const RlsWitness w = build_rls_witness(c);
        j["witness"] = rls_witness_to_json(c.ground(), w);
        j["verified"] = verify_rls_witness(c, w);
      } else if (model == "csla") {
        const CslaWitness w = build_csla_witness(c);
        j["witness"] = csla_witness_to_json(c.ground(), w);
        j["verified"] = verify_salient_filter(c, w);
      } else {
        const RsWitness w = trivial_rs(c);
        j["witness"] = rs_witness_to_json(c.ground(), w);
        j["verified"] = verify_rs_witness(c, w);
      }
      finish(std::move(j));
    } else if (ver->parsed()) {
      const ChoiceFunction c = read_choice_file(file);
      json w;
      try {
        w = json::parse(read_text(witness_path));
      } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, std::string("witness is not valid JSON: ") + e.what());
      }
      if (!w.is_object()) throw Error(Errc::ParseError, "witness must be a JSON object");
      json j = header("verify");
      j["file"] = file;
      if (w.contains("salience_relation")) {
        j["model"] = "rs";
        j["valid"] = verify_rs_witness(c, rs_witness_from_json(c.ground(), w));
      } else if (w.contains("rationale")) {
        j["model"] = "csla";
        j["valid"] = verify_salient_filter(c, csla_witness_from_json(c.ground(), w));
      } else {
        j["model"] = "rls";
        j["valid"] = verify_rls_witness(c, rls_witness_from_json(c.ground(), w));
      }
      finish(std::move(j));
    } else if (moody->parsed()) {
      const ChoiceFunction c = read_choice_file(file);
      const RsWitness w = minimal_rationale_witness(c);
      json j = header("moody");
      j["file"] = file;
      j["minimal_rationale_count"] = w.distinct_count();
      j["moody"] = w.distinct_count() == c.size();
      j["witness"] = rs_witness_to_json(c.ground(), w);
      finish(std::move(j));
    } else if (census->parsed()) {
      const CensusTable t = classify_census(n, jobs);
      if (format == "tsv") {
        out << census_tsv_header() << "\n" << census_tsv_row(t) << "\n";
        if (timings) err << "seconds\t" << clock.seconds() << "\n";
      } else {
        json j = header("census");
        j["table"] = census_to_json(t);
        finish(std::move(j));
      }
    } else if (flipped->parsed()) {
      const ChoiceFunction c = make_flipped_choice(n, fill == "best" ? FillRule::Best : FillRule::Worst);
      std::vector<Item> best_first(static_cast<std::size_t>(n));
      for (Item x = 0; x < n; ++x) best_first[static_cast<std::size_t>(x)] = n - 1 - x;
      const AxiomVerdict v = check_flipped(c, LinearOrder(best_first));
      if (flipped_format == "choice") {
        out << serialize_choice_file(c);
      } else {
        json j = header("flipped");
        j["n"] = n;
        j["fill"] = fill;
        j["menus"] = menus_in_order(n).size();
        j["verdict"] = verdict_to_json(c.ground(), v);
        finish(std::move(j));
      }
    } else if (bound->parsed()) {
      json j = header("bound");
      j["bound"] = bound_to_json(hereditary_bound(q, n));
      finish(std::move(j));
    }
  } catch (const Error& e) {
    report.exit_code = 1;
    err << "error: " << e.what() << "\n";
  }
  report.out = out.str();
  report.err = err.str();
  return report;
}

}  // namespace salience
