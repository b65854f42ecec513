#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "salience/cli.hpp"

using namespace testing_support;

namespace {

const std::filesystem::path kFixtureDir = SALIENCE_FIXTURE_DIR;

Errc error_code_of(std::string_view text, int* line = nullptr) {
  try {
    parse_choice_file(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.code();
  }
  return Errc::InternalContractBreach;
}

std::string fixture_path(const std::string& id) { return (kFixtureDir / (id + ".choice")).string(); }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("choice file parsing") {
  const ChoiceFunction c = parse_choice_file("items: c f s\n# comment\n\nc f s -> s   # trailing\nc s -> c\nf s -> s\nc f -> c\n");
  CHECK(c == fixture_choice("luce_raiffa"));

  int line = 0;
  CHECK(error_code_of("items: a b c\na b -> a\na c -> a\nb a -> b\nb c -> b\na b c -> a\n", &line) ==
        Errc::DuplicateMenu);
  CHECK(line == 4);

  try {
    parse_choice_file("items: a b c\na b -> a\na c -> a\na b c -> a\n");
    FAIL("expected MissingMenu");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MissingMenu);
    CHECK(std::string(e.what()).find("{b c}") != std::string::npos);
  }

  CHECK(error_code_of("a b -> a\n", &line) == Errc::ParseError);
  CHECK(line == 1);
  CHECK(error_code_of("items: a b\na q -> a\n", &line) == Errc::ParseError);
  CHECK(line == 2);
  CHECK(error_code_of("items: a b\na b a\n", &line) == Errc::ParseError);
  CHECK(error_code_of("items: a b\na -> a\n", &line) == Errc::ParseError);
  CHECK(error_code_of("items: a b\na a -> a\n", &line) == Errc::ParseError);
  CHECK(error_code_of("items: a b\na b -> a b\n", &line) == Errc::ParseError);
  CHECK(error_code_of("items: a b c\na b -> c\n", &line) == Errc::NonMemberChoice);
  CHECK(line == 2);
  CHECK(error_code_of("items: a a\n", &line) == Errc::InvalidGround);
  CHECK(line == 1);
  CHECK(error_code_of("") == Errc::ParseError);
}

TEST_CASE("fixture files round-trip and match the embedded corpus") {
  CHECK(builtin_fixtures().size() == 8);
  for (const Fixture& f : builtin_fixtures()) {
    CAPTURE(f.id);
    const ChoiceFunction c = parse_choice_file(f.payload);
    const std::string text = serialize_choice_file(c);
    CHECK(parse_choice_file(text) == c);
    CHECK(serialize_choice_file(parse_choice_file(text)) == text);
    CHECK(read_choice_file(fixture_path(f.id)) == c);
  }
}

TEST_CASE("serialization orders menus by size then members") {
  const ChoiceFunction c = fixture_choice("compromise");
  const std::string text = serialize_choice_file(c);
  CHECK(text.rfind("items: w x y z\nw x -> x\nw y -> y\nw z -> z\nx y -> x\n", 0) == 0);
  CHECK(text.find("w x y z -> y\n") == text.size() - std::string("w x y z -> y\n").size());
}

TEST_CASE("fixture verdict maps") {
  for (const Fixture& f : builtin_fixtures()) {
    CAPTURE(f.id);
    CHECK(evaluate_fixture(f) == f.expected);
  }
  CHECK(canonical_form(fixture_choice("decoy")) == canonical_form(fixture_choice("handicap")));
}

TEST_CASE("witness JSON round-trips") {
  const ChoiceFunction c = fixture_choice("compromise");
  const RlsWitness rls = build_rls_witness(c);
  const json jr = rls_witness_to_json(c.ground(), rls);
  CHECK(jr.contains("salience"));
  CHECK(verify_rls_witness(c, rls_witness_from_json(c.ground(), jr)));

  const CslaWitness csla = build_csla_witness(c);
  const json jc = csla_witness_to_json(c.ground(), csla);
  CHECK(jc.at("filter").contains("w,x"));
  const CslaWitness back = csla_witness_from_json(c.ground(), jc);
  CHECK(back.rationale == csla.rationale);
  CHECK(back.filter == csla.filter);

  const RsWitness rs = minimal_rationale_witness(c);
  const RsWitness rs_back = rs_witness_from_json(c.ground(), rs_witness_to_json(c.ground(), rs));
  CHECK(rs_back.salience == rs.salience);
  CHECK(verify_rs_witness(c, rs_back));

  CHECK_THROWS_AS(rls_witness_from_json(c.ground(), json::parse(R"({"salience": ["w"], "rationales": {}})")), Error);
  CHECK_THROWS_AS(rls_witness_from_json(c.ground(), json::parse(R"({"rationales": {}})")), Error);
}

TEST_CASE("relation JSON is sorted label pairs") {
  const ChoiceFunction c = fixture_choice("luce_raiffa");
  CHECK(relation_to_json(c.ground(), revealed_salience_relation(c)).dump() == R"([["f","c"],["f","s"]])");
}

TEST_CASE("check command") {
  const Report r = run_command({"check", fixture_path("luce_raiffa")});
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("schema") == 1);
  std::map<std::string, bool> holds;
  for (const auto& v : j.at("verdicts")) holds[v.at("axiom").get<std::string>()] = v.at("holds").get<bool>();
  CHECK_FALSE(holds.at("warp"));
  CHECK(holds.at("warp_s"));
  CHECK(holds.at("rls"));
  const json& warp = j.at("verdicts").at(0);
  CHECK(warp.at("witness").at("menus").dump() == R"([["c","s"],["c","f","s"]])");

  const Report only = run_command({"check", fixture_path("decoy"), "--axiom", "rls", "cla"});
  CHECK(json::parse(only.out).at("verdicts").size() == 2);

  CHECK(run_command({"check", fixture_path("luce_raiffa")}).out == r.out);
}

TEST_CASE("salience, witness, verify and moody commands") {
  const Report s = run_command({"salience", fixture_path("acyclic_not_asymmetric")});
  CHECK(s.exit_code == 0);
  CHECK(json::parse(s.out).at("properties").at("asymmetric") == false);

  for (const char* model : {"rls", "csla", "rs-trivial"}) {
    const Report w = run_command({"witness", fixture_path("compromise"), "--model", model});
    CHECK(w.exit_code == 0);
    const json j = json::parse(w.out);
    CHECK(j.at("verified") == true);
    const auto path = temp_file(std::string("salience_witness_") + model + ".json", j.at("witness").dump());
    const Report v = run_command({"verify", fixture_path("compromise"), "--witness", path.string()});
    CHECK(v.exit_code == 0);
    CHECK(json::parse(v.out).at("valid") == true);
    const Report wrong = run_command({"verify", fixture_path("handicap"), "--witness", path.string()});
    CHECK(wrong.exit_code == 1);  // labels w do not exist there
    std::filesystem::remove(path);
  }

  const Report not_rls = run_command({"witness", fixture_path("acyclic_not_asymmetric"), "--model", "rls"});
  CHECK(not_rls.exit_code == 1);
  CHECK(not_rls.err.find("NotRls") != std::string::npos);

  const Report m = run_command({"moody", fixture_path("luce_raiffa")});
  CHECK(json::parse(m.out).at("minimal_rationale_count") == 2);
  CHECK(json::parse(m.out).at("moody") == false);

  const auto bad = temp_file("salience_bad_witness.json", "{not json");
  CHECK(run_command({"verify", fixture_path("decoy"), "--witness", bad.string()}).exit_code == 1);
  std::filesystem::remove(bad);
}

TEST_CASE("census, flipped and bound commands") {
  const Report c = run_command({"census", "-n", "4"});
  CHECK(c.exit_code == 0);
  CHECK(c.out == census_tsv_header() + "\n4\t20736\t864\t1\t40\t324\t1/864\t5/108\t3/8\n");
  CHECK(run_command({"census", "-n", "4", "--jobs", "3"}).out == c.out);
  const json cj = json::parse(run_command({"census", "-n", "3", "--format", "json"}).out);
  CHECK(cj.at("table").at("total_classes") == 4);

  const json f = json::parse(run_command({"flipped", "-n", "7", "--fill", "best"}).out);
  CHECK(f.at("verdict").at("holds") == true);
  const Report fc = run_command({"flipped", "-n", "6", "--format", "choice"});
  CHECK(parse_choice_file(fc.out) == make_flipped_choice(6));

  const json b = json::parse(run_command({"bound", "--q", "40", "-n", "20"}).out);
  CHECK(b.at("bound").at("magnitude") == -38);
}

TEST_CASE("exit codes") {
  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"census"}).exit_code == 2);
  CHECK(run_command({"census", "-n", "4", "--format", "xml"}).exit_code == 2);
  CHECK(run_command({"witness", fixture_path("decoy"), "--model", "magic"}).exit_code == 2);
  CHECK(run_command({"check", fixture_path("decoy"), "--axiom", "bogus"}).exit_code == 2);
  CHECK(run_command({"census", "-n", "5"}).exit_code == 1);
  CHECK(run_command({"bound", "--q", "40", "-n", "17"}).exit_code == 1);
  CHECK(run_command({"flipped", "-n", "5"}).exit_code == 1);
  CHECK(run_command({"check", "/nonexistent.choice"}).exit_code == 1);
  const Report help = run_command({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("census") != std::string::npos);

  const auto dup = temp_file("salience_dup.choice", "items: a b\na b -> a\nb a -> b\n");
  const Report d = run_command({"check", dup.string()});
  CHECK(d.exit_code == 1);
  CHECK(d.err.find("DuplicateMenu at line 3") != std::string::npos);
  std::filesystem::remove(dup);
}
