#include <algorithm>
#include <string_view>
#include <utility>

#include "salience/io.hpp"

namespace salience {

namespace {

// Generated from fixtures/*.choice: {id, file text}.
constexpr std::pair<std::string_view, std::string_view> kPayloads[] = {
#include "fixture_payloads.inc"
};

std::string payload_of(std::string_view id) {
  for (const auto& [key, text] : kPayloads) {
    if (key == id) return std::string(text);
  }
  throw Error(Errc::InternalContractBreach, "no embedded payload for fixture " + std::string(id));
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  auto add = [&](std::string id, std::string description, std::map<std::string, bool> expected,
                 std::string witness = {}) {
    std::string payload = payload_of(id);
    out.push_back(Fixture{std::move(id), std::move(description), std::move(payload), std::move(expected),
                          std::move(witness)});
  };

  add("luce_raiffa", "Chicken, frog's legs, steak: adding frog's legs turns chicken into steak",
      {{"warp", false}, {"warp_s", true}, {"always_chosen", false}, {"rls", true}, {"cla", true},
       {"published_witness", true}},
      R"({"salience_classes": [["f"], ["c", "s"]],
          "rationales": {"c": ["c", "s", "f"], "f": ["s", "c", "f"], "s": ["c", "s", "f"]}})");

  add("fancy_restaurant", "Five dishes explained by a diamond-shaped salience suborder",
      {{"warp", false}, {"published_witness", true}},
      R"({"salience_relation": [["w", "p"], ["w", "f"], ["w", "c"], ["w", "s"],
                                ["p", "c"], ["p", "s"], ["f", "c"], ["f", "s"],
                                ["c", "s"], ["s", "c"]],
          "rationales": {"c": ["c", "s", "w", "p", "f"], "s": ["c", "s", "w", "p", "f"],
                         "f": ["w", "s", "p", "c", "f"], "p": ["w", "c", "p", "s", "f"],
                         "w": ["p", "s", "w", "c", "f"]}})");

  add("acyclic_not_asymmetric", "Revealed salience acyclic but not asymmetric",
      {{"cla", true}, {"rls", false}, {"warp_s", false}});

  add("decoy", "Attraction effect", {{"rls", true}, {"published_witness", true}},
      R"({"salience_classes": [["z"], ["x", "y"]],
          "rationales": {"x": ["y", "x", "z"], "y": ["y", "x", "z"], "z": ["x", "z", "y"]}})");

  add("compromise", "Compromise effect", {{"rls", true}, {"published_witness", true}},
      R"({"salience_classes": [["z"], ["y"], ["w", "x"]],
          "rationales": {"w": ["z", "y", "x", "w"], "x": ["z", "y", "x", "w"],
                         "y": ["x", "y", "z", "w"], "z": ["y", "x", "z", "w"]}})");

  add("handicap", "Handicapped avoidance, isomorphic to the decoy choice",
      {{"rls", true}, {"published_witness", true}},
      R"({"salience_classes": [["z"], ["x", "y"]],
          "rationales": {"x": ["x", "y", "z"], "y": ["x", "y", "z"], "z": ["y", "z", "x"]}})");

  add("shortlist", "Weak WARP and Expansion gamma without linear salience",
      {{"weak_warp", true}, {"expansion_gamma", true}, {"rls", false}, {"warp_s", false}});

  add("weak_warp_violation", "Linear salience without Weak WARP",
      {{"weak_warp", false}, {"rls", true}, {"warp_s", true}});
  return out;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

const Fixture& fixture_by_id(std::string_view id) {
  const auto& all = builtin_fixtures();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.id == id; });
  if (it == all.end()) throw Error(Errc::InvalidArgument, "unknown fixture '" + std::string(id) + "'");
  return *it;
}

std::map<std::string, bool> evaluate_fixture(const Fixture& f) {
  const ChoiceFunction c = parse_choice_file(f.payload);
  std::map<std::string, bool> out;
  for (const auto& [key, expected] : f.expected) {
    if (key == "rls") {
      out[key] = is_rls(c).holds;
    } else if (key == "cla") {
      out[key] = is_cla(c).holds;
    } else if (key == "published_witness") {
      const json w = json::parse(f.witness);
      if (w.contains("salience_relation")) {
        out[key] = verify_rs_witness(c, rs_witness_from_json(c.ground(), w));
      } else {
        out[key] = verify_rls_witness(c, rls_witness_from_json(c.ground(), w));
      }
    } else if (const auto axiom = parse_axiom(key)) {
      out[key] = check_axiom(c, *axiom).holds;
    } else {
      throw Error(Errc::InternalContractBreach, "fixture " + f.id + " expects unknown verdict " + key);
    }
  }
  return out;
}

}  // namespace salience
