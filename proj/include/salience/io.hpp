#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "salience/attention.hpp"
#include "salience/axioms.hpp"
#include "salience/core.hpp"
#include "salience/lab.hpp"
#include "salience/relations.hpp"
#include "salience/salience.hpp"

namespace salience {

using json = nlohmann::ordered_json;

// Choice files ---------------------------------------------------------------
//
//   items: a b c
//   a b -> a
//   a b c -> c     # comment
//
// Every menu of size >= 2 appears exactly once; singletons never appear.

ChoiceFunction parse_choice_file(std::string_view text);
ChoiceFunction read_choice_file(const std::filesystem::path& path);

/// Menus by size, then lexicographic member-index sequence.
std::string serialize_choice_file(const ChoiceFunction& c);

// JSON -----------------------------------------------------------------------

json menu_to_json(const GroundSet& g, Menu m);
/// Sorted member labels joined by commas.
std::string menu_key(const GroundSet& g, Menu m);

json verdict_to_json(const GroundSet& g, const AxiomVerdict& v);
/// Ordered label pairs, sorted lexicographically.
json relation_to_json(const GroundSet& g, const Relation& r);
json order_to_json(const GroundSet& g, const LinearOrder& o);
json switch_to_json(const GroundSet& g, const Switch& s);

/// {salience: [...], rationales: {label: [...]}}; classes of size > 1 use
/// {salience_classes: [[...]], ...} instead.
json rls_witness_to_json(const GroundSet& g, const RlsWitness& w);
RlsWitness rls_witness_from_json(const GroundSet& g, const json& j);

/// {rationale: [...], filter: {menu-key: [...]}}.
json csla_witness_to_json(const GroundSet& g, const CslaWitness& w);
CslaWitness csla_witness_from_json(const GroundSet& g, const json& j);

/// {salience_relation: [[x, y], ...], rationales: {label: [...]}}. The
/// reflexive pairs are implied.
json rs_witness_to_json(const GroundSet& g, const RsWitness& w);
RsWitness rs_witness_from_json(const GroundSet& g, const json& j);

json census_to_json(const CensusTable& t);
std::string census_tsv_header();
std::string census_tsv_row(const CensusTable& t);

json bound_to_json(const HereditaryBound& b);

// Fixtures -------------------------------------------------------------------

struct Fixture {
  std::string id;
  std::string description;
  std::string payload;
  /// Verdict name -> expected value. Names are axiom names plus "rls", "cla"
  /// and "published_witness".
  std::map<std::string, bool> expected;
  /// Optional published witness, in one of the witness JSON schemas.
  std::string witness;
};

const std::vector<Fixture>& builtin_fixtures();
const Fixture& fixture_by_id(std::string_view id);

/// Live verdicts for every key in the fixture's expected map.
std::map<std::string, bool> evaluate_fixture(const Fixture& f);

}  // namespace salience
