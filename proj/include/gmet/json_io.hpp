#pragma once

#include "gmet/contraction.hpp"
#include "gmet/corpus.hpp"
#include "gmet/solver.hpp"

#include <json.hpp>

#include <string>

namespace gmet {

using Json = nlohmann::ordered_json;

Json function_to_json(const PiecewiseFn& f);
PiecewiseFn function_from_json(const Json& j);

Json scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const Json& j);

/// Parses a scenario document. Throws std::runtime_error with a
/// position-bearing message on malformed input.
Scenario parse_scenario(const std::string& text, const std::string& origin);

Json axiom_report_to_json(const Space& s, const AxiomReport& r, const std::string& subject);
Json class_report_to_json(const ClassReport& r);
Json contraction_report_to_json(const Space& s, const ContractionReport& r);
Json orbit_to_json(const Space& s, const OrbitTrace& t);
Json hypothesis_report_to_json(const Space& s, const HypothesisReport& r);
Json uniqueness_report_to_json(const Space& s, const UniquenessReport& r);

}  // namespace gmet
