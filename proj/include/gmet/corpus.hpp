#pragma once

#include "gmet/contraction.hpp"
#include "gmet/piecewise.hpp"
#include "gmet/space.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gmet {

/// Expected verdicts bundled with a scenario. "stated" values come with the
/// scenario's source material; "computed" ones were derived by this toolkit.
struct Expected {
  std::vector<std::string> fixed_points;  // point values, ascending by id
  std::string contraction_verdict;        // "pass" | "pass_on_grid" | "fail" | ""
  std::vector<std::string> computed_failed_conditions;
  std::string uniqueness;  // "pass" | "fail" | ""
  std::map<std::string, std::string> named_values;
  std::string source = "stated";
};

struct Scenario {
  std::string id;
  std::string title;
  Space space;
  SelfMap map;
  std::optional<PiecewiseFn> psi;
  std::optional<PiecewiseFn> phi;
  std::optional<ContractionKind> kind;
  Expected expected;
};

struct CorpusOptions {
  Rat grid_step = Rat(1, 64);  // unit-interval scenarios
  int power_count = 12;        // ex2.5 carrier truncation
  int prime_count = 12;        // ex3.2 carrier truncation
};

std::vector<std::string> corpus_ids();

/// Builds a bundled scenario. Throws std::invalid_argument on unknown id.
Scenario load_example(const std::string& id, const CorpusOptions& opts = {});

}  // namespace gmet
