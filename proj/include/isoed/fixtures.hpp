#pragma once

#include <string>
#include <vector>

namespace isoed {

struct FixtureResult {
  std::string name;
  std::string anchor;  // the published statement the fixture reproduces
  bool passed = false;
  std::string detail;
};

/// Golden battery of the published worked values: incompressibility of
/// multiplication maps, the simple-variety formula, and the group-action
/// bounds with their sharpness examples.
std::vector<FixtureResult> run_published_fixtures();

}  // namespace isoed
