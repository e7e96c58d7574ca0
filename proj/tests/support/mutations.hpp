#pragma once

#include <string>
#include <vector>

#include "opetope/core/graph.hpp"

namespace opetope::fixtures {

struct Mutant {
  std::string description;
  OpetopicGraph graph;
};

// Single edits of the hand fixtures: every generator deleted, every
// generator's polarity flipped, every diamond deleted, and diamonds given
// the homogeneous pair of a diamond with other endpoints.
std::vector<Mutant> single_mutations();

}  // namespace opetope::fixtures
