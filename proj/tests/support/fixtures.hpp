#pragma once

#include <string>
#include <vector>

#include "opetope/core/graph.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope::fixtures {

Opetope pt();
Opetope arr();
Opetope loop();
// The 2-opetope with m source arrows; tri(0) is the loop.
Opetope tri(int m);
// The 3-opetope with one source of shape tri(2).
Opetope op3();

struct Named {
  std::string name;
  Opetope opetope;
};

// pt, arr, loop, tri1, tri2, tri3, op3
std::vector<Named> all();

// A 2-prepasting diagram with a 2-cell from one loop to another, both
// loops marked; every axiom but PD8 holds.
PastingDiagram hole();

}  // namespace opetope::fixtures
