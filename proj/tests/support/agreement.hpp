#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "opetope/core/graph.hpp"

namespace opetope::fixtures {

std::vector<std::size_t> profile_of(const OpetopicGraph& g);

struct Agreement {
  std::size_t tree_count = 0;
  std::size_t oracle_count = 0;
  std::vector<std::string> invalid;       // tree codes that fail the axioms
  std::vector<std::string> differences;   // "tree only" / "oracle only" lines
  bool ok() const { return invalid.empty() && differences.empty(); }
};

// Codes from the tree enumerator and from the oracle, grouped by profile,
// over every profile of the degree with at most max_cells cells.
Agreement compare_enumerators(int degree, std::size_t max_cells);

}  // namespace opetope::fixtures

namespace opetope::fixtures {

// Planar rooted trees with exactly `nodes` nodes, each node having at most
// max_arity inputs, every input either a leaf or a subtree.
std::size_t planar_tree_count(std::size_t nodes, std::size_t max_arity);

}  // namespace opetope::fixtures
