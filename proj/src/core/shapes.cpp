#include "opetope/core/shapes.hpp"

#include <algorithm>

namespace opetope {

std::vector<CellId> Boundary::marked(Polarity p) const {
  std::vector<CellId> out;
  for (const auto& [cell, mark] : marks)
    if (mark == p) out.push_back(cell);
  return out;
}

bool PastingDiagram::is_leaf(CellId c) const { return std::find(leaves.begin(), leaves.end(), c) != leaves.end(); }

bool PastingDiagram::is_root(CellId c) const { return std::find(roots.begin(), roots.end(), c) != roots.end(); }

}  // namespace opetope
