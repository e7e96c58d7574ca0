#pragma once

#include <map>
#include <vector>

#include "opetope/core/graph.hpp"

namespace opetope {

// An opetopic set together with its terminal cell.
struct Opetope {
  OpetopicGraph graph;
  CellId top;

  int degree() const { return graph.degree(top); }
};

// An n-preboundary: every cell has degree < n and each cell of degree
// n - 1 carries a mark.
struct Boundary {
  OpetopicGraph graph;
  int n = 0;
  std::map<CellId, Polarity> marks;

  std::vector<CellId> marked(Polarity p) const;
};

// An n-prepasting diagram: cells of degree <= n with leaf and root
// multisets drawn from the cells of degree n - 1.
struct PastingDiagram {
  OpetopicGraph graph;
  int n = 0;
  std::vector<CellId> leaves;
  std::vector<CellId> roots;

  std::vector<CellId> top_cells() const { return graph.cells_of_degree(n); }
  bool is_leaf(CellId c) const;
  bool is_root(CellId c) const;
  bool degenerate() const { return top_cells().empty(); }
};

}  // namespace opetope
