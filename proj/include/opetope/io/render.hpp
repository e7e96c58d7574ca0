#pragma once

#include <string>

#include "opetope/codec/codec.hpp"
#include "opetope/core/graph.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope::io {

// Indented drawing of a decorated tree, one node or leaf per line.
std::string ascii_tree(const DecoratedTree& t);

// Graphviz output.  Source generators are drawn solid, target generators
// dashed.
std::string dot_tree(const DecoratedTree& t);
std::string dot_graph(const OpetopicGraph& g);
std::string dot_pdgraph(const PastingDiagram& p);
std::string dot_ograph(const OpetopicGraph& g, CellId x);

}  // namespace opetope::io
