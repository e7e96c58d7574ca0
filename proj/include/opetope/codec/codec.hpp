#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "opetope/axioms/axioms.hpp"
#include "opetope/core/graph.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Canonical text of an opetope:
//   Code := "o" | "{" Tree "}"
//   Tree := "deg(" Code ")" | "nd(" Code ")(" [Input {"," Input}] ")"
//   Input := "lf" | Tree
struct OpetopeCode {
  std::string text;
  friend auto operator<=>(const OpetopeCode&, const OpetopeCode&) = default;
};

struct DecoratedTree {
  enum class Kind { Degenerate, Node, Leaf };
  Kind kind = Kind::Leaf;
  OpetopeCode decoration;
  std::vector<DecoratedTree> inputs;

  static DecoratedTree leaf() { return {}; }
  static DecoratedTree node(OpetopeCode code, std::vector<DecoratedTree> inputs = {}) {
    return {Kind::Node, std::move(code), std::move(inputs)};
  }
  static DecoratedTree degenerate(OpetopeCode code) { return {Kind::Degenerate, std::move(code), {}}; }

  std::size_t node_count() const;
};

std::string render(const DecoratedTree& t);
DecoratedTree parse_tree(std::string_view text);
OpetopeCode parse_code(std::string_view text);  // syntax check only
int code_degree(const OpetopeCode& code);

DecoratedTree pd_to_tree(const PastingDiagram& p);
PastingDiagram tree_to_pd(const DecoratedTree& t);
// Text of pd_to_tree, a complete invariant of the diagram up to isomorphism.
std::string pd_code(const PastingDiagram& p);

OpetopeCode encode(const Opetope& x);
Opetope decode(const OpetopeCode& code);
OpetopeCode shape_of(const OpetopicGraph& g, CellId x);
OpetopeCode target_shape(const OpetopeCode& code);
std::vector<OpetopeCode> source_shapes(const OpetopeCode& code);
std::size_t cell_count(const OpetopeCode& code);

// Top cells of a pasting diagram in root-first preorder of its tree, and
// its leaves in the order the tree meets them.
std::vector<CellId> top_cells_in_tree_order(const PastingDiagram& p);
std::vector<CellId> leaves_in_tree_order(const PastingDiagram& p);

enum class DiamondFamily { Inner, Glob1, Glob2, Degen };
std::string_view to_string(DiamondFamily f) noexcept;
DiamondFamily classify_diamond(const OpetopicGraph& g, DiamondId d);

// Polynomial trees: colours are edges, nodes have an ordered list of input
// colours and one output colour.
struct PolyTree {
  struct Node {
    std::string name;
    std::vector<std::string> inputs;
    std::string target;
  };
  std::vector<std::string> colors;
  std::vector<Node> nodes;
};

AxiomReport check_polynomial_tree(const PolyTree& t);
PolyTree poly_tree_of_pd(const PastingDiagram& p);

// Finite fragment of the polynomial monad whose colours are n-opetopes and
// whose operations are (n+1)-opetopes.
struct PolyFragment {
  struct Node {
    OpetopeCode code;
    std::vector<OpetopeCode> inputs;
    OpetopeCode target;
  };
  std::vector<OpetopeCode> colors;
  std::vector<Node> nodes;
};

PolyFragment poly_fragment(const std::vector<OpetopeCode>& operations);
OpetopeCode poly_unit(const OpetopeCode& color);
OpetopeCode poly_multiply(const OpetopeCode& operation, const std::vector<OpetopeCode>& per_input);

}  // namespace opetope
