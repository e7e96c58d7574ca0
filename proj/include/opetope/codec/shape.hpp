#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opetope/core/graph.hpp"
#include "opetope/core/morphism.hpp"
#include "opetope/core/normal_form.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope {

class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical source order and shape codes for every cell of a valid
// opetopic set, computed from the horn tree of each cell.  The horn tree of
// x has the source generators into x as nodes; the root node is the one
// whose target composes to t^2(x), and a node f has the sources of dom(f)
// as inputs, in their own canonical order.  The canonical source order of
// x is the root-first preorder of that tree.
class ShapeAnalysis {
 public:
  explicit ShapeAnalysis(const OpetopicGraph& g) : g_(g), homs_(g) {}

  const OpetopicGraph& graph() const noexcept { return g_; }
  HomCache& homs() noexcept { return homs_; }

  ArrowId target_of(CellId x) const;
  const std::vector<ArrowId>& canonical_sources(CellId x);
  // The root node of the horn tree of x, absent when the horn is degenerate.
  std::optional<ArrowId> root_node(CellId x);
  // The node of x's horn whose output is the input `input` of node `node`.
  std::optional<ArrowId> child(CellId x, ArrowId node, ArrowId input);
  const std::string& code(CellId x);

 private:
  struct Horn {
    std::map<NormalForm, ArrowId> by_output;  // two-step arrow -> source whose target composes to it
    std::optional<ArrowId> root;
  };
  const Horn& horn(CellId x);
  std::string node_code(CellId x, ArrowId f, int depth);

  const OpetopicGraph& g_;
  HomCache homs_;
  std::map<CellId, std::vector<ArrowId>> sources_;
  std::map<CellId, Horn> horns_;
  std::map<CellId, std::string> codes_;
};

// Visit order of cells and arrows, starting at `top` and listing, for each
// visited cell, its target generator followed by its sources in canonical
// order.  Depends only on the isomorphism class of the slice at top.
struct CanonicalLabeling {
  std::vector<CellId> cells;
  std::vector<ArrowId> arrows;
};

CanonicalLabeling canonical_labeling(ShapeAnalysis& shapes, CellId top);
Opetope canonical_relabel(const Opetope& x);

// The unique isomorphism between two opetopes, if their codes agree.
std::optional<Morphism> opetope_isomorphism(const Opetope& a, const Opetope& b);

}  // namespace opetope
