#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "opetope/core/morphism.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope {

enum class CalculusFailure { BoundaryMismatch, TargetMismatch, MissingAssignment, NotALeaf, DegreeMismatch };

class CalculusError : public std::runtime_error {
 public:
  CalculusError(CalculusFailure kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  CalculusFailure kind() const noexcept { return kind_; }

 private:
  CalculusFailure kind_;
};

// The opetope X (of degree n) seen as an n-pasting diagram with one top cell.
PastingDiagram shift(const Opetope& x);
// The (n+1)-pasting diagram with no top cells whose single leaf and root is the top of X.
PastingDiagram degen(const Opetope& x);

// Result of substitution or grafting, with the maps from each input into
// the result.  `base` is partial: top cells of a substituted base have no
// image.
struct CompositeResult {
  PastingDiagram pd;
  std::vector<std::optional<CellId>> base;
  std::map<CellId, Morphism> parts;
};

// Replaces every top cell x of A by B(x); requires boundary(B(x)) to be
// isomorphic to boundary(A/x).
CompositeResult subst(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b);

// Glues B(x) onto each listed leaf x of A along pd_target(B(x)) = A/x.
// Leaves without an assignment are left alone, which agrees with grafting
// the degenerate diagram on them.
CompositeResult graft(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b);

}  // namespace opetope
