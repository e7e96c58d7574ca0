#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "opetope/core/graph.hpp"
#include "opetope/core/morphism.hpp"
#include "opetope/core/normal_form.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope {

enum class ConstructionFailure { MatchingFailure, IllformedSpan, NotAnOpetope, NotABoundary, NotAPastingDiagram };

class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(ConstructionFailure kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ConstructionFailure kind() const noexcept { return kind_; }

 private:
  ConstructionFailure kind_;
};

// The slice A/x: cells are the arrows into x, top cell is the identity.
struct Slice {
  Opetope opetope;
  Morphism projection;           // slice -> A
  std::vector<NormalForm> arrow_of;  // slice cell -> arrow into x
};

Slice slice(const OpetopicGraph& g, CellId x);
Slice slice(HomCache& homs, CellId x);

// Full subgraph on the cells of degree < n.
struct Restriction {
  OpetopicGraph graph;
  Morphism inclusion;  // restriction -> original
  std::vector<std::optional<CellId>> cell_index;    // original -> restriction
  std::vector<std::optional<ArrowId>> arrow_index;
};

Restriction restrict_below(const OpetopicGraph& g, int n);
std::vector<CellId> fiber(const OpetopicGraph& g, int n);

Boundary boundary(const Opetope& x);
Opetope fill(const Boundary& b);
PastingDiagram source_horn(const Boundary& b);

// The boundary of a pasting diagram together with its canonical map into
// the diagram.  A cell that is both a leaf and a root appears twice.
struct PdBoundary {
  Boundary boundary;
  Morphism to_pd;
};

PdBoundary pd_boundary(const PastingDiagram& p);

// The slice at the root object, canonically relabelled.
Opetope pd_target(const PastingDiagram& p);
CellId root_object(const PastingDiagram& p);

struct Coproduct {
  OpetopicGraph graph;
  std::vector<Morphism> injections;
};

Coproduct coproduct(std::span<const OpetopicGraph* const> parts);

struct Pushout {
  OpetopicGraph graph;
  Morphism from_a;
  Morphism from_b;
};

// Pushout of a <- c -> b along morphisms (local isomorphisms on slices).
Pushout pushout(const OpetopicGraph& c, const OpetopicGraph& a, const OpetopicGraph& b, const Morphism& to_a,
                const Morphism& to_b);

// The (n+1)-opetope whose source horn is the given n-pasting diagram.
Opetope opetope_of_pd(const PastingDiagram& p);

}  // namespace opetope
