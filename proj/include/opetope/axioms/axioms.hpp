#pragma once

#include <deque>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opetope/core/graph.hpp"
#include "opetope/core/normal_form.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope {

enum class Status { Pass, Fail, Skipped };

struct AxiomResult {
  std::string label;
  Status status = Status::Pass;
  std::vector<std::string> witnesses;
  std::string note;
};

struct AxiomReport {
  std::deque<AxiomResult> results;

  bool ok() const;
  bool failed(std::string_view label) const;
  const AxiomResult* find(std::string_view label) const;
  AxiomResult& add(std::string label);
  std::string summary() const;
};

enum class O6Mode { Tree, Zigzag };

struct CheckOptions {
  O6Mode o6 = O6Mode::Tree;
};

AxiomReport check_opetopic(const OpetopicGraph& g, const CheckOptions& options = {});
std::optional<CellId> is_opetope(const OpetopicGraph& g);

// Vertices of OGraph(A, x): source generators into x and two-step arrows
// into x.  Edges follow the orientation in which a tree points at its root.
struct OGraph {
  using Vertex = std::variant<ArrowId, NormalForm>;
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> root;  // index of t^2(x) when it exists
};

OGraph ograph(const OpetopicGraph& g, CellId x, HomCache& homs);

// Checks that a directed graph has a root with a unique path from every
// vertex; on failure names an offending vertex.
std::optional<std::string> tree_defect(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                       std::size_t root);

AxiomReport check_boundary(const Boundary& b);
AxiomReport check_pasting_diagram(const PastingDiagram& p);

// PDGraph(P): vertices are the top cells followed by the cells of degree
// n - 1; edges run top cell -> cell for target generators and
// cell -> top cell for source generators.
struct PDGraph {
  std::vector<CellId> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

PDGraph pdgraph(const PastingDiagram& p);

}  // namespace opetope
