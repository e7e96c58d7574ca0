#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "opetope/core/ids.hpp"

namespace opetope {

struct Cell {
  std::string name;
  int degree = 0;
};

// A generating arrow dom -> cod. Well-formed graphs have deg(cod) = deg(dom) + 1.
struct GenArrow {
  std::string name;
  CellId dom;
  CellId cod;
  Polarity polarity = Polarity::Source;
};

// Relation het_outer . het_inner = hom_outer . hom_inner.
struct Diamond {
  ArrowId het_outer;
  ArrowId het_inner;
  ArrowId hom_outer;
  ArrowId hom_inner;
  friend bool operator==(const Diamond&, const Diamond&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generators and relations of an opetopic set.  Cells, arrows and diamonds
// are append-only; ids are dense indices in insertion order.
class OpetopicGraph {
 public:
  CellId add_cell(std::string name, int degree);
  ArrowId add_arrow(std::string name, CellId dom, CellId cod, Polarity polarity);
  DiamondId add_diamond(const Diamond& d);

  // Appends a suffix to `base` until it no longer names a cell (or arrow).
  std::string fresh_cell_name(std::string_view base) const;
  std::string fresh_arrow_name(std::string_view base) const;

  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::size_t diamond_count() const noexcept { return diamonds_.size(); }

  const Cell& cell(CellId c) const { return cells_.at(c.index); }
  const GenArrow& arrow(ArrowId a) const { return arrows_.at(a.index); }
  const Diamond& diamond(DiamondId d) const { return diamonds_.at(d.index); }

  int degree(CellId c) const { return cell(c).degree; }
  const std::string& name(CellId c) const { return cell(c).name; }
  const std::string& name(ArrowId a) const { return arrow(a).name; }

  std::span<const ArrowId> arrows_into(CellId c) const { return into_.at(c.index); }
  std::span<const ArrowId> arrows_from(CellId c) const { return from_.at(c.index); }
  std::span<const DiamondId> diamonds_into(CellId c) const { return diamonds_at_.at(c.index); }
  std::span<const DiamondId> diamonds_with_pair(ArrowId outer, ArrowId inner) const;

  std::optional<CellId> find_cell(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;
  CellId cell_named(std::string_view name) const;
  ArrowId arrow_named(std::string_view name) const;

  std::vector<CellId> cells_of_degree(int degree) const;
  int max_degree() const noexcept;  // -1 for the empty graph

  bool composable(ArrowId outer, ArrowId inner) const { return arrow(inner).cod == arrow(outer).dom; }
  bool homogeneous(ArrowId outer, ArrowId inner) const {
    return arrow(outer).polarity == arrow(inner).polarity;
  }

  std::optional<ArrowId> target_arrow(CellId c) const;  // first target generator into c
  std::vector<ArrowId> source_arrows(CellId c) const;

  // Edits that return modified copies; used to build mutants.
  OpetopicGraph without_arrow(ArrowId a) const;
  OpetopicGraph without_diamond(DiamondId d) const;
  OpetopicGraph with_flipped(ArrowId a) const;
  OpetopicGraph with_diamond(DiamondId d, const Diamond& replacement) const;

 private:
  static std::uint64_t pair_key(ArrowId outer, ArrowId inner) noexcept {
    return (std::uint64_t{outer.index} << 32) | inner.index;
  }

  std::vector<Cell> cells_;
  std::vector<GenArrow> arrows_;
  std::vector<Diamond> diamonds_;
  std::vector<std::vector<ArrowId>> into_;
  std::vector<std::vector<ArrowId>> from_;
  std::vector<std::vector<DiamondId>> diamonds_at_;
  std::unordered_map<std::string, CellId> cell_names_;
  std::unordered_map<std::string, ArrowId> arrow_names_;
  std::unordered_map<std::uint64_t, std::vector<DiamondId>> pairs_;
};

struct Violation {
  std::string kind;
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

// Structural invariants: endpoints exist, degrees are consecutive, every
// diamond has matching endpoints with one heterogeneous and one homogeneous
// composable pair, and no pair sits in two diamonds.
ValidationReport well_formed(const OpetopicGraph& g);

std::string describe_pair(const OpetopicGraph& g, ArrowId outer, ArrowId inner);

}  // namespace opetope
