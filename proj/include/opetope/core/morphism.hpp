#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "opetope/core/graph.hpp"
#include "opetope/core/normal_form.hpp"

namespace opetope {

// A map of generators between two graphs, indexed by source ids.  The
// graphs themselves are passed alongside wherever they matter.
struct Morphism {
  std::vector<CellId> cells;
  std::vector<ArrowId> arrows;

  CellId operator()(CellId c) const { return cells.at(c.index); }
  ArrowId operator()(ArrowId a) const { return arrows.at(a.index); }
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism identity_morphism(const OpetopicGraph& g);
Morphism then(const Morphism& first, const Morphism& second);  // second . first

// Checks degree, endpoint and polarity preservation, diamond preservation
// and the discrete-fibration condition (bijection on generators into each
// cell).
ValidationReport validate_morphism(const OpetopicGraph& source, const OpetopicGraph& target, const Morphism& f);

NormalForm apply(const Morphism& f, const NormalForm& nf);

class SizeLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IsoOptions {
  std::size_t size_limit = 64;
  std::size_t max_results = 1;
  // Optional per-cell colours that an isomorphism has to preserve.
  std::vector<int> source_colors;
  std::vector<int> target_colors;
};

std::vector<Morphism> find_isomorphisms(const OpetopicGraph& g, const OpetopicGraph& h, const IsoOptions& options = {});
std::optional<Morphism> find_isomorphism(const OpetopicGraph& g, const OpetopicGraph& h, const IsoOptions& options = {});

}  // namespace opetope
