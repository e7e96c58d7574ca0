#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "opetope/core/graph.hpp"

namespace opetope {

// A morphism of the presented category in normal form.  `path` lists
// generators domain first, so path.front() leaves `from` and path.back()
// enters `to`.  In a normal form every generator above the lowest two is a
// target arrow and the lowest two form a homogeneous pair.
struct NormalForm {
  CellId from;
  CellId to;
  std::vector<ArrowId> path;

  bool is_identity() const noexcept { return path.empty(); }
  std::size_t length() const noexcept { return path.size(); }
  // Target generators above the tail, outermost first.
  std::vector<ArrowId> target_prefix() const;
  // The lowest two generators (or fewer), domain first.
  std::span<const ArrowId> tail() const;

  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

enum class RewriteFailure { FuelExhausted, AmbiguousRewrite, MissingRelation, NotComposable };

class RewriteError : public std::runtime_error {
 public:
  RewriteError(RewriteFailure kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  RewriteFailure kind() const noexcept { return kind_; }

 private:
  RewriteFailure kind_;
};

struct RewriteStats {
  std::size_t steps = 0;              // total rewrites
  std::size_t max_steps_on_triple = 0;
  std::size_t max_bound_on_triple = 0;  // bound that applied to the worst triple
  bool within_bound = true;
};

// Sum over the source generators s into x of twice the number of
// generators into dom(s), plus two for the boundary rewrites where the outer
// generator is a target arrow.  OPETOPE_FUEL_OVERRIDE raises it.
std::size_t fuel_bound(const OpetopicGraph& g, CellId x);
std::size_t raw_fuel_bound(const OpetopicGraph& g, CellId x);

NormalForm identity(CellId x);
NormalForm normalize(const OpetopicGraph& g, CellId from, std::span<const ArrowId> path, RewriteStats* stats = nullptr);
// inner : a -> b, outer : b -> c
NormalForm compose(const OpetopicGraph& g, const NormalForm& inner, const NormalForm& outer,
                   RewriteStats* stats = nullptr);
NormalForm compose(const OpetopicGraph& g, ArrowId generator, const NormalForm& outer, RewriteStats* stats = nullptr);

// Memoized hom-sets of one graph: every normal form into a given cell.
class HomCache {
 public:
  explicit HomCache(const OpetopicGraph& g) : g_(g) {}
  const OpetopicGraph& graph() const noexcept { return g_; }
  const std::vector<NormalForm>& into(CellId y);
  std::vector<NormalForm> hom(CellId x, CellId y);
  NormalForm two_step(ArrowId inner, ArrowId outer);

 private:
  const OpetopicGraph& g_;
  std::map<CellId, std::vector<NormalForm>> into_;
};

std::vector<NormalForm> hom(const OpetopicGraph& g, CellId x, CellId y);

std::string describe(const OpetopicGraph& g, const NormalForm& nf);

}  // namespace opetope
