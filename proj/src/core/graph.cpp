#include "opetope/core/graph.hpp"

#include <algorithm>
#include <set>

namespace opetope {

std::string_view to_string(Polarity p) noexcept { return p == Polarity::Source ? "source" : "target"; }

char polarity_letter(Polarity p) noexcept { return p == Polarity::Source ? 's' : 't'; }

CellId OpetopicGraph::add_cell(std::string name, int degree) {
  if (degree < 0) throw GraphError("negative degree for cell " + name);
  CellId id{static_cast<std::uint32_t>(cells_.size())};
  if (!cell_names_.emplace(name, id).second) throw GraphError("duplicate cell id " + name);
  cells_.push_back(Cell{std::move(name), degree});
  into_.emplace_back();
  from_.emplace_back();
  diamonds_at_.emplace_back();
  return id;
}

ArrowId OpetopicGraph::add_arrow(std::string name, CellId dom, CellId cod, Polarity polarity) {
  if (dom.index >= cells_.size() || cod.index >= cells_.size())
    throw GraphError("arrow " + name + " has an unknown endpoint");
  ArrowId id{static_cast<std::uint32_t>(arrows_.size())};
  if (!arrow_names_.emplace(name, id).second) throw GraphError("duplicate arrow id " + name);
  arrows_.push_back(GenArrow{std::move(name), dom, cod, polarity});
  into_[cod.index].push_back(id);
  from_[dom.index].push_back(id);
  return id;
}

DiamondId OpetopicGraph::add_diamond(const Diamond& d) {
  for (ArrowId a : {d.het_outer, d.het_inner, d.hom_outer, d.hom_inner})
    if (a.index >= arrows_.size()) throw GraphError("diamond refers to an unknown arrow");
  DiamondId id{static_cast<std::uint32_t>(diamonds_.size())};
  diamonds_.push_back(d);
  diamonds_at_[arrows_[d.het_outer.index].cod.index].push_back(id);
  pairs_[pair_key(d.het_outer, d.het_inner)].push_back(id);
  if (pair_key(d.hom_outer, d.hom_inner) != pair_key(d.het_outer, d.het_inner))
    pairs_[pair_key(d.hom_outer, d.hom_inner)].push_back(id);
  return id;
}

std::string OpetopicGraph::fresh_cell_name(std::string_view base) const {
  std::string candidate(base);
  for (int k = 2; cell_names_.contains(candidate); ++k) candidate = std::string(base) + "#" + std::to_string(k);
  return candidate;
}

std::string OpetopicGraph::fresh_arrow_name(std::string_view base) const {
  std::string candidate(base);
  for (int k = 2; arrow_names_.contains(candidate); ++k) candidate = std::string(base) + "#" + std::to_string(k);
  return candidate;
}

std::span<const DiamondId> OpetopicGraph::diamonds_with_pair(ArrowId outer, ArrowId inner) const {
  auto it = pairs_.find(pair_key(outer, inner));
  if (it == pairs_.end()) return {};
  return it->second;
}

std::optional<CellId> OpetopicGraph::find_cell(std::string_view name) const {
  auto it = cell_names_.find(std::string(name));
  if (it == cell_names_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> OpetopicGraph::find_arrow(std::string_view name) const {
  auto it = arrow_names_.find(std::string(name));
  if (it == arrow_names_.end()) return std::nullopt;
  return it->second;
}

CellId OpetopicGraph::cell_named(std::string_view name) const {
  if (auto c = find_cell(name)) return *c;
  throw GraphError("no cell named " + std::string(name));
}

ArrowId OpetopicGraph::arrow_named(std::string_view name) const {
  if (auto a = find_arrow(name)) return *a;
  throw GraphError("no arrow named " + std::string(name));
}

std::vector<CellId> OpetopicGraph::cells_of_degree(int degree) const {
  std::vector<CellId> out;
  for (std::uint32_t i = 0; i < cells_.size(); ++i)
    if (cells_[i].degree == degree) out.push_back(CellId{i});
  return out;
}

int OpetopicGraph::max_degree() const noexcept {
  int m = -1;
  for (const Cell& c : cells_) m = std::max(m, c.degree);
  return m;
}

std::optional<ArrowId> OpetopicGraph::target_arrow(CellId c) const {
  for (ArrowId a : arrows_into(c))
    if (arrow(a).polarity == Polarity::Target) return a;
  return std::nullopt;
}

std::vector<ArrowId> OpetopicGraph::source_arrows(CellId c) const {
  std::vector<ArrowId> out;
  for (ArrowId a : arrows_into(c))
    if (arrow(a).polarity == Polarity::Source) out.push_back(a);
  return out;
}

namespace {

// Copies cells, the arrows accepted by keep_arrow (with polarity from
// polarity_of) and the diamonds accepted by keep_diamond.
template <class KeepArrow, class PolarityOf, class DiamondOf>
OpetopicGraph rebuild(const OpetopicGraph& g, KeepArrow keep_arrow, PolarityOf polarity_of, DiamondOf diamond_of) {
  OpetopicGraph out;
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) out.add_cell(g.cell(CellId{i}).name, g.cell(CellId{i}).degree);
  std::vector<std::optional<ArrowId>> remap(g.arrow_count());
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    ArrowId a{i};
    if (!keep_arrow(a)) continue;
    const GenArrow& ga = g.arrow(a);
    remap[i] = out.add_arrow(ga.name, ga.dom, ga.cod, polarity_of(a));
  }
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
    std::optional<Diamond> d = diamond_of(DiamondId{i});
    if (!d) continue;
    auto r = [&](ArrowId a) { return remap[a.index]; };
    if (!r(d->het_outer) || !r(d->het_inner) || !r(d->hom_outer) || !r(d->hom_inner)) continue;
    out.add_diamond(Diamond{*r(d->het_outer), *r(d->het_inner), *r(d->hom_outer), *r(d->hom_inner)});
  }
  return out;
}

}  // namespace

OpetopicGraph OpetopicGraph::without_arrow(ArrowId a) const {
  return rebuild(
      *this, [&](ArrowId b) { return b != a; }, [&](ArrowId b) { return arrow(b).polarity; },
      [&](DiamondId d) { return std::optional<Diamond>(diamond(d)); });
}

OpetopicGraph OpetopicGraph::without_diamond(DiamondId d) const {
  return rebuild(
      *this, [](ArrowId) { return true; }, [&](ArrowId b) { return arrow(b).polarity; },
      [&](DiamondId e) { return e == d ? std::nullopt : std::optional<Diamond>(diamond(e)); });
}

OpetopicGraph OpetopicGraph::with_flipped(ArrowId a) const {
  return rebuild(
      *this, [](ArrowId) { return true; },
      [&](ArrowId b) { return b == a ? opposite(arrow(b).polarity) : arrow(b).polarity; },
      [&](DiamondId d) { return std::optional<Diamond>(diamond(d)); });
}

OpetopicGraph OpetopicGraph::with_diamond(DiamondId d, const Diamond& replacement) const {
  return rebuild(
      *this, [](ArrowId) { return true; }, [&](ArrowId b) { return arrow(b).polarity; },
      [&](DiamondId e) { return std::optional<Diamond>(e == d ? replacement : diamond(e)); });
}

std::string describe_pair(const OpetopicGraph& g, ArrowId outer, ArrowId inner) {
  return "(" + g.name(outer) + ", " + g.name(inner) + ")";
}

ValidationReport well_formed(const OpetopicGraph& g) {
  ValidationReport report;
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    const GenArrow& a = g.arrow(ArrowId{i});
    if (g.degree(a.cod) != g.degree(a.dom) + 1)
      report.push_back({"degree", "arrow " + a.name + " joins degrees " + std::to_string(g.degree(a.dom)) + " and " +
                                      std::to_string(g.degree(a.cod))});
  }
  std::set<std::pair<ArrowId, ArrowId>> seen;
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
    const Diamond& d = g.diamond(DiamondId{i});
    std::string label = "diamond " + describe_pair(g, d.het_outer, d.het_inner);
    if (!g.composable(d.het_outer, d.het_inner) || !g.composable(d.hom_outer, d.hom_inner)) {
      report.push_back({"composable", label + " contains a non-composable pair"});
      continue;
    }
    const GenArrow& f1 = g.arrow(d.het_outer);
    const GenArrow& g1 = g.arrow(d.het_inner);
    const GenArrow& f2 = g.arrow(d.hom_outer);
    const GenArrow& g2 = g.arrow(d.hom_inner);
    if (f1.cod != f2.cod || g1.dom != g2.dom) report.push_back({"endpoints", label + " has mismatched endpoints"});
    if (g.homogeneous(d.het_outer, d.het_inner))
      report.push_back({"heterogeneity", label + " lists a homogeneous pair as heterogeneous"});
    if (!g.homogeneous(d.hom_outer, d.hom_inner))
      report.push_back({"heterogeneity", label + " lists a heterogeneous pair as homogeneous"});
    for (auto p : {std::pair{d.het_outer, d.het_inner}, std::pair{d.hom_outer, d.hom_inner}})
      if (!seen.insert(p).second)
        report.push_back({"multiplicity", "pair " + describe_pair(g, p.first, p.second) + " lies in two diamonds"});
  }
  return report;
}

}  // namespace opetope
