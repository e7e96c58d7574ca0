#include "opetope/calculus/calculus.hpp"

#include <algorithm>

#include "opetope/codec/shape.hpp"
#include "opetope/constructions/constructions.hpp"

namespace opetope {

PastingDiagram shift(const Opetope& x) {
  PastingDiagram p{x.graph, x.degree(), {}, {}};
  for (ArrowId a : x.graph.arrows_into(x.top)) {
    const GenArrow& ga = x.graph.arrow(a);
    (ga.polarity == Polarity::Source ? p.leaves : p.roots).push_back(ga.dom);
  }
  std::sort(p.leaves.begin(), p.leaves.end());
  std::sort(p.roots.begin(), p.roots.end());
  return p;
}

PastingDiagram degen(const Opetope& x) { return PastingDiagram{x.graph, x.degree() + 1, {x.top}, {x.top}}; }

namespace {

// Joins the per-part legs C_i -> A and C_i -> B_i into one span over the
// coproducts and returns the pushout.
struct Glued {
  Pushout po;
  Coproduct parts;
};

Glued glue(const OpetopicGraph& base, const std::vector<OpetopicGraph>& overlaps, const std::vector<Morphism>& to_base,
           const std::vector<const OpetopicGraph*>& pieces, const std::vector<Morphism>& to_piece) {
  std::vector<const OpetopicGraph*> overlap_ptrs;
  for (const OpetopicGraph& g : overlaps) overlap_ptrs.push_back(&g);
  Coproduct c = coproduct(overlap_ptrs);
  Coproduct p = coproduct(pieces);
  Morphism left, right;
  left.cells.resize(c.graph.cell_count());
  left.arrows.resize(c.graph.arrow_count());
  right.cells.resize(c.graph.cell_count());
  right.arrows.resize(c.graph.arrow_count());
  for (std::size_t i = 0; i < overlaps.size(); ++i) {
    const Morphism& inj = c.injections[i];
    for (std::uint32_t k = 0; k < overlaps[i].cell_count(); ++k) {
      left.cells[inj(CellId{k}).index] = to_base[i](CellId{k});
      right.cells[inj(CellId{k}).index] = p.injections[i](to_piece[i](CellId{k}));
    }
    for (std::uint32_t k = 0; k < overlaps[i].arrow_count(); ++k) {
      left.arrows[inj(ArrowId{k}).index] = to_base[i](ArrowId{k});
      right.arrows[inj(ArrowId{k}).index] = p.injections[i](to_piece[i](ArrowId{k}));
    }
  }
  Pushout po = pushout(c.graph, base, p.graph, left, right);
  return Glued{std::move(po), std::move(p)};
}

}  // namespace

CompositeResult subst(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b) {
  const int n = a.n;
  HomCache homs(a.graph);
  Restriction lower = restrict_below(a.graph, n);
  std::vector<CellId> tops = a.top_cells();

  std::vector<OpetopicGraph> overlaps;
  std::vector<Morphism> to_base, to_piece;
  std::vector<const OpetopicGraph*> pieces;
  for (CellId x : tops) {
    auto it = b.find(x);
    if (it == b.end())
      throw CalculusError(CalculusFailure::MissingAssignment, "no diagram assigned to " + a.graph.name(x));
    const PastingDiagram& bx = it->second;
    if (bx.n != n) throw CalculusError(CalculusFailure::DegreeMismatch, "diagram for " + a.graph.name(x) + " has the wrong degree");

    Slice s = slice(homs, x);
    Restriction ds = restrict_below(s.opetope.graph, n);
    PdBoundary pb = pd_boundary(bx);
    Opetope filled = fill(pb.boundary);
    std::optional<Morphism> iso = opetope_isomorphism(s.opetope, filled);
    if (!iso)
      throw CalculusError(CalculusFailure::BoundaryMismatch,
                          "boundary of the diagram for " + a.graph.name(x) + " does not match the boundary of its cell");
    Morphism down, across;
    for (CellId c : ds.inclusion.cells) {
      down.cells.push_back(*lower.cell_index[s.projection(c).index]);
      across.cells.push_back(pb.to_pd((*iso)(c)));
    }
    for (ArrowId e : ds.inclusion.arrows) {
      down.arrows.push_back(*lower.arrow_index[s.projection(e).index]);
      across.arrows.push_back(pb.to_pd((*iso)(e)));
    }
    overlaps.push_back(std::move(ds.graph));
    to_base.push_back(std::move(down));
    to_piece.push_back(std::move(across));
    pieces.push_back(&bx.graph);
  }

  Glued glued = glue(lower.graph, overlaps, to_base, pieces, to_piece);
  CompositeResult out;
  out.pd = PastingDiagram{std::move(glued.po.graph), n, {}, {}};
  out.base.assign(a.graph.cell_count(), std::nullopt);
  for (std::uint32_t i = 0; i < a.graph.cell_count(); ++i)
    if (auto c = lower.cell_index[i]) out.base[i] = glued.po.from_a(*c);
  for (CellId l : a.leaves) out.pd.leaves.push_back(*out.base[l.index]);
  for (CellId r : a.roots) out.pd.roots.push_back(*out.base[r.index]);
  for (std::size_t i = 0; i < tops.size(); ++i)
    out.parts[tops[i]] = then(glued.parts.injections[i], glued.po.from_b);
  std::sort(out.pd.leaves.begin(), out.pd.leaves.end());
  std::sort(out.pd.roots.begin(), out.pd.roots.end());
  return out;
}

CompositeResult graft(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b) {
  HomCache homs(a.graph);
  std::vector<OpetopicGraph> overlaps;
  std::vector<Morphism> to_base, to_piece;
  std::vector<const OpetopicGraph*> pieces;
  std::vector<CellId> grafted;
  for (const auto& [x, bx] : b) {
    if (!a.is_leaf(x)) throw CalculusError(CalculusFailure::NotALeaf, "cell " + a.graph.name(x) + " is not a leaf");
    if (bx.n != a.n)
      throw CalculusError(CalculusFailure::DegreeMismatch, "diagram for " + a.graph.name(x) + " has the wrong degree");
    Slice s = slice(homs, x);
    Slice t = slice(bx.graph, root_object(bx));
    std::optional<Morphism> iso = opetope_isomorphism(s.opetope, t.opetope);
    if (!iso)
      throw CalculusError(CalculusFailure::TargetMismatch,
                          "target of the diagram for " + a.graph.name(x) + " does not match the leaf");
    overlaps.push_back(s.opetope.graph);
    to_base.push_back(s.projection);
    to_piece.push_back(then(*iso, t.projection));
    pieces.push_back(&bx.graph);
    grafted.push_back(x);
  }

  Glued glued = glue(a.graph, overlaps, to_base, pieces, to_piece);
  CompositeResult out;
  out.pd = PastingDiagram{std::move(glued.po.graph), a.n, {}, {}};
  for (std::uint32_t i = 0; i < a.graph.cell_count(); ++i) out.base.push_back(glued.po.from_a(CellId{i}));
  for (CellId l : a.leaves)
    if (!b.contains(l)) out.pd.leaves.push_back(*out.base[l.index]);
  for (CellId r : a.roots) out.pd.roots.push_back(*out.base[r.index]);
  for (std::size_t i = 0; i < grafted.size(); ++i) {
    Morphism m = then(glued.parts.injections[i], glued.po.from_b);
    for (CellId l : b.at(grafted[i]).leaves) out.pd.leaves.push_back(m(l));
    out.parts[grafted[i]] = std::move(m);
  }
  std::sort(out.pd.leaves.begin(), out.pd.leaves.end());
  std::sort(out.pd.roots.begin(), out.pd.roots.end());
  return out;
}

}  // namespace opetope
