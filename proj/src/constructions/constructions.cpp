#include "opetope/constructions/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "opetope/codec/shape.hpp"

namespace opetope {

namespace {

template <class Keep>
Restriction induced(const OpetopicGraph& g, Keep keep) {
  Restriction r;
  r.cell_index.assign(g.cell_count(), std::nullopt);
  r.arrow_index.assign(g.arrow_count(), std::nullopt);
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) {
    CellId c{i};
    if (!keep(c)) continue;
    r.cell_index[i] = r.graph.add_cell(g.name(c), g.degree(c));
    r.inclusion.cells.push_back(c);
  }
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    const GenArrow& a = g.arrow(ArrowId{i});
    if (!r.cell_index[a.dom.index] || !r.cell_index[a.cod.index]) continue;
    r.arrow_index[i] = r.graph.add_arrow(a.name, *r.cell_index[a.dom.index], *r.cell_index[a.cod.index], a.polarity);
    r.inclusion.arrows.push_back(ArrowId{i});
  }
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
    const Diamond& d = g.diamond(DiamondId{i});
    auto m = [&](ArrowId a) { return r.arrow_index[a.index]; };
    if (m(d.het_outer) && m(d.het_inner) && m(d.hom_outer) && m(d.hom_inner))
      r.graph.add_diamond(Diamond{*m(d.het_outer), *m(d.het_inner), *m(d.hom_outer), *m(d.hom_inner)});
  }
  return r;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Slice slice(const OpetopicGraph& g, CellId x) {
  HomCache homs(g);
  return slice(homs, x);
}

Slice slice(HomCache& homs, CellId x) {
  const OpetopicGraph& g = homs.graph();
  std::vector<NormalForm> arrows = homs.into(x);
  std::stable_sort(arrows.begin(), arrows.end(), [&](const NormalForm& a, const NormalForm& b) {
    return g.degree(a.from) > g.degree(b.from);
  });
  Slice s;
  OpetopicGraph& out = s.opetope.graph;
  std::map<NormalForm, CellId> cell_of;
  for (const NormalForm& nf : arrows) {
    CellId c = out.add_cell(out.fresh_cell_name(g.name(nf.from)), g.degree(nf.from));
    cell_of.emplace(nf, c);
    s.projection.cells.push_back(nf.from);
    s.arrow_of.push_back(nf);
  }
  s.opetope.top = cell_of.at(identity(x));

  std::map<std::pair<ArrowId, CellId>, ArrowId> lift;
  for (const NormalForm& nf : arrows) {
    CellId u = cell_of.at(nf);
    for (ArrowId e : g.arrows_into(nf.from)) {
      const GenArrow& ga = g.arrow(e);
      CellId d = cell_of.at(compose(g, e, nf));
      ArrowId a = out.add_arrow(out.fresh_arrow_name(ga.name), d, u, ga.polarity);
      s.projection.arrows.push_back(e);
      lift.emplace(std::pair{e, u}, a);
    }
  }
  for (const NormalForm& nf : arrows) {
    CellId u = cell_of.at(nf);
    for (DiamondId di : g.diamonds_into(nf.from)) {
      const Diamond& d = g.diamond(di);
      CellId u1 = cell_of.at(compose(g, d.het_outer, nf));
      CellId u2 = cell_of.at(compose(g, d.hom_outer, nf));
      out.add_diamond(Diamond{lift.at({d.het_outer, u}), lift.at({d.het_inner, u1}), lift.at({d.hom_outer, u}),
                              lift.at({d.hom_inner, u2})});
    }
  }
  return s;
}

Restriction restrict_below(const OpetopicGraph& g, int n) {
  return induced(g, [&](CellId c) { return g.degree(c) < n; });
}

std::vector<CellId> fiber(const OpetopicGraph& g, int n) { return g.cells_of_degree(n); }

Boundary boundary(const Opetope& x) {
  const int n = x.degree();
  Restriction r = restrict_below(x.graph, n);
  Boundary b{std::move(r.graph), n, {}};
  for (ArrowId a : x.graph.arrows_into(x.top)) {
    const GenArrow& ga = x.graph.arrow(a);
    if (auto c = r.cell_index[ga.dom.index]) {
      if (b.marks.contains(*c))
        throw ConstructionError(ConstructionFailure::NotAnOpetope, "cell " + ga.name + " reaches the top twice");
      b.marks[*c] = ga.polarity;
    }
  }
  return b;
}

Opetope fill(const Boundary& b) {
  Opetope out{b.graph, CellId{}};
  OpetopicGraph& g = out.graph;
  for (std::uint32_t i = 0; i < b.graph.cell_count(); ++i) {
    CellId c{i};
    if (b.graph.degree(c) >= b.n)
      throw ConstructionError(ConstructionFailure::NotABoundary, "cell " + b.graph.name(c) + " is too high");
    if (b.graph.degree(c) == b.n - 1 && !b.marks.contains(c))
      throw ConstructionError(ConstructionFailure::NotABoundary, "cell " + b.graph.name(c) + " is unmarked");
  }
  out.top = g.add_cell(g.fresh_cell_name("top"), b.n);
  std::map<CellId, ArrowId> up;
  for (const auto& [c, mark] : b.marks)
    up[c] = g.add_arrow(g.fresh_arrow_name(g.name(c) + ">" + g.name(out.top)), c, out.top, mark);
  if (b.n < 2) return out;
  for (CellId y : b.graph.cells_of_degree(b.n - 2)) {
    std::vector<std::pair<ArrowId, ArrowId>> het, hom;
    for (ArrowId inner : b.graph.arrows_from(y)) {
      CellId z = b.graph.arrow(inner).cod;
      auto it = up.find(z);
      if (it == up.end()) continue;
      (g.homogeneous(it->second, inner) ? hom : het).emplace_back(it->second, inner);
    }
    if (het.size() != 1 || hom.size() != 1)
      throw ConstructionError(ConstructionFailure::MatchingFailure,
                              "cell " + g.name(y) + " has " + std::to_string(het.size()) + " heterogeneous and " +
                                  std::to_string(hom.size()) + " homogeneous pairs into the new top cell");
    g.add_diamond(Diamond{het[0].first, het[0].second, hom[0].first, hom[0].second});
  }
  return out;
}

PastingDiagram source_horn(const Boundary& b) {
  if (b.n < 1) throw ConstructionError(ConstructionFailure::NotABoundary, "a 0-boundary has no source horn");
  std::set<CellId> targets;
  for (CellId c : b.marked(Polarity::Target)) targets.insert(c);
  Restriction r = induced(b.graph, [&](CellId c) { return !targets.contains(c); });
  PastingDiagram p{std::move(r.graph), b.n - 1, {}, {}};
  for (CellId t : targets)
    for (ArrowId a : b.graph.arrows_into(t)) {
      const GenArrow& ga = b.graph.arrow(a);
      CellId c = *r.cell_index[ga.dom.index];
      (ga.polarity == Polarity::Source ? p.leaves : p.roots).push_back(c);
    }
  std::sort(p.leaves.begin(), p.leaves.end());
  std::sort(p.roots.begin(), p.roots.end());
  return p;
}

PdBoundary pd_boundary(const PastingDiagram& p) {
  const OpetopicGraph& g = p.graph;
  PdBoundary out;
  out.boundary.n = p.n;
  OpetopicGraph& bg = out.boundary.graph;
  if (p.n == 0) return out;

  std::vector<std::optional<CellId>> lower(g.cell_count());
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) {
    CellId c{i};
    if (g.degree(c) < p.n - 1) {
      lower[i] = bg.add_cell(g.name(c), g.degree(c));
      out.to_pd.cells.push_back(c);
    }
  }
  std::vector<std::optional<ArrowId>> lower_arrow(g.arrow_count());
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    const GenArrow& a = g.arrow(ArrowId{i});
    if (lower[a.dom.index] && lower[a.cod.index]) {
      lower_arrow[i] = bg.add_arrow(a.name, *lower[a.dom.index], *lower[a.cod.index], a.polarity);
      out.to_pd.arrows.push_back(ArrowId{i});
    }
  }
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
    const Diamond& d = g.diamond(DiamondId{i});
    auto m = [&](ArrowId a) { return lower_arrow[a.index]; };
    if (m(d.het_outer) && m(d.het_inner) && m(d.hom_outer) && m(d.hom_inner))
      bg.add_diamond(Diamond{*m(d.het_outer), *m(d.het_inner), *m(d.hom_outer), *m(d.hom_inner)});
  }

  auto add_copy = [&](CellId x, Polarity mark, const std::string& name) {
    CellId c = bg.add_cell(bg.fresh_cell_name(name), p.n - 1);
    out.to_pd.cells.push_back(x);
    out.boundary.marks[c] = mark;
    std::map<ArrowId, ArrowId> copy;
    for (ArrowId a : g.arrows_into(x)) {
      const GenArrow& ga = g.arrow(a);
      copy[a] = bg.add_arrow(bg.fresh_arrow_name(ga.name), *lower[ga.dom.index], c, ga.polarity);
      out.to_pd.arrows.push_back(a);
    }
    for (DiamondId di : g.diamonds_into(x)) {
      const Diamond& d = g.diamond(di);
      bg.add_diamond(Diamond{copy.at(d.het_outer), *lower_arrow[d.het_inner.index], copy.at(d.hom_outer),
                             *lower_arrow[d.hom_inner.index]});
    }
  };
  for (CellId x : g.cells_of_degree(p.n - 1)) {
    const bool leaf = p.is_leaf(x), root = p.is_root(x);
    if (leaf) add_copy(x, Polarity::Source, root ? g.name(x) + "^s" : g.name(x));
    if (root) add_copy(x, Polarity::Target, leaf ? g.name(x) + "^t" : g.name(x));
  }
  return out;
}

CellId root_object(const PastingDiagram& p) {
  if (p.roots.size() != 1)
    throw ConstructionError(ConstructionFailure::NotAPastingDiagram,
                            "expected one root object, found " + std::to_string(p.roots.size()));
  return p.roots.front();
}

Opetope pd_target(const PastingDiagram& p) { return canonical_relabel(slice(p.graph, root_object(p)).opetope); }

Coproduct coproduct(std::span<const OpetopicGraph* const> parts) {
  Coproduct out;
  for (const OpetopicGraph* part : parts) {
    Morphism inj;
    for (std::uint32_t i = 0; i < part->cell_count(); ++i)
      inj.cells.push_back(out.graph.add_cell(out.graph.fresh_cell_name(part->name(CellId{i})), part->degree(CellId{i})));
    for (std::uint32_t i = 0; i < part->arrow_count(); ++i) {
      const GenArrow& a = part->arrow(ArrowId{i});
      inj.arrows.push_back(out.graph.add_arrow(out.graph.fresh_arrow_name(a.name), inj(a.dom), inj(a.cod), a.polarity));
    }
    for (std::uint32_t i = 0; i < part->diamond_count(); ++i) {
      const Diamond& d = part->diamond(DiamondId{i});
      out.graph.add_diamond(Diamond{inj(d.het_outer), inj(d.het_inner), inj(d.hom_outer), inj(d.hom_inner)});
    }
    out.injections.push_back(std::move(inj));
  }
  return out;
}

Pushout pushout(const OpetopicGraph& c, const OpetopicGraph& a, const OpetopicGraph& b, const Morphism& to_a,
                const Morphism& to_b) {
  for (const auto& [target, map, label] :
       {std::tuple{&a, &to_a, "left"}, std::tuple{&b, &to_b, "right"}}) {
    ValidationReport r = validate_morphism(c, *target, *map);
    if (!r.empty())
      throw ConstructionError(ConstructionFailure::IllformedSpan,
                              std::string(label) + " leg is not a morphism: " + r.front().detail);
  }
  const std::size_t na = a.cell_count(), ea = a.arrow_count();
  UnionFind cells(na + b.cell_count());
  UnionFind arrows(ea + b.arrow_count());
  for (std::uint32_t i = 0; i < c.cell_count(); ++i) cells.unite(to_a(CellId{i}).index, na + to_b(CellId{i}).index);
  for (std::uint32_t i = 0; i < c.arrow_count(); ++i)
    arrows.unite(to_a(ArrowId{i}).index, ea + to_b(ArrowId{i}).index);

  Pushout out;
  auto cell_info = [&](std::size_t k) -> const Cell& {
    return k < na ? a.cell(CellId{static_cast<std::uint32_t>(k)}) : b.cell(CellId{static_cast<std::uint32_t>(k - na)});
  };
  auto arrow_info = [&](std::size_t k) -> const GenArrow& {
    return k < ea ? a.arrow(ArrowId{static_cast<std::uint32_t>(k)})
                  : b.arrow(ArrowId{static_cast<std::uint32_t>(k - ea)});
  };
  std::vector<std::optional<CellId>> class_cell(na + b.cell_count());
  std::vector<CellId> cell_of(na + b.cell_count());
  for (std::size_t k = 0; k < na + b.cell_count(); ++k) {
    std::size_t r = cells.find(k);
    if (!class_cell[r]) {
      const Cell& info = cell_info(r);
      class_cell[r] = out.graph.add_cell(out.graph.fresh_cell_name(info.name), info.degree);
    } else if (out.graph.degree(*class_cell[r]) != cell_info(k).degree) {
      throw ConstructionError(ConstructionFailure::IllformedSpan, "span identifies cells of different degrees");
    }
    cell_of[k] = *class_cell[r];
  }
  auto cell_class = [&](std::size_t arrow_k, CellId c) { return cell_of[(arrow_k < ea ? 0 : na) + c.index]; };
  std::vector<std::optional<ArrowId>> class_arrow(ea + b.arrow_count());
  std::vector<ArrowId> arrow_of(ea + b.arrow_count());
  for (std::size_t k = 0; k < ea + b.arrow_count(); ++k) {
    std::size_t r = arrows.find(k);
    const GenArrow& info = arrow_info(k);
    CellId dom = cell_class(k, info.dom), cod = cell_class(k, info.cod);
    if (!class_arrow[r]) {
      class_arrow[r] = out.graph.add_arrow(out.graph.fresh_arrow_name(arrow_info(r).name), dom, cod, info.polarity);
    } else {
      const GenArrow& have = out.graph.arrow(*class_arrow[r]);
      if (have.dom != dom || have.cod != cod || have.polarity != info.polarity)
        throw ConstructionError(ConstructionFailure::IllformedSpan, "span identifies incompatible arrows");
    }
    arrow_of[k] = *class_arrow[r];
  }
  for (std::uint32_t i = 0; i < na; ++i) out.from_a.cells.push_back(cell_of[i]);
  for (std::uint32_t i = 0; i < b.cell_count(); ++i) out.from_b.cells.push_back(cell_of[na + i]);
  for (std::uint32_t i = 0; i < ea; ++i) out.from_a.arrows.push_back(arrow_of[i]);
  for (std::uint32_t i = 0; i < b.arrow_count(); ++i) out.from_b.arrows.push_back(arrow_of[ea + i]);

  std::set<std::tuple<ArrowId, ArrowId, ArrowId, ArrowId>> seen;
  auto add_diamonds = [&](const OpetopicGraph& g, const Morphism& m) {
    for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
      const Diamond& d = g.diamond(DiamondId{i});
      Diamond img{m(d.het_outer), m(d.het_inner), m(d.hom_outer), m(d.hom_inner)};
      if (seen.insert({img.het_outer, img.het_inner, img.hom_outer, img.hom_inner}).second) out.graph.add_diamond(img);
    }
  };
  add_diamonds(a, out.from_a);
  add_diamonds(b, out.from_b);
  return out;
}

Opetope opetope_of_pd(const PastingDiagram& p) {
  PdBoundary pb = pd_boundary(p);
  Opetope target = fill(pb.boundary);
  Morphism inclusion = identity_morphism(pb.boundary.graph);
  Pushout d = pushout(pb.boundary.graph, target.graph, p.graph, inclusion, pb.to_pd);
  Boundary whole{std::move(d.graph), p.n + 1, {}};
  for (CellId x : p.graph.cells_of_degree(p.n)) whole.marks[d.from_b(x)] = Polarity::Source;
  whole.marks[d.from_a(target.top)] = Polarity::Target;
  return canonical_relabel(fill(whole));
}

}  // namespace opetope
