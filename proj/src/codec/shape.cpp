#include "opetope/codec/shape.hpp"

#include <algorithm>
#include <set>

namespace opetope {

ArrowId ShapeAnalysis::target_of(CellId x) const {
  auto t = g_.target_arrow(x);
  if (!t) throw ShapeError("cell " + g_.name(x) + " has no target arrow");
  return *t;
}

const ShapeAnalysis::Horn& ShapeAnalysis::horn(CellId x) {
  if (auto it = horns_.find(x); it != horns_.end()) return it->second;
  Horn h;
  ArrowId t = target_of(x);
  ArrowId t2 = target_of(g_.arrow(t).dom);
  NormalForm root = homs_.two_step(t2, t);
  for (ArrowId f : g_.source_arrows(x)) {
    NormalForm out = homs_.two_step(target_of(g_.arrow(f).dom), f);
    if (!h.by_output.emplace(out, f).second)
      throw ShapeError("two sources of " + g_.name(x) + " share an output in the horn");
  }
  if (auto it = h.by_output.find(root); it != h.by_output.end()) h.root = it->second;
  return horns_.emplace(x, std::move(h)).first->second;
}

std::optional<ArrowId> ShapeAnalysis::root_node(CellId x) {
  if (g_.degree(x) == 0) return std::nullopt;
  if (g_.degree(x) == 1) {
    auto s = g_.source_arrows(x);
    if (s.size() != 1) throw ShapeError("cell " + g_.name(x) + " does not have exactly one source");
    return s.front();
  }
  return horn(x).root;
}

std::optional<ArrowId> ShapeAnalysis::child(CellId x, ArrowId node, ArrowId input) {
  const Horn& h = horn(x);
  auto it = h.by_output.find(homs_.two_step(input, node));
  if (it == h.by_output.end()) return std::nullopt;
  return it->second;
}

const std::vector<ArrowId>& ShapeAnalysis::canonical_sources(CellId x) {
  if (auto it = sources_.find(x); it != sources_.end()) return it->second;
  std::vector<ArrowId> order;
  if (g_.degree(x) == 1) {
    order = g_.source_arrows(x);
  } else if (g_.degree(x) >= 2) {
    const std::size_t expected = g_.source_arrows(x).size();
    std::set<ArrowId> seen;
    auto visit = [&](auto&& self, ArrowId f) -> void {
      if (!seen.insert(f).second) throw ShapeError("the horn of " + g_.name(x) + " is not a tree");
      order.push_back(f);
      std::vector<ArrowId> inputs = canonical_sources(g_.arrow(f).dom);
      for (ArrowId s : inputs)
        if (auto c = child(x, f, s)) self(self, *c);
    };
    if (auto r = root_node(x)) visit(visit, *r);
    if (order.size() != expected)
      throw ShapeError("the sources of " + g_.name(x) + " do not form a tree over its target");
  }
  return sources_.emplace(x, std::move(order)).first->second;
}

std::string ShapeAnalysis::node_code(CellId x, ArrowId f, int depth) {
  if (depth > static_cast<int>(g_.arrows_into(x).size()) + 1)
    throw ShapeError("the horn of " + g_.name(x) + " is not a tree");
  std::string out = "nd(" + code(g_.arrow(f).dom) + ")(";
  std::vector<ArrowId> inputs = canonical_sources(g_.arrow(f).dom);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out += ",";
    auto c = child(x, f, inputs[i]);
    out += c ? node_code(x, *c, depth + 1) : "lf";
  }
  return out + ")";
}

const std::string& ShapeAnalysis::code(CellId x) {
  if (auto it = codes_.find(x); it != codes_.end()) return it->second;
  std::string out;
  if (g_.degree(x) == 0) {
    out = "o";
  } else if (auto r = root_node(x)) {
    canonical_sources(x);  // rejects horns that are not trees
    out = "{" + node_code(x, *r, 0) + "}";
  } else {
    if (!g_.source_arrows(x).empty()) throw ShapeError("the horn of " + g_.name(x) + " has no root node");
    ArrowId t2 = target_of(g_.arrow(target_of(x)).dom);
    out = "{deg(" + code(g_.arrow(t2).dom) + ")}";
  }
  return codes_.emplace(x, std::move(out)).first->second;
}

CanonicalLabeling canonical_labeling(ShapeAnalysis& shapes, CellId top) {
  const OpetopicGraph& g = shapes.graph();
  CanonicalLabeling out;
  std::vector<bool> labeled(g.cell_count(), false);
  out.cells.push_back(top);
  labeled[top.index] = true;
  for (std::size_t k = 0; k < out.cells.size(); ++k) {
    CellId c = out.cells[k];
    if (g.degree(c) == 0) continue;
    std::vector<ArrowId> gens{shapes.target_of(c)};
    const auto& sources = shapes.canonical_sources(c);
    gens.insert(gens.end(), sources.begin(), sources.end());
    if (gens.size() != g.arrows_into(c).size())
      throw ShapeError("cell " + g.name(c) + " has generators outside its horn tree");
    for (ArrowId e : gens) {
      out.arrows.push_back(e);
      CellId d = g.arrow(e).dom;
      if (!labeled[d.index]) {
        labeled[d.index] = true;
        out.cells.push_back(d);
      }
    }
  }
  return out;
}

Opetope canonical_relabel(const Opetope& x) {
  ShapeAnalysis shapes(x.graph);
  CanonicalLabeling lab = canonical_labeling(shapes, x.top);
  if (lab.cells.size() != x.graph.cell_count() || lab.arrows.size() != x.graph.arrow_count())
    throw ShapeError("not every cell lies below the top cell");
  Opetope out;
  std::vector<CellId> cell_map(x.graph.cell_count());
  std::vector<ArrowId> arrow_map(x.graph.arrow_count());
  for (std::size_t i = 0; i < lab.cells.size(); ++i)
    cell_map[lab.cells[i].index] = out.graph.add_cell("c" + std::to_string(i), x.graph.degree(lab.cells[i]));
  for (std::size_t i = 0; i < lab.arrows.size(); ++i) {
    const GenArrow& a = x.graph.arrow(lab.arrows[i]);
    arrow_map[lab.arrows[i].index] =
        out.graph.add_arrow("e" + std::to_string(i), cell_map[a.dom.index], cell_map[a.cod.index], a.polarity);
  }
  std::vector<Diamond> diamonds;
  for (std::uint32_t i = 0; i < x.graph.diamond_count(); ++i) {
    const Diamond& d = x.graph.diamond(DiamondId{i});
    diamonds.push_back(Diamond{arrow_map[d.het_outer.index], arrow_map[d.het_inner.index],
                               arrow_map[d.hom_outer.index], arrow_map[d.hom_inner.index]});
  }
  std::sort(diamonds.begin(), diamonds.end(), [](const Diamond& a, const Diamond& b) {
    return std::tie(a.het_outer, a.het_inner, a.hom_outer, a.hom_inner) <
           std::tie(b.het_outer, b.het_inner, b.hom_outer, b.hom_inner);
  });
  for (const Diamond& d : diamonds) out.graph.add_diamond(d);
  out.top = cell_map[x.top.index];
  return out;
}

std::optional<Morphism> opetope_isomorphism(const Opetope& a, const Opetope& b) {
  ShapeAnalysis sa(a.graph), sb(b.graph);
  if (sa.code(a.top) != sb.code(b.top)) return std::nullopt;
  CanonicalLabeling la = canonical_labeling(sa, a.top);
  CanonicalLabeling lb = canonical_labeling(sb, b.top);
  if (la.cells.size() != a.graph.cell_count() || lb.cells.size() != b.graph.cell_count() ||
      la.cells.size() != lb.cells.size() || la.arrows.size() != lb.arrows.size() ||
      a.graph.arrow_count() != b.graph.arrow_count())
    return std::nullopt;
  Morphism m;
  m.cells.resize(a.graph.cell_count());
  m.arrows.resize(a.graph.arrow_count());
  for (std::size_t i = 0; i < la.cells.size(); ++i) m.cells[la.cells[i].index] = lb.cells[i];
  for (std::size_t i = 0; i < la.arrows.size(); ++i) m.arrows[la.arrows[i].index] = lb.arrows[i];
  if (!validate_morphism(a.graph, b.graph, m).empty()) return std::nullopt;
  return m;
}

}  // namespace opetope
