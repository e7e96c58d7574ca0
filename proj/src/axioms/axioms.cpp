#include "opetope/axioms/axioms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "opetope/constructions/constructions.hpp"

namespace opetope {

bool AxiomReport::ok() const {
  return std::none_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.status == Status::Fail; });
}

bool AxiomReport::failed(std::string_view label) const {
  const AxiomResult* r = find(label);
  return r && r->status == Status::Fail;
}

const AxiomResult* AxiomReport::find(std::string_view label) const {
  for (const AxiomResult& r : results)
    if (r.label == label) return &r;
  return nullptr;
}

AxiomResult& AxiomReport::add(std::string label) {
  results.push_back(AxiomResult{std::move(label), Status::Pass, {}, {}});
  return results.back();
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  for (const AxiomResult& r : results) {
    out << r.label << ": " << (r.status == Status::Pass ? "pass" : r.status == Status::Fail ? "FAIL" : "skipped");
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
    for (const std::string& w : r.witnesses) out << "  - " << w << "\n";
  }
  return out.str();
}

namespace {

void fail(AxiomResult& r, std::string witness) {
  r.status = Status::Fail;
  r.witnesses.push_back(std::move(witness));
}

void skip(AxiomResult& r, std::string why) {
  r.status = Status::Skipped;
  r.note = std::move(why);
}

bool diamond_ok(const OpetopicGraph& g, const Diamond& d) {
  if (!g.composable(d.het_outer, d.het_inner) || !g.composable(d.hom_outer, d.hom_inner)) return false;
  if (g.arrow(d.het_outer).cod != g.arrow(d.hom_outer).cod) return false;
  if (g.arrow(d.het_inner).dom != g.arrow(d.hom_inner).dom) return false;
  return !g.homogeneous(d.het_outer, d.het_inner) && g.homogeneous(d.hom_outer, d.hom_inner);
}

std::string vertex_name(const OpetopicGraph& g, const OGraph::Vertex& v) {
  if (const ArrowId* a = std::get_if<ArrowId>(&v)) return "source " + g.name(*a);
  return "2-step " + describe(g, std::get<NormalForm>(v));
}

}  // namespace

OGraph ograph(const OpetopicGraph& g, CellId x, HomCache& homs) {
  OGraph out;
  std::map<NormalForm, std::size_t> two_step_index;
  std::map<ArrowId, std::size_t> source_index;
  for (ArrowId a : g.arrows_into(x))
    if (g.arrow(a).polarity == Polarity::Source) {
      source_index[a] = out.vertices.size();
      out.vertices.emplace_back(a);
    }
  for (const NormalForm& nf : homs.into(x))
    if (nf.length() == 2) {
      two_step_index[nf] = out.vertices.size();
      out.vertices.emplace_back(nf);
    }
  for (const auto& [f, fi] : source_index) {
    CellId w = g.arrow(f).dom;
    for (ArrowId t : g.arrows_into(w)) {
      NormalForm two = homs.two_step(t, f);
      std::size_t gi = two_step_index.at(two);
      if (g.arrow(t).polarity == Polarity::Target)
        out.edges.emplace_back(fi, gi);
      else
        out.edges.emplace_back(gi, fi);
    }
  }
  if (auto t = g.target_arrow(x))
    if (auto t2 = g.target_arrow(g.arrow(*t).dom)) {
      auto it = two_step_index.find(homs.two_step(*t2, *t));
      if (it != two_step_index.end()) out.root = it->second;
    }
  return out;
}

std::optional<std::string> tree_defect(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                       std::size_t root) {
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : edges) out[a].push_back(b);
  if (!out[root].empty()) return "root has an outgoing edge";
  for (std::size_t v = 0; v < n; ++v)
    if (v != root && out[v].size() != 1)
      return "vertex " + std::to_string(v) + " has " + std::to_string(out[v].size()) + " outgoing edges";
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t cur = v;
    for (std::size_t steps = 0; cur != root; ++steps) {
      if (steps > n) return "vertex " + std::to_string(v) + " lies on a cycle";
      cur = out[cur].front();
    }
  }
  return std::nullopt;
}

AxiomReport check_opetopic(const OpetopicGraph& g, const CheckOptions& options) {
  AxiomReport report;
  AxiomResult& wf = report.add("WF");
  for (const Violation& v : well_formed(g)) fail(wf, v.kind + ": " + v.detail);
  const bool shape_ok = wf.status == Status::Pass;

  AxiomResult& o1 = report.add("O1");
  o1.note = std::to_string(g.cell_count()) + " cells, " + std::to_string(g.arrow_count()) + " generators";

  AxiomResult& o2 = report.add("O2");
  AxiomResult& o3 = report.add("O3");
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) {
    CellId c{i};
    std::size_t targets = 0, sources = 0;
    for (ArrowId a : g.arrows_into(c)) (g.arrow(a).polarity == Polarity::Target ? targets : sources)++;
    if (g.degree(c) >= 1 && targets != 1)
      fail(o2, "cell " + g.name(c) + " has " + std::to_string(targets) + " target arrows");
    if (g.degree(c) == 1 && sources != 1)
      fail(o3, "cell " + g.name(c) + " has " + std::to_string(sources) + " source arrows");
  }

  AxiomResult& o4 = report.add("O4");
  AxiomResult& o5 = report.add("O5");
  std::map<std::pair<ArrowId, ArrowId>, int> partners;
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
    const Diamond& d = g.diamond(DiamondId{i});
    if (!diamond_ok(g, d)) continue;
    partners[{d.het_outer, d.het_inner}]++;
    partners[{d.hom_outer, d.hom_inner}]++;
  }
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    ArrowId outer{i};
    for (ArrowId inner : g.arrows_into(g.arrow(outer).dom)) {
      int count = partners.count({outer, inner}) ? partners[{outer, inner}] : 0;
      if (count == 1) continue;
      std::string pair = describe_pair(g, outer, inner);
      if (!g.homogeneous(outer, inner))
        fail(o4, "heterogeneous pair " + pair + " has " + std::to_string(count) + " homogeneous partners");
      else
        fail(o5, "homogeneous pair " + pair + " has " + std::to_string(count) + " heterogeneous partners");
    }
  }

  AxiomResult& o6 = report.add("O6");
  AxiomResult& o7 = report.add("O7");
  AxiomResult& o8 = report.add("O8");
  if (!shape_ok || o2.status == Status::Fail || o4.status == Status::Fail || o5.status == Status::Fail) {
    for (AxiomResult* r : {&o6, &o7, &o8}) skip(*r, "needs WF, O2, O4 and O5");
    return report;
  }

  HomCache homs(g);
  try {
    for (std::uint32_t i = 0; i < g.cell_count(); ++i) {
      CellId x{i};
      if (g.degree(x) < 2) continue;
      OGraph og = ograph(g, x, homs);
      if (options.o6 == O6Mode::Tree) {
        if (!og.root) {
          fail(o6, "cell " + g.name(x) + " has no t^2");
          continue;
        }
        if (auto defect = tree_defect(og.vertices.size(), og.edges, *og.root)) {
          // Re-express the vertex index as a readable name.
          std::string text = *defect;
          auto pos = text.find("vertex ");
          if (pos != std::string::npos) {
            std::size_t idx = std::stoul(text.substr(pos + 7));
            text = vertex_name(g, og.vertices[idx]) + text.substr(text.find(' ', pos + 7));
          }
          fail(o6, "OGraph at " + g.name(x) + ": " + text);
        }
      } else {
        std::vector<std::vector<std::size_t>> rev(og.vertices.size());
        for (auto [a, b] : og.edges) rev[b].push_back(a);
        bool found = false;
        for (std::size_t r = 0; r < og.vertices.size() && !found; ++r) {
          if (!std::holds_alternative<NormalForm>(og.vertices[r])) continue;
          std::vector<bool> seen(og.vertices.size(), false);
          std::vector<std::size_t> stack{r};
          seen[r] = true;
          while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t u : rev[v])
              if (!seen[u]) seen[u] = true, stack.push_back(u);
          }
          bool all = true;
          for (std::size_t v = 0; v < og.vertices.size(); ++v)
            if (std::holds_alternative<NormalForm>(og.vertices[v]) && !seen[v]) all = false;
          found = all;
        }
        if (!found) fail(o6, "no two-step arrow into " + g.name(x) + " is reachable by zigzags from all others");
      }
    }

    for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
      ArrowId f{i};
      if (g.arrow(f).polarity != Polarity::Target) continue;
      CellId y = g.arrow(f).dom;
      std::map<CellId, std::set<NormalForm>> images;
      for (const NormalForm& nf : homs.into(y)) {
        if (g.degree(nf.from) > g.degree(y) - 2) continue;
        std::vector<ArrowId> path = nf.path;
        path.push_back(f);
        NormalForm img = normalize(g, nf.from, path);
        if (!images[nf.from].insert(img).second)
          fail(o7, "postcomposition with " + g.name(f) + " identifies two arrows " + g.name(nf.from) + " -> " +
                       g.name(y) + ", e.g. " + describe(g, nf));
      }
    }

    for (std::uint32_t i = 0; i < g.cell_count(); ++i) {
      CellId x{i};
      for (const NormalForm& nf : homs.into(x)) {
        if (nf.length() < 3) continue;
        std::vector<ArrowId> rest(nf.path.begin() + 1, nf.path.end());
        NormalForm upper = normalize(g, g.arrow(rest.front()).dom, rest);
        NormalForm back = compose(g, nf.path.front(), upper);
        if (upper.length() + 1 != nf.length() || back != nf)
          fail(o8, "arrow " + describe(g, nf) + " does not split as a (k-1)-step arrow after a generator");
      }
    }
  } catch (const RewriteError& e) {
    fail(o4, std::string("normalization failed: ") + e.what());
    for (AxiomResult* r : {&o6, &o7, &o8})
      if (r->status == Status::Pass) skip(*r, "normalization failed");
  }
  return report;
}

std::optional<CellId> is_opetope(const OpetopicGraph& g) {
  int top = g.max_degree();
  if (top < 0) return std::nullopt;
  auto candidates = g.cells_of_degree(top);
  if (candidates.size() != 1) return std::nullopt;
  CellId t = candidates.front();
  try {
    HomCache homs(g);
    std::vector<int> count(g.cell_count(), 0);
    for (const NormalForm& nf : homs.into(t)) count[nf.from.index]++;
    for (int c : count)
      if (c != 1) return std::nullopt;
  } catch (const RewriteError&) {
    return std::nullopt;
  }
  return t;
}

AxiomReport check_boundary(const Boundary& b) {
  AxiomReport report;
  AxiomResult& pre = report.add("pre");
  const OpetopicGraph& g = b.graph;
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) {
    CellId c{i};
    if (g.degree(c) >= b.n) fail(pre, "cell " + g.name(c) + " has degree >= " + std::to_string(b.n));
    if (g.degree(c) == b.n - 1 && !b.marks.contains(c)) fail(pre, "cell " + g.name(c) + " is unmarked");
  }
  for (const auto& [c, m] : b.marks)
    if (g.degree(c) != b.n - 1) fail(pre, "cell " + g.name(c) + " is marked but has the wrong degree");

  AxiomResult& bd1 = report.add("Bd1");
  AxiomResult& bd2 = report.add("Bd2");
  if (b.n == 0) {
    if (g.cell_count() != 0) fail(bd1, "a 0-boundary has no cells");
    return report;
  }
  auto targets = b.marked(Polarity::Target);
  if (targets.size() != 1) fail(bd1, std::to_string(targets.size()) + " cells are marked target");
  if (pre.status == Status::Fail) {
    skip(bd2, "precondition failed");
    return report;
  }
  AxiomReport inner = check_pasting_diagram(source_horn(b));
  for (const AxiomResult& r : inner.results)
    if (r.status == Status::Fail)
      for (const std::string& w : r.witnesses) fail(bd2, "source horn " + r.label + ": " + w);
  return report;
}

PDGraph pdgraph(const PastingDiagram& p) {
  PDGraph out;
  std::map<CellId, std::size_t> index;
  for (CellId c : p.graph.cells_of_degree(p.n)) index[c] = out.vertices.size(), out.vertices.push_back(c);
  for (CellId c : p.graph.cells_of_degree(p.n - 1)) index[c] = out.vertices.size(), out.vertices.push_back(c);
  for (CellId x : p.graph.cells_of_degree(p.n))
    for (ArrowId a : p.graph.arrows_into(x)) {
      const GenArrow& ga = p.graph.arrow(a);
      if (!index.contains(ga.dom)) continue;
      if (ga.polarity == Polarity::Target)
        out.edges.emplace_back(index[x], index[ga.dom]);
      else
        out.edges.emplace_back(index[ga.dom], index[x]);
    }
  return out;
}

AxiomReport check_pasting_diagram(const PastingDiagram& p) {
  AxiomReport report;
  const OpetopicGraph& g = p.graph;
  AxiomResult& pre = report.add("pre");
  for (std::uint32_t i = 0; i < g.cell_count(); ++i)
    if (g.degree(CellId{i}) > p.n) fail(pre, "cell " + g.name(CellId{i}) + " has degree > " + std::to_string(p.n));
  for (const auto* list : {&p.leaves, &p.roots})
    for (CellId c : *list)
      if (c.index >= g.cell_count() || g.degree(c) != p.n - 1) fail(pre, "a leaf or root has the wrong degree");

  auto tops = g.cells_of_degree(p.n);
  auto faces = g.cells_of_degree(p.n - 1);
  AxiomResult& pd1 = report.add("PD1");
  pd1.note = std::to_string(tops.size()) + " top cells";

  auto count_in = [](const std::vector<CellId>& v, CellId c) { return std::count(v.begin(), v.end(), c); };
  auto arrows_up = [&](CellId x, Polarity pol) {
    std::size_t n = 0;
    for (ArrowId a : g.arrows_from(x))
      if (g.arrow(a).polarity == pol && g.degree(g.arrow(a).cod) == p.n) ++n;
    return n;
  };

  AxiomResult& pd2 = report.add("PD2");
  AxiomResult& pd3 = report.add("PD3");
  AxiomResult& pd4 = report.add("PD4");
  AxiomResult& pd5 = report.add("PD5");
  AxiomResult& pd6 = report.add("PD6");
  for (CellId x : faces) {
    auto leaf = count_in(p.leaves, x);
    auto root = count_in(p.roots, x);
    std::size_t up_t = arrows_up(x, Polarity::Target);
    std::size_t up_s = arrows_up(x, Polarity::Source);
    if (leaf > 1) fail(pd2, "cell " + g.name(x) + " is a leaf " + std::to_string(leaf) + " times");
    if ((leaf == 1) != (up_t == 0))
      fail(pd2, "cell " + g.name(x) + (leaf ? " is a leaf but has a target arrow" : " is not a leaf but has no target arrow"));
    if (root > 1) fail(pd3, "cell " + g.name(x) + " is a root " + std::to_string(root) + " times");
    if ((root == 1) != (up_s == 0))
      fail(pd3, "cell " + g.name(x) + (root ? " is a root but has a source arrow" : " is not a root but has no source arrow"));
    if (up_t > 1) fail(pd5, "cell " + g.name(x) + " has " + std::to_string(up_t) + " target arrows upward");
    if (up_s > 1) fail(pd6, "cell " + g.name(x) + " has " + std::to_string(up_s) + " source arrows upward");
  }
  if (p.n == 0) {
    if (g.cell_count() != 1) fail(pd4, "a 0-pasting diagram has " + std::to_string(g.cell_count()) + " cells");
  }

  AxiomResult& pd7 = report.add("PD7");
  PDGraph pg = pdgraph(p);
  std::optional<std::size_t> root_vertex;
  if (p.n >= 1) {
    std::vector<std::vector<std::size_t>> rev(pg.vertices.size());
    for (auto [a, b] : pg.edges) rev[b].push_back(a);
    for (std::size_t r = tops.size(); r < pg.vertices.size() && !root_vertex; ++r) {
      std::vector<bool> seen(pg.vertices.size(), false);
      std::vector<std::size_t> stack{r};
      seen[r] = true;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t u : rev[v])
          if (!seen[u]) seen[u] = true, stack.push_back(u);
      }
      bool all = true;
      for (std::size_t v = tops.size(); v < pg.vertices.size(); ++v) all = all && seen[v];
      if (all) root_vertex = r;
    }
    if (!root_vertex) fail(pd7, "no cell of degree " + std::to_string(p.n - 1) + " is reachable from all others");
  }

  AxiomResult& pd8 = report.add("PD8");
  if (pre.status == Status::Fail) {
    skip(pd8, "precondition failed");
  } else if (p.n >= 1) {
    try {
      AxiomReport inner = check_boundary(pd_boundary(p).boundary);
      for (const AxiomResult& r : inner.results)
        if (r.status == Status::Fail)
          for (const std::string& w : r.witnesses) fail(pd8, "boundary " + r.label + ": " + w);
    } catch (const std::exception& e) {
      fail(pd8, std::string("boundary could not be formed: ") + e.what());
    }
  }

  // Consequences of the axioms; a failure here with PD1-PD8 passing
  // signals an inconsistency in the checker itself.
  AxiomResult& tree = report.add("PD-tree");
  bool axioms_ok = report.ok();
  if (!axioms_ok || p.n == 0) {
    skip(tree, p.n == 0 ? "dimension 0" : "axioms failed");
  } else {
    std::size_t sources = 0;
    for (CellId x : tops)
      for (ArrowId a : g.arrows_into(x))
        if (g.arrow(a).polarity == Polarity::Source) ++sources;
    if (faces.size() != 1 + sources)
      fail(tree, std::to_string(faces.size()) + " cells of degree n-1 but " + std::to_string(sources) + " sources");
    if (p.roots.size() != 1) fail(tree, std::to_string(p.roots.size()) + " root objects");
    if (root_vertex)
      if (auto defect = tree_defect(pg.vertices.size(), pg.edges, *root_vertex)) fail(tree, "PDGraph: " + *defect);
  }
  return report;
}

}  // namespace opetope
