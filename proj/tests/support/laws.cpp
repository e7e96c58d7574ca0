#include "laws.hpp"

#include <set>

#include "opetope/codec/shape.hpp"
#include "opetope/constructions/constructions.hpp"
#include "fixtures.hpp"

namespace opetope::fixtures {

Horn horn_of(const PastingDiagram& p) {
  PdBoundary pb = pd_boundary(p);
  Horn out{source_horn(pb.boundary), {}};
  for (std::uint32_t i = 0; i < pb.boundary.graph.cell_count(); ++i) {
    auto mark = pb.boundary.marks.find(CellId{i});
    if (mark == pb.boundary.marks.end() || mark->second != Polarity::Target) out.origin.push_back(pb.to_pd(CellId{i}));
  }
  return out;
}

OpetopeCode boundary_code(const PastingDiagram& p) { return encode(fill(pd_boundary(p).boundary)); }

namespace {

std::size_t count_degree(const PastingDiagram& p, int d) { return p.graph.cells_of_degree(d).size(); }

}  // namespace

template <class F>
void LawChecker::instance(const std::string& law, F&& body) {
  ++laws_.instances;
  try {
    body();
  } catch (const std::exception& e) {
    laws_.failures.push_back(law + ": " + e.what());
  }
}

PastingDiagram LawChecker::random_pd(int n) { return gen_.pd(n, 3, 0.15); }

PastingDiagram LawChecker::replacement(const OpetopeCode& shape) {
  const int n = code_degree(shape);
  auto& buckets = pool_[n];
  if (buckets.empty())
    for (int i = 0; i < 80; ++i) {
      PastingDiagram p = random_pd(n);
      buckets[boundary_code(p)].push_back(std::move(p));
    }
  const std::vector<PastingDiagram>& fits = buckets[shape];
  if (fits.empty() || gen_.coin(0.25)) return shift(decode(shape));
  return gen_.pick(fits);
}

PastingDiagram LawChecker::onto(int n, const OpetopeCode& leaf_shape) {
  if (gen_.coin(0.2)) return degen(decode(leaf_shape));
  return tree_to_pd(gen_.tree(n, leaf_shape, 2));
}

std::map<CellId, PastingDiagram> LawChecker::replacements(const PastingDiagram& a) {
  std::map<CellId, PastingDiagram> b;
  for (CellId x : a.top_cells()) b.emplace(x, replacement(shape_of(a.graph, x)));
  return b;
}

std::map<CellId, PastingDiagram> LawChecker::grafts(const PastingDiagram& a, double chance) {
  std::map<CellId, PastingDiagram> b;
  for (CellId x : std::set<CellId>(a.leaves.begin(), a.leaves.end()))
    if (gen_.coin(chance)) b.emplace(x, onto(a.n, shape_of(a.graph, x)));
  return b;
}

CompositeResult LawChecker::do_subst(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b) {
  CompositeResult r = subst(a, b);
  ++counts_.instances;
  const int n = a.n;
  std::size_t top = 0, via_roots = a.roots.size(), via_leaves = a.leaves.size();
  for (const auto& [x, bx] : b) {
    top += count_degree(bx, n);
    via_roots += count_degree(bx, n - 1) - bx.roots.size();
    via_leaves += count_degree(bx, n - 1) - bx.leaves.size();
  }
  const std::size_t got_top = count_degree(r.pd, n), got_low = count_degree(r.pd, n - 1);
  if (got_top != top || got_low != via_roots || got_low != via_leaves)
    counts_.failures.push_back("subst of " + pd_code(a) + ": " + std::to_string(got_top) + " top cells and " +
                               std::to_string(got_low) + " below, expected " + std::to_string(top) + " and " +
                               std::to_string(via_roots) + "/" + std::to_string(via_leaves));
  return r;
}

CompositeResult LawChecker::do_graft(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b) {
  CompositeResult r = graft(a, b);
  ++counts_.instances;
  std::size_t top = count_degree(a, a.n), leaves = 0;
  for (CellId l : a.leaves)
    if (!b.contains(l)) ++leaves;
  for (const auto& [x, bx] : b) {
    top += count_degree(bx, a.n);
    leaves += bx.leaves.size();
  }
  if (count_degree(r.pd, a.n) != top || r.pd.leaves.size() != leaves)
    counts_.failures.push_back("graft onto " + pd_code(a) + ": " + std::to_string(count_degree(r.pd, a.n)) +
                               " top cells and " + std::to_string(r.pd.leaves.size()) + " leaves, expected " +
                               std::to_string(top) + " and " + std::to_string(leaves));
  return r;
}

void LawChecker::expect_same(const std::string& law, const PastingDiagram& lhs, const PastingDiagram& rhs) {
  std::string l = pd_code(lhs), r = pd_code(rhs);
  if (l != r) laws_.failures.push_back(law + ": " + l + " vs " + r);
}

void LawChecker::subst_associativity(int n) {
  instance("subst associativity", [&] {
    PastingDiagram a = random_pd(n);
    std::map<CellId, PastingDiagram> b = replacements(a);
    std::map<CellId, std::map<CellId, PastingDiagram>> c;
    std::map<CellId, PastingDiagram> inner;
    for (const auto& [x, bx] : b) {
      c[x] = replacements(bx);
      inner.emplace(x, do_subst(bx, c[x]).pd);
    }
    PastingDiagram lhs = do_subst(a, inner).pd;
    CompositeResult outer = do_subst(a, b);
    std::map<CellId, PastingDiagram> flat;
    for (const auto& [x, cx] : c)
      for (const auto& [y, cxy] : cx) flat.emplace(outer.parts.at(x)(y), cxy);
    expect_same("subst associativity", lhs, do_subst(outer.pd, flat).pd);
  });
}

void LawChecker::graft_associativity(int n) {
  instance("graft associativity", [&] {
    PastingDiagram a = random_pd(n);
    std::map<CellId, PastingDiagram> b = grafts(a, 0.7);
    std::map<CellId, std::map<CellId, PastingDiagram>> c;
    std::map<CellId, PastingDiagram> inner;
    for (const auto& [x, bx] : b) {
      c[x] = grafts(bx, 0.6);
      inner.emplace(x, do_graft(bx, c[x]).pd);
    }
    PastingDiagram lhs = do_graft(a, inner).pd;
    CompositeResult outer = do_graft(a, b);
    std::map<CellId, PastingDiagram> flat;
    for (const auto& [x, cx] : c)
      for (const auto& [y, cxy] : cx) flat.emplace(outer.parts.at(x)(y), cxy);
    expect_same("graft associativity", lhs, do_graft(outer.pd, flat).pd);
  });
}

void LawChecker::subst_units(int n) {
  instance("subst left unit", [&] {
    PastingDiagram b = random_pd(n);
    Opetope x = decode(boundary_code(b));
    expect_same("subst left unit", do_subst(shift(x), {{x.top, b}}).pd, b);
  });
  instance("subst right unit", [&] {
    PastingDiagram a = random_pd(n);
    std::map<CellId, PastingDiagram> units;
    for (CellId x : a.top_cells()) units.emplace(x, shift(slice(a.graph, x).opetope));
    expect_same("subst right unit", do_subst(a, units).pd, a);
  });
}

void LawChecker::graft_units(int n) {
  instance("graft left unit", [&] {
    PastingDiagram b = random_pd(n);
    Opetope x = pd_target(b);
    expect_same("graft left unit", do_graft(degen(x), {{x.top, b}}).pd, b);
  });
  instance("graft right unit", [&] {
    PastingDiagram a = random_pd(n);
    std::map<CellId, PastingDiagram> units;
    for (CellId x : a.leaves) units.emplace(x, degen(slice(a.graph, x).opetope));
    expect_same("graft right unit", do_graft(a, units).pd, a);
  });
}

void LawChecker::horn_interchange(int n) {
  instance("horn interchange", [&] {
    PastingDiagram a = random_pd(n);
    std::map<CellId, PastingDiagram> b = grafts(a, 0.8);
    PastingDiagram lhs = horn_of(do_graft(a, b).pd).pd;
    Horn ha = horn_of(a);
    std::map<CellId, PastingDiagram> per_leaf;
    for (CellId y : ha.pd.top_cells()) {
      auto it = b.find(ha.origin[y.index]);
      per_leaf.emplace(y, it == b.end() ? shift(slice(ha.pd.graph, y).opetope) : horn_of(it->second).pd);
    }
    expect_same("horn interchange", lhs, do_subst(ha.pd, per_leaf).pd);
  });
}

void LawChecker::figure_counts() {
  const OpetopeCode t1 = encode(tri(1)), t2 = encode(tri(2));
  const OpetopeCode arrow = encode(arr());
  using T = DecoratedTree;
  instance("substitution figure", [&] {
    PastingDiagram a = tree_to_pd(T::node(t2, {T::node(t2, {T::leaf(), T::leaf()}), T::node(t1, {T::leaf()})}));
    std::map<CellId, PastingDiagram> b;
    for (CellId x : a.top_cells()) {
      OpetopeCode s = shape_of(a.graph, x);
      if (s == t1)
        b.emplace(x, degen(decode(arrow)));
      else if (b.empty())
        b.emplace(x, tree_to_pd(T::node(t1, {T::node(t2, {T::leaf(), T::leaf()})})));
      else
        b.emplace(x, tree_to_pd(T::node(t2, {T::node(t1, {T::leaf()}), T::leaf()})));
    }
    CompositeResult r = do_subst(a, b);
    if (a.top_cells().size() != 3 || r.pd.top_cells().size() != 4)
      laws_.failures.push_back("substitution figure: " + std::to_string(r.pd.top_cells().size()) + " top cells");
  });
  instance("grafting figure", [&] {
    PastingDiagram a = shift(tri(3));
    std::vector<PastingDiagram> pieces{shift(tri(1)), shift(tri(2)), degen(decode(arrow))};
    std::map<CellId, PastingDiagram> b;
    for (std::size_t i = 0; i < a.leaves.size() && i < pieces.size(); ++i) b.emplace(a.leaves[i], pieces[i]);
    CompositeResult r = do_graft(a, b);
    if (a.leaves.size() != 3 || r.pd.top_cells().size() != 3 || r.pd.leaves.size() != 4)
      laws_.failures.push_back("grafting figure: " + std::to_string(r.pd.top_cells().size()) + " top cells, " +
                               std::to_string(r.pd.leaves.size()) + " leaves");
  });
}

}  // namespace opetope::fixtures
