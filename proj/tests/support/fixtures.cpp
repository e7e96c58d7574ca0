#include "fixtures.hpp"

namespace opetope::fixtures {

namespace {

ArrowId link(OpetopicGraph& g, CellId dom, CellId cod, Polarity p) {
  std::string name = std::string(1, polarity_letter(p)) + ":" + g.name(dom) + ">" + g.name(cod);
  return g.add_arrow(name, dom, cod, p);
}

constexpr Polarity S = Polarity::Source;
constexpr Polarity T = Polarity::Target;

}  // namespace

Opetope pt() {
  Opetope x;
  x.top = x.graph.add_cell("p", 0);
  return x;
}

Opetope arr() {
  Opetope x;
  OpetopicGraph& g = x.graph;
  CellId s = g.add_cell("s", 0), t = g.add_cell("t", 0);
  x.top = g.add_cell("a", 1);
  link(g, s, x.top, S);
  link(g, t, x.top, T);
  return x;
}

Opetope loop() {
  Opetope x;
  OpetopicGraph& g = x.graph;
  CellId p = g.add_cell("p", 0), b = g.add_cell("b", 1);
  x.top = g.add_cell("c", 2);
  ArrowId ps = link(g, p, b, S), pt = link(g, p, b, T), bc = link(g, b, x.top, T);
  g.add_diamond(Diamond{bc, ps, bc, pt});
  return x;
}

Opetope tri(int m) {
  if (m == 0) return loop();
  Opetope x;
  OpetopicGraph& g = x.graph;
  std::vector<CellId> p;
  for (int i = 0; i <= m; ++i) p.push_back(g.add_cell("p" + std::to_string(i), 0));
  std::vector<CellId> a{CellId{}};
  for (int i = 1; i <= m; ++i) a.push_back(g.add_cell("a" + std::to_string(i), 1));
  CellId b = g.add_cell("b", 1);
  x.top = g.add_cell("c", 2);
  CellId c = x.top;
  std::vector<ArrowId> in_s{ArrowId{}}, in_t{ArrowId{}}, up{ArrowId{}};
  for (int i = 1; i <= m; ++i) {
    in_s.push_back(link(g, p[i - 1], a[i], S));
    in_t.push_back(link(g, p[i], a[i], T));
  }
  ArrowId b_s = link(g, p[0], b, S), b_t = link(g, p[m], b, T);
  for (int i = 1; i <= m; ++i) up.push_back(link(g, a[i], c, S));
  ArrowId bc = link(g, b, c, T);
  g.add_diamond(Diamond{bc, b_s, up[1], in_s[1]});
  for (int i = 1; i < m; ++i) g.add_diamond(Diamond{up[i], in_t[i], up[i + 1], in_s[i + 1]});
  g.add_diamond(Diamond{up[m], in_t[m], bc, b_t});
  return x;
}

Opetope op3() {
  Opetope x;
  OpetopicGraph& g = x.graph;
  CellId p0 = g.add_cell("p0", 0), p1 = g.add_cell("p1", 0), p2 = g.add_cell("p2", 0);
  CellId a1 = g.add_cell("a1", 1), a2 = g.add_cell("a2", 1), b = g.add_cell("b", 1);
  CellId c = g.add_cell("c", 2), d = g.add_cell("d", 2);
  x.top = g.add_cell("w", 3);
  ArrowId a1s = link(g, p0, a1, S), a1t = link(g, p1, a1, T);
  ArrowId a2s = link(g, p1, a2, S), a2t = link(g, p2, a2, T);
  ArrowId bs = link(g, p0, b, S), bt = link(g, p2, b, T);
  struct Face {
    ArrowId a1, a2, b;
  };
  auto face = [&](CellId f) {
    Face out{link(g, a1, f, S), link(g, a2, f, S), link(g, b, f, T)};
    g.add_diamond(Diamond{out.b, bs, out.a1, a1s});
    g.add_diamond(Diamond{out.a1, a1t, out.a2, a2s});
    g.add_diamond(Diamond{out.a2, a2t, out.b, bt});
    return out;
  };
  Face fc = face(c), fd = face(d);
  ArrowId cw = link(g, c, x.top, S), dw = link(g, d, x.top, T);
  g.add_diamond(Diamond{dw, fd.a1, cw, fc.a1});
  g.add_diamond(Diamond{dw, fd.a2, cw, fc.a2});
  g.add_diamond(Diamond{cw, fc.b, dw, fd.b});
  return x;
}

std::vector<Named> all() {
  return {{"pt", pt()},     {"arr", arr()},   {"loop", loop()}, {"tri1", tri(1)},
          {"tri2", tri(2)}, {"tri3", tri(3)}, {"op3", op3()}};
}

PastingDiagram hole() {
  PastingDiagram p;
  p.n = 2;
  OpetopicGraph& g = p.graph;
  CellId pt = g.add_cell("p", 0), l = g.add_cell("l", 1), r = g.add_cell("r", 1), c = g.add_cell("c", 2);
  ArrowId ls = link(g, pt, l, S), lt = link(g, pt, l, T);
  ArrowId rs = link(g, pt, r, S), rt = link(g, pt, r, T);
  ArrowId lc = link(g, l, c, S), rc = link(g, r, c, T);
  g.add_diamond(Diamond{rc, rs, lc, ls});
  g.add_diamond(Diamond{lc, lt, rc, rt});
  p.leaves = {l};
  p.roots = {r};
  return p;
}

}  // namespace opetope::fixtures
