#include "opetope/io/render.hpp"

#include <sstream>

#include "opetope/axioms/axioms.hpp"

namespace opetope::io {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string style(Polarity p) { return p == Polarity::Source ? "solid" : "dashed"; }

void ascii(std::ostringstream& out, const DecoratedTree& t, const std::string& prefix, bool last, bool root) {
  out << prefix << (root ? "" : last ? "`- " : "|- ");
  switch (t.kind) {
    case DecoratedTree::Kind::Leaf: out << "lf\n"; return;
    case DecoratedTree::Kind::Degenerate: out << "deg " << t.decoration.text << "\n"; return;
    case DecoratedTree::Kind::Node: out << "nd " << t.decoration.text << "\n"; break;
  }
  const std::string inner = root ? prefix : prefix + (last ? "   " : "|  ");
  for (std::size_t i = 0; i < t.inputs.size(); ++i) ascii(out, t.inputs[i], inner, i + 1 == t.inputs.size(), false);
}

std::size_t dot_node(std::ostringstream& out, const DecoratedTree& t, std::size_t& next) {
  std::size_t id = next++;
  switch (t.kind) {
    case DecoratedTree::Kind::Leaf: out << "  n" << id << " [shape=point];\n"; break;
    case DecoratedTree::Kind::Degenerate: out << "  n" << id << " [shape=box,label=" << quote("deg " + t.decoration.text) << "];\n"; break;
    case DecoratedTree::Kind::Node: out << "  n" << id << " [shape=box,label=" << quote(t.decoration.text) << "];\n"; break;
  }
  for (std::size_t i = 0; i < t.inputs.size(); ++i) {
    std::size_t child = dot_node(out, t.inputs[i], next);
    out << "  n" << child << " -> n" << id << " [label=\"" << i << "\"];\n";
  }
  return id;
}

}  // namespace

std::string ascii_tree(const DecoratedTree& t) {
  std::ostringstream out;
  ascii(out, t, "", true, true);
  return out.str();
}

std::string dot_tree(const DecoratedTree& t) {
  std::ostringstream out;
  out << "digraph tree {\n  rankdir=BT;\n";
  std::size_t next = 0;
  dot_node(out, t, next);
  out << "}\n";
  return out.str();
}

std::string dot_graph(const OpetopicGraph& g) {
  std::ostringstream out;
  out << "digraph opetopic_set {\n  rankdir=BT;\n";
  for (int d = 0; d <= g.max_degree(); ++d) {
    out << "  { rank=same;";
    for (CellId c : g.cells_of_degree(d)) out << " " << quote(g.name(c)) << ";";
    out << " }\n";
  }
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) {
    const GenArrow& a = g.arrow(ArrowId{i});
    out << "  " << quote(g.name(a.dom)) << " -> " << quote(g.name(a.cod)) << " [style=" << style(a.polarity) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_pdgraph(const PastingDiagram& p) {
  PDGraph pg = pdgraph(p);
  std::ostringstream out;
  out << "digraph pdgraph {\n";
  for (std::size_t v = 0; v < pg.vertices.size(); ++v) {
    const bool top = p.graph.degree(pg.vertices[v]) == p.n;
    out << "  v" << v << " [label=" << quote(p.graph.name(pg.vertices[v])) << (top ? ",shape=box" : "") << "];\n";
  }
  for (auto [a, b] : pg.edges) {
    const bool from_top = p.graph.degree(pg.vertices[a]) == p.n;
    out << "  v" << a << " -> v" << b << " [style=" << style(from_top ? Polarity::Target : Polarity::Source) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string dot_ograph(const OpetopicGraph& g, CellId x) {
  HomCache homs(g);
  OGraph og = ograph(g, x, homs);
  std::ostringstream out;
  out << "digraph ograph {\n";
  for (std::size_t v = 0; v < og.vertices.size(); ++v) {
    if (const ArrowId* a = std::get_if<ArrowId>(&og.vertices[v]))
      out << "  v" << v << " [shape=box,label=" << quote(g.name(*a)) << "];\n";
    else
      out << "  v" << v << " [label=" << quote(describe(g, std::get<NormalForm>(og.vertices[v])))
          << (og.root && *og.root == v ? ",peripheries=2" : "") << "];\n";
  }
  for (auto [a, b] : og.edges) {
    const bool from_source = std::holds_alternative<ArrowId>(og.vertices[a]);
    out << "  v" << a << " -> v" << b << " [style=" << style(from_source ? Polarity::Target : Polarity::Source) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace opetope::io
