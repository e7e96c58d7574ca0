#include "opetope/codec/codec.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "opetope/calculus/calculus.hpp"
#include "opetope/codec/shape.hpp"
#include "opetope/constructions/constructions.hpp"

namespace opetope {

std::size_t DecoratedTree::node_count() const {
  std::size_t n = kind == Kind::Node ? 1 : 0;
  for (const DecoratedTree& t : inputs) n += t.node_count();
  return n;
}

std::string render(const DecoratedTree& t) {
  switch (t.kind) {
    case DecoratedTree::Kind::Leaf:
      return "lf";
    case DecoratedTree::Kind::Degenerate:
      return "deg(" + t.decoration.text + ")";
    case DecoratedTree::Kind::Node: {
      std::string out = "nd(" + t.decoration.text + ")(";
      for (std::size_t i = 0; i < t.inputs.size(); ++i) out += (i ? "," : "") + render(t.inputs[i]);
      return out + ")";
    }
  }
  return {};
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  std::string code() {
    std::size_t start = pos_;
    if (peek() == 'o') {
      ++pos_;
    } else {
      expect("{");
      tree(false);
      expect("}");
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  DecoratedTree tree(bool allow_leaf) {
    if (allow_leaf && starts("lf")) {
      pos_ += 2;
      return DecoratedTree::leaf();
    }
    if (starts("deg(")) {
      pos_ += 4;
      std::string c = code();
      expect(")");
      return DecoratedTree::degenerate(OpetopeCode{c});
    }
    expect("nd(");
    std::string c = code();
    expect(")(");
    std::vector<DecoratedTree> inputs;
    if (peek() != ')') {
      inputs.push_back(tree(true));
      while (peek() == ',') {
        ++pos_;
        inputs.push_back(tree(true));
      }
    }
    expect(")");
    for (const DecoratedTree& t : inputs)
      if (t.kind == DecoratedTree::Kind::Degenerate) error("a degenerate tree cannot be an input");
    return DecoratedTree::node(OpetopeCode{c}, std::move(inputs));
  }

  void finish() {
    if (pos_ != s_.size()) error("trailing characters");
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool starts(std::string_view t) const { return s_.substr(pos_, t.size()) == t; }
  void expect(std::string_view t) {
    if (!starts(t)) error("expected '" + std::string(t) + "'");
    pos_ += t.size();
  }
  [[noreturn]] void error(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int tree_degree(const DecoratedTree& t) {
  return t.kind == DecoratedTree::Kind::Degenerate ? code_degree(t.decoration) + 2 : code_degree(t.decoration) + 1;
}

}  // namespace

DecoratedTree parse_tree(std::string_view text) {
  TreeParser p(text);
  DecoratedTree t = p.tree(false);
  p.finish();
  return t;
}

OpetopeCode parse_code(std::string_view text) {
  TreeParser p(text);
  std::string c = p.code();
  p.finish();
  return OpetopeCode{c};
}

int code_degree(const OpetopeCode& code) {
  if (code.text == "o") return 0;
  if (code.text.size() < 2 || code.text.front() != '{' || code.text.back() != '}')
    throw ParseError("not an opetope code", 1, 1);
  return tree_degree(parse_tree(std::string_view(code.text).substr(1, code.text.size() - 2)));
}

namespace {

struct TreeWalk {
  const PastingDiagram& p;
  ShapeAnalysis shapes;
  std::vector<CellId> order;
  std::vector<CellId> leaves;

  explicit TreeWalk(const PastingDiagram& pd) : p(pd), shapes(pd.graph) {}

  std::optional<CellId> node_above(CellId z) {
    for (ArrowId a : p.graph.arrows_from(z)) {
      const GenArrow& ga = p.graph.arrow(a);
      if (ga.polarity == Polarity::Target && p.graph.degree(ga.cod) == p.n) return ga.cod;
    }
    return std::nullopt;
  }

  DecoratedTree build(CellId y) {
    if (order.size() > p.graph.cell_count()) throw ShapeError("the diagram's tree has a cycle");
    order.push_back(y);
    DecoratedTree t = DecoratedTree::node(OpetopeCode{shapes.code(y)});
    for (ArrowId s : shapes.canonical_sources(y)) {
      CellId z = p.graph.arrow(s).dom;
      if (p.is_leaf(z)) {
        leaves.push_back(z);
        t.inputs.push_back(DecoratedTree::leaf());
      } else if (auto w = node_above(z)) {
        t.inputs.push_back(build(*w));
      } else {
        throw ShapeError("cell " + p.graph.name(z) + " is neither a leaf nor the output of a node");
      }
    }
    return t;
  }

  DecoratedTree run() {
    auto tops = p.top_cells();
    if (p.n == 0) {
      if (tops.size() != 1) throw ShapeError("a 0-pasting diagram has exactly one cell");
      order = tops;
      return DecoratedTree::node(OpetopeCode{"o"});
    }
    CellId r = root_object(p);
    if (tops.empty()) {
      leaves.push_back(r);
      return DecoratedTree::degenerate(OpetopeCode{shapes.code(r)});
    }
    auto y = node_above(r);
    if (!y) throw ShapeError("no node sits on the root object");
    DecoratedTree t = build(*y);
    if (order.size() != tops.size()) throw ShapeError("the diagram's top cells do not form one tree");
    return t;
  }
};

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const Opetope>>& decode_cache() {
  static std::map<std::string, std::shared_ptr<const Opetope>> cache;
  return cache;
}

std::shared_ptr<const Opetope> decode_shared(const OpetopeCode& code) {
  {
    std::lock_guard lock(cache_mutex);
    auto it = decode_cache().find(code.text);
    if (it != decode_cache().end()) return it->second;
  }
  Opetope x;
  if (code.text == "o") {
    x.top = x.graph.add_cell("c0", 0);
  } else {
    parse_code(code.text);
    DecoratedTree t = parse_tree(std::string_view(code.text).substr(1, code.text.size() - 2));
    x = opetope_of_pd(tree_to_pd(t));
  }
  auto shared = std::make_shared<const Opetope>(std::move(x));
  std::lock_guard lock(cache_mutex);
  return decode_cache().emplace(code.text, shared).first->second;
}

}  // namespace

DecoratedTree pd_to_tree(const PastingDiagram& p) { return TreeWalk(p).run(); }

std::string pd_code(const PastingDiagram& p) { return render(pd_to_tree(p)); }

std::vector<CellId> top_cells_in_tree_order(const PastingDiagram& p) {
  TreeWalk w(p);
  w.run();
  return w.order;
}

std::vector<CellId> leaves_in_tree_order(const PastingDiagram& p) {
  TreeWalk w(p);
  w.run();
  return w.leaves;
}

PastingDiagram tree_to_pd(const DecoratedTree& t) {
  switch (t.kind) {
    case DecoratedTree::Kind::Leaf:
      throw ShapeError("a leaf on its own is not a pasting diagram");
    case DecoratedTree::Kind::Degenerate:
      return degen(decode(t.decoration));
    case DecoratedTree::Kind::Node:
      break;
  }
  std::shared_ptr<const Opetope> x = decode_shared(t.decoration);
  ShapeAnalysis shapes(x->graph);
  const std::vector<ArrowId>& sources = shapes.canonical_sources(x->top);
  if (sources.size() != t.inputs.size())
    throw ShapeError("node decorated by " + t.decoration.text + " needs " + std::to_string(sources.size()) +
                     " inputs, got " + std::to_string(t.inputs.size()));
  PastingDiagram base = shift(*x);
  std::map<CellId, PastingDiagram> parts;
  for (std::size_t i = 0; i < sources.size(); ++i)
    if (t.inputs[i].kind == DecoratedTree::Kind::Node) parts.emplace(x->graph.arrow(sources[i]).dom, tree_to_pd(t.inputs[i]));
  if (parts.empty()) return base;
  return graft(base, parts).pd;
}

OpetopeCode encode(const Opetope& x) {
  ShapeAnalysis shapes(x.graph);
  return OpetopeCode{shapes.code(x.top)};
}

Opetope decode(const OpetopeCode& code) { return *decode_shared(code); }

OpetopeCode shape_of(const OpetopicGraph& g, CellId x) {
  ShapeAnalysis shapes(g);
  return OpetopeCode{shapes.code(x)};
}

OpetopeCode target_shape(const OpetopeCode& code) {
  auto x = decode_shared(code);
  if (x->degree() == 0) throw ShapeError("a point has no target");
  ShapeAnalysis shapes(x->graph);
  return OpetopeCode{shapes.code(x->graph.arrow(shapes.target_of(x->top)).dom)};
}

std::vector<OpetopeCode> source_shapes(const OpetopeCode& code) {
  auto x = decode_shared(code);
  ShapeAnalysis shapes(x->graph);
  std::vector<OpetopeCode> out;
  for (ArrowId s : shapes.canonical_sources(x->top)) out.push_back(OpetopeCode{shapes.code(x->graph.arrow(s).dom)});
  return out;
}

std::size_t cell_count(const OpetopeCode& code) { return decode_shared(code)->graph.cell_count(); }

std::string_view to_string(DiamondFamily f) noexcept {
  switch (f) {
    case DiamondFamily::Inner:
      return "Inner";
    case DiamondFamily::Glob1:
      return "Glob1";
    case DiamondFamily::Glob2:
      return "Glob2";
    case DiamondFamily::Degen:
      return "Degen";
  }
  return "?";
}

DiamondFamily classify_diamond(const OpetopicGraph& g, DiamondId id) {
  const Diamond& d = g.diamond(id);
  auto s = [&](ArrowId a) { return g.arrow(a).polarity == Polarity::Source; };
  const bool f1 = s(d.het_outer), g1 = s(d.het_inner), f2 = s(d.hom_outer), g2 = s(d.hom_inner);
  if (f1 && !g1 && f2 && g2) return DiamondFamily::Inner;
  if (f1 && !g1 && !f2 && !g2) return DiamondFamily::Glob1;
  if (!f1 && g1 && f2 && g2) return DiamondFamily::Glob2;
  if (!f1 && g1 && !f2 && !g2) return DiamondFamily::Degen;
  throw ShapeError("diamond " + describe_pair(g, d.het_outer, d.het_inner) + " has no family");
}

AxiomReport check_polynomial_tree(const PolyTree& t) {
  AxiomReport report;
  AxiomResult& pt1 = report.add("PT1");
  pt1.note = std::to_string(t.colors.size()) + " colours, " + std::to_string(t.nodes.size()) + " nodes";
  AxiomResult& pt2 = report.add("PT2");
  AxiomResult& pt3 = report.add("PT3");
  std::map<std::string, std::size_t> color_index;
  for (const std::string& c : t.colors) color_index.emplace(c, color_index.size());
  std::map<std::string, int> as_target, as_input;
  bool known = true;
  for (const PolyTree::Node& n : t.nodes) {
    for (const std::string& c : n.inputs) {
      if (!color_index.contains(c)) known = false;
      as_input[c]++;
    }
    if (!color_index.contains(n.target)) known = false;
    as_target[n.target]++;
  }
  if (!known) {
    pt2.status = Status::Fail;
    pt2.witnesses.push_back("a node refers to an unknown colour");
    return report;
  }
  for (const auto& [c, k] : as_target)
    if (k > 1) pt2.status = Status::Fail, pt2.witnesses.push_back("colour " + c + " is the output of " + std::to_string(k) + " nodes");
  for (const auto& [c, k] : as_input)
    if (k > 1) pt2.status = Status::Fail, pt2.witnesses.push_back("colour " + c + " is an input " + std::to_string(k) + " times");

  const std::size_t nc = t.colors.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    for (const std::string& c : t.nodes[i].inputs) edges.emplace_back(color_index[c], nc + i);
    edges.emplace_back(nc + i, color_index[t.nodes[i].target]);
  }
  std::vector<std::size_t> roots;
  for (const std::string& c : t.colors)
    if (!as_input.contains(c)) roots.push_back(color_index[c]);
  if (roots.size() != 1) {
    pt3.status = Status::Fail;
    pt3.witnesses.push_back(std::to_string(roots.size()) + " colours are not inputs of any node");
  } else if (auto defect = tree_defect(nc + t.nodes.size(), edges, roots.front())) {
    pt3.status = Status::Fail;
    pt3.witnesses.push_back(*defect);
  }
  return report;
}

PolyTree poly_tree_of_pd(const PastingDiagram& p) {
  PolyTree t;
  ShapeAnalysis shapes(p.graph);
  for (CellId c : p.graph.cells_of_degree(p.n - 1)) t.colors.push_back(p.graph.name(c));
  for (CellId y : p.top_cells()) {
    PolyTree::Node n{p.graph.name(y), {}, p.graph.name(p.graph.arrow(shapes.target_of(y)).dom)};
    for (ArrowId s : shapes.canonical_sources(y)) n.inputs.push_back(p.graph.name(p.graph.arrow(s).dom));
    t.nodes.push_back(std::move(n));
  }
  return t;
}

PolyFragment poly_fragment(const std::vector<OpetopeCode>& operations) {
  PolyFragment f;
  std::set<OpetopeCode> colors;
  for (const OpetopeCode& op : operations) {
    PolyFragment::Node n{op, source_shapes(op), target_shape(op)};
    colors.insert(n.inputs.begin(), n.inputs.end());
    colors.insert(n.target);
    f.nodes.push_back(std::move(n));
  }
  f.colors.assign(colors.begin(), colors.end());
  return f;
}

OpetopeCode poly_unit(const OpetopeCode& color) { return encode(opetope_of_pd(shift(decode(color)))); }

OpetopeCode poly_multiply(const OpetopeCode& operation, const std::vector<OpetopeCode>& per_input) {
  Opetope x = decode(operation);
  PastingDiagram horn = source_horn(boundary(x));
  ShapeAnalysis shapes(x.graph);
  const std::vector<ArrowId>& sources = shapes.canonical_sources(x.top);
  if (sources.size() != per_input.size()) throw ShapeError("one operation is needed per input");
  std::map<CellId, PastingDiagram> parts;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    CellId cell = horn.graph.cell_named(x.graph.name(x.graph.arrow(sources[i]).dom));
    parts.emplace(cell, source_horn(boundary(decode(per_input[i]))));
  }
  return encode(opetope_of_pd(subst(horn, parts).pd));
}

}  // namespace opetope
