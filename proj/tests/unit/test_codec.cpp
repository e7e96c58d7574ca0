#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "opetope/axioms/axioms.hpp"
#include "opetope/calculus/calculus.hpp"
#include "opetope/codec/codec.hpp"
#include "opetope/codec/shape.hpp"
#include "opetope/constructions/constructions.hpp"

using namespace opetope;
namespace fx = opetope::fixtures;
using T = DecoratedTree;

namespace {

const std::string kArr = "{nd(o)()}";
const std::string kTri1 = "{nd({nd(o)()})(lf)}";
const std::string kTri2 = "{nd({nd(o)()})(nd({nd(o)()})(lf))}";

}  // namespace

TEST_CASE("codes of the fixtures") {
  CHECK(encode(fx::pt()).text == "o");
  CHECK(encode(fx::arr()).text == kArr);
  CHECK(encode(fx::loop()).text == "{deg(o)}");
  CHECK(encode(fx::tri(1)).text == kTri1);
  CHECK(encode(fx::tri(2)).text == kTri2);
  CHECK(encode(fx::op3()).text == "{nd(" + kTri2 + ")(lf,lf)}");
}

TEST_CASE("decode inverts encode") {
  for (const fx::Named& f : fx::all()) {
    CAPTURE(f.name);
    OpetopeCode c = encode(f.opetope);
    Opetope back = decode(c);
    CHECK(check_opetopic(back.graph).ok());
    CHECK(is_opetope(back.graph) == back.top);
    CHECK(encode(back) == c);
    CHECK(find_isomorphism(back.graph, f.opetope.graph).has_value());
    CHECK(cell_count(c) == f.opetope.graph.cell_count());
    CHECK(code_degree(c) == f.opetope.degree());
  }
}

TEST_CASE("pasting diagram trees") {
  CHECK(render(pd_to_tree(shift(fx::tri(2)))) == "nd(" + kTri2 + ")(lf,lf)");
  CHECK(render(pd_to_tree(degen(fx::arr()))) == "deg(" + kArr + ")");
  CHECK(pd_code(tree_to_pd(T::node(OpetopeCode{kArr}, {T::leaf()}))) == pd_code(shift(fx::arr())));
  CHECK(pd_code(tree_to_pd(T::degenerate(OpetopeCode{"o"}))) == pd_code(degen(fx::pt())));

  PastingDiagram a = shift(fx::tri(2));
  std::map<CellId, PastingDiagram> b;
  b.emplace(a.graph.cell_named("a1"), shift(fx::tri(1)));
  b.emplace(a.graph.cell_named("a2"), degen(fx::arr()));
  CHECK(pd_code(graft(a, b).pd) == "nd(" + kTri2 + ")(lf,nd(" + kTri1 + ")(lf))");

  T base = T::node(OpetopeCode{kTri2}, {T::node(OpetopeCode{kTri2}, {T::leaf(), T::leaf()}),
                                        T::node(OpetopeCode{kTri1}, {T::leaf()})});
  CHECK(render(pd_to_tree(tree_to_pd(base))) == render(base));
  CHECK(base.node_count() == 3);
}

TEST_CASE("tree_to_pd rejects arity mismatches") {
  CHECK_THROWS(tree_to_pd(T::node(OpetopeCode{kArr}, {})));
  CHECK_THROWS(tree_to_pd(T::node(OpetopeCode{kTri2}, {T::leaf()})));
}

TEST_CASE("parsing") {
  DecoratedTree t = parse_tree("nd(" + kTri2 + ")(lf,nd(" + kTri1 + ")(lf))");
  CHECK(t.kind == T::Kind::Node);
  CHECK(t.node_count() == 2);
  CHECK(render(t) == "nd(" + kTri2 + ")(lf,nd(" + kTri1 + ")(lf))");
  CHECK(parse_code("{deg(o)}").text == "{deg(o)}");
  CHECK(code_degree(OpetopeCode{"{deg(o)}"}) == 2);
  try {
    parse_code("{nd(o)(}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() >= 7);
  }
  CHECK_THROWS_AS(parse_code("x"), ParseError);
  CHECK_THROWS_AS(parse_code("{deg(o)} trailing"), ParseError);
}

TEST_CASE("shapes") {
  const Opetope t = fx::tri(2);
  CHECK(shape_of(t.graph, t.graph.cell_named("a1")).text == kArr);
  const Opetope w = fx::op3();
  CHECK(shape_of(w.graph, w.graph.cell_named("p0")).text == "o");
  for (const fx::Named& f : fx::all()) CHECK(shape_of(f.opetope.graph, f.opetope.top) == encode(f.opetope));

  CHECK(target_shape(OpetopeCode{kArr}).text == "o");
  for (int m = 0; m <= 3; ++m) CHECK(target_shape(encode(fx::tri(m))).text == kArr);
  CHECK(target_shape(encode(opetope_of_pd(shift(t)))).text == kTri2);

  std::vector<OpetopeCode> sources = source_shapes(encode(w));
  REQUIRE(sources.size() == 1);
  CHECK(sources.front().text == kTri2);
  CHECK(source_shapes(encode(fx::tri(3))).size() == 3);
  CHECK(source_shapes(encode(fx::loop())).empty());
}

TEST_CASE("canonical relabelling and the unique isomorphism") {
  for (const fx::Named& f : fx::all()) {
    CAPTURE(f.name);
    Opetope r = canonical_relabel(f.opetope);
    CHECK(encode(r) == encode(f.opetope));
    std::optional<Morphism> iso = opetope_isomorphism(f.opetope, r);
    REQUIRE(iso.has_value());
    CHECK(validate_morphism(f.opetope.graph, r.graph, *iso).empty());
  }
  CHECK_FALSE(opetope_isomorphism(fx::tri(1), fx::tri(2)).has_value());
}

TEST_CASE("tree order of a pasting diagram") {
  PastingDiagram p = tree_to_pd(T::node(OpetopeCode{kTri2}, {T::leaf(), T::node(OpetopeCode{kTri1}, {T::leaf()})}));
  std::vector<CellId> tops = top_cells_in_tree_order(p);
  REQUIRE(tops.size() == 2);
  CHECK(shape_of(p.graph, tops[0]).text == kTri2);
  CHECK(shape_of(p.graph, tops[1]).text == kTri1);
  CHECK(leaves_in_tree_order(p).size() == 2);
}

TEST_CASE("diamond families") {
  const Opetope t = fx::tri(2);
  const OpetopicGraph& g = t.graph;
  std::map<std::string, DiamondFamily> at;
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
    const Diamond& d = g.diamond(DiamondId{i});
    at[g.name(g.arrow(d.het_inner).dom)] = classify_diamond(g, DiamondId{i});
  }
  CHECK(at.at("p1") == DiamondFamily::Inner);
  CHECK(at.at("p0") == DiamondFamily::Glob2);
  CHECK(at.at("p2") == DiamondFamily::Glob1);
  const Opetope l = fx::loop();
  CHECK(classify_diamond(l.graph, DiamondId{0}) == DiamondFamily::Degen);
  CHECK(to_string(DiamondFamily::Glob1) == "Glob1");
}

TEST_CASE("polynomial trees") {
  PolyTree t = poly_tree_of_pd(shift(fx::tri(2)));
  CHECK(t.colors.size() == 3);
  CHECK(t.nodes.size() == 1);
  CHECK(check_polynomial_tree(t).ok());

  PolyTree merged = poly_tree_of_pd(tree_to_pd(T::node(OpetopeCode{kTri2}, {T::leaf(), T::node(OpetopeCode{kTri1}, {T::leaf()})})));
  REQUIRE(merged.nodes.size() == 2);
  merged.nodes[1].target = merged.nodes[0].target;
  CHECK(check_polynomial_tree(merged).failed("PT2"));

  PolyTree forest;
  forest.colors = {"x", "y", "u", "v"};
  forest.nodes = {{"f", {"x"}, "u"}, {"g", {"y"}, "v"}};
  CHECK(check_polynomial_tree(forest).failed("PT3"));
}

TEST_CASE("polynomial fragments") {
  PolyFragment f = poly_fragment({encode(fx::tri(0)), encode(fx::tri(1)), encode(fx::tri(2))});
  REQUIRE(f.colors.size() == 1);
  CHECK(f.colors.front().text == kArr);
  std::vector<std::size_t> arities;
  for (const PolyFragment::Node& n : f.nodes) arities.push_back(n.inputs.size());
  std::sort(arities.begin(), arities.end());
  CHECK(arities == std::vector<std::size_t>{0, 1, 2});

  CHECK(poly_fragment({}).nodes.empty());

  PolyFragment w = poly_fragment({encode(fx::op3())});
  REQUIRE(w.nodes.size() == 1);
  REQUIRE(w.nodes.front().inputs.size() == 1);
  CHECK(w.nodes.front().inputs.front().text == kTri2);
}

TEST_CASE("polynomial unit and multiplication") {
  for (int m = 0; m <= 3; ++m) {
    OpetopeCode op = encode(fx::tri(m));
    std::vector<OpetopeCode> units;
    for (const OpetopeCode& s : source_shapes(op)) units.push_back(poly_unit(s));
    CHECK(poly_multiply(op, units) == op);
    CHECK(poly_multiply(poly_unit(target_shape(op)), {op}) == op);
  }
  OpetopeCode w = encode(fx::op3());
  CHECK(poly_unit(OpetopeCode{kTri2}) == w);
  CHECK(poly_multiply(encode(fx::tri(2)), {encode(fx::tri(1)), encode(fx::tri(0))}) == encode(fx::tri(1)));
}
