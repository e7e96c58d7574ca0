#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "opetope/calculus/calculus.hpp"
#include "opetope/constructions/constructions.hpp"
#include "opetope/io/document.hpp"
#include "opetope/io/render.hpp"

using namespace opetope;
namespace fx = opetope::fixtures;
namespace fs = std::filesystem;

namespace {

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const fs::path data_dir{OPETOPE_TEST_DATA};

std::string replace_once(std::string s, const std::string& from, const std::string& to) {
  std::size_t at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("fixture documents round trip byte for byte") {
  std::size_t files = 0;
  for (const fs::directory_entry& e : fs::directory_iterator(data_dir)) {
    if (e.path().extension() != ".ost") continue;
    CAPTURE(e.path().filename().string());
    std::string text = read(e.path());
    CHECK(io::serialize(io::parse_document(text)) == text);
    ++files;
  }
  CHECK(files >= 10);
}

TEST_CASE("serialized fixtures load back as the same opetope") {
  for (const fx::Named& f : fx::all()) {
    CAPTURE(f.name);
    std::string text = io::serialize(io::Document{f.opetope.graph});
    io::Document back = io::parse_document(text);
    CHECK(back.kind() == io::DocumentKind::OpetopicSet);
    CHECK(encode(io::as_opetope(back)) == encode(f.opetope));
    CHECK(io::serialize(back) == text);
  }
}

TEST_CASE("every document kind round trips") {
  const Opetope t = fx::tri(2);
  Slice s = slice(t.graph, t.graph.cell_named("a1"));
  std::vector<io::Document> docs{
      io::Document{t.graph},
      io::Document{boundary(t)},
      io::Document{shift(t)},
      io::Document{encode(t)},
      io::Document{io::MorphismDocument{s.opetope.graph, t.graph, s.projection}},
  };
  for (const io::Document& d : docs) {
    CAPTURE(std::string(io::to_string(d.kind())));
    std::string text = io::serialize(d);
    io::Document back = io::parse_document(text);
    CHECK(back.kind() == d.kind());
    CHECK(io::serialize(back) == text);
  }
  io::Document m = io::parse_document(io::serialize(docs.back()));
  const auto& md = std::get<io::MorphismDocument>(m.payload);
  CHECK(validate_morphism(md.source, md.target, md.map).empty());
}

TEST_CASE("an opetope code document decodes") {
  io::Document d = io::load_document(data_dir / "loop_code.ost");
  CHECK(d.kind() == io::DocumentKind::OpetopeCode);
  CHECK(encode(io::as_opetope(d)) == encode(fx::loop()));
}

TEST_CASE("duplicate ids are parse errors naming the id") {
  std::string text = read(data_dir / "tri1.ost");
  std::string dup = replace_once(text, "{\"id\": \"p1\", \"degree\": 0}", "{\"id\": \"p0\", \"degree\": 0}");
  try {
    io::parse_document(dup);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("p0") != std::string::npos);
    CHECK(e.line() == 6);
  }
}

TEST_CASE("malformed documents") {
  std::string text = read(data_dir / "arr.ost");
  CHECK_THROWS_AS(io::parse_document(replace_once(text, "\"kind\"", "\"extra\": 1,\n  \"kind\"")), ParseError);
  CHECK_THROWS_AS(io::parse_document(replace_once(text, "\"format_version\": \"1\"", "\"format_version\": \"2\"")),
                  io::VersionError);
  CHECK_THROWS_AS(io::parse_document(replace_once(text, "\"dom\": \"s\"", "\"dom\": \"nowhere\"")), ParseError);
  CHECK_THROWS_AS(io::parse_document(replace_once(text, "\"polarity\": \"source\"", "\"polarity\": \"sideways\"")),
                  ParseError);
  try {
    io::parse_document("{\n  \"format_version\": \"1\",\n  \"kind\": \n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(io::load_document(data_dir / "missing.ost"), io::FileError);
}

TEST_CASE("documents save and load") {
  fs::path out = fs::temp_directory_path() / "opetope_io_test.ost";
  io::Document d{shift(fx::tri(3))};
  io::save_document(out, d);
  CHECK(io::serialize(io::load_document(out)) == io::serialize(d));
  CHECK(pd_code(io::as_pasting_diagram(io::load_document(out))) == pd_code(shift(fx::tri(3))));
  fs::remove(out);
}

TEST_CASE("as_opetope refuses graphs without a terminal cell") {
  CHECK_THROWS(io::as_opetope(io::load_document(data_dir / "hole.ost")));
}

TEST_CASE("renderers") {
  DecoratedTree t = pd_to_tree(shift(fx::tri(2)));
  std::string ascii = io::ascii_tree(t);
  CHECK(ascii.find(encode(fx::tri(2)).text) != std::string::npos);
  CHECK(std::count(ascii.begin(), ascii.end(), '\n') == 3);
  CHECK(io::dot_tree(t).rfind("digraph", 0) == 0);

  std::string g = io::dot_graph(fx::tri(1).graph);
  CHECK(g.find("style=dashed") != std::string::npos);
  CHECK(g.find("style=solid") != std::string::npos);
  CHECK(io::dot_pdgraph(shift(fx::tri(2))).rfind("digraph", 0) == 0);
  CHECK(io::dot_ograph(fx::tri(2).graph, fx::tri(2).top).rfind("digraph", 0) == 0);
}
