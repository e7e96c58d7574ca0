#include "opetope/io/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "opetope/axioms/axioms.hpp"
#include "opetope/constructions/constructions.hpp"

namespace opetope::io {

using Json = nlohmann::ordered_json;

std::string_view to_string(DocumentKind k) noexcept {
  switch (k) {
    case DocumentKind::OpetopicSet: return "opetopic_set";
    case DocumentKind::Boundary: return "boundary";
    case DocumentKind::PastingDiagram: return "pasting_diagram";
    case DocumentKind::OpetopeCode: return "opetope_code";
    case DocumentKind::Morphism: return "morphism";
  }
  return "?";
}

namespace {

// Errors found after the JSON layer are located by searching for the
// offending token in the source text.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail_at(std::size_t offset, const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  [[noreturn]] void fail_near(const std::string& token, const std::string& what, std::size_t occurrence = 1) const {
    std::size_t pos = std::string_view::npos, from = 0;
    for (std::size_t k = 0; k < occurrence; ++k) {
      std::size_t found = text_.find(token, from);
      if (found == std::string_view::npos) break;
      pos = found;
      from = found + 1;
    }
    fail_at(pos == std::string_view::npos ? 0 : pos, what);
  }

  [[noreturn]] void fail_key(const std::string& key, const std::string& what) const { fail_near(quoted(key), what); }

  static std::string quoted(const std::string& s) { return Json(s).dump(); }

  void allow_only(const Json& obj, std::initializer_list<std::string_view> keys, const std::string& where) const {
    if (!obj.is_object()) fail_key(where, where + " must be an object");
    for (const auto& [k, v] : obj.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) fail_key(k, "unknown field \"" + k + "\" in " + where);
  }

  const Json& field(const Json& obj, const std::string& key, const std::string& where) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail_key(where, "missing field \"" + key + "\" in " + where);
    return *it;
  }

  std::string string_field(const Json& obj, const std::string& key, const std::string& where) const {
    const Json& v = field(obj, key, where);
    if (!v.is_string()) fail_key(key, "field \"" + key + "\" must be a string");
    return v.get<std::string>();
  }

  int int_field(const Json& obj, const std::string& key, const std::string& where) const {
    const Json& v = field(obj, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0) fail_key(key, "field \"" + key + "\" must be a natural number");
    return v.get<int>();
  }

  const Json& array_field(const Json& obj, const std::string& key, const std::string& where) const {
    const Json& v = field(obj, key, where);
    if (!v.is_array()) fail_key(key, "field \"" + key + "\" must be an array");
    return v;
  }

  OpetopicGraph graph(const Json& obj, const std::string& where) const {
    OpetopicGraph g;
    std::map<std::string, std::size_t> seen_cells;
    for (const Json& c : array_field(obj, "cells", where)) {
      allow_only(c, {"id", "degree"}, "cell");
      std::string id = string_field(c, "id", "cell");
      if (++seen_cells[id] > 1) fail_near(quoted(id), "duplicate cell id \"" + id + "\"", 2);
      g.add_cell(id, int_field(c, "degree", "cell"));
    }
    std::set<std::string> seen_arrows;
    for (const Json& a : array_field(obj, "arrows", where)) {
      allow_only(a, {"id", "dom", "cod", "polarity"}, "arrow");
      std::string id = string_field(a, "id", "arrow");
      if (!seen_arrows.insert(id).second) fail_near(quoted(id), "duplicate arrow id \"" + id + "\"", 2);
      CellId dom = cell(g, string_field(a, "dom", "arrow"));
      CellId cod = cell(g, string_field(a, "cod", "arrow"));
      std::string pol = string_field(a, "polarity", "arrow");
      if (pol != "source" && pol != "target") fail_near(quoted(pol), "polarity must be \"source\" or \"target\"");
      g.add_arrow(id, dom, cod, pol == "source" ? Polarity::Source : Polarity::Target);
    }
    for (const Json& d : array_field(obj, "diamonds", where)) {
      allow_only(d, {"het", "hom"}, "diamond");
      auto pair = [&](const std::string& key) {
        const Json& p = array_field(d, key, "diamond");
        if (p.size() != 2 || !p[0].is_string() || !p[1].is_string())
          fail_key(key, "\"" + key + "\" must list two arrow ids, outer first");
        return std::pair{arrow(g, p[0].get<std::string>()), arrow(g, p[1].get<std::string>())};
      };
      auto [ho, hi] = pair("het");
      auto [mo, mi] = pair("hom");
      g.add_diamond(Diamond{ho, hi, mo, mi});
    }
    return g;
  }

  CellId cell(const OpetopicGraph& g, const std::string& id) const {
    auto c = g.find_cell(id);
    if (!c) fail_near(quoted(id), "unknown cell \"" + id + "\"");
    return *c;
  }

  ArrowId arrow(const OpetopicGraph& g, const std::string& id) const {
    auto a = g.find_arrow(id);
    if (!a) fail_near(quoted(id), "unknown arrow \"" + id + "\"");
    return *a;
  }

  std::vector<CellId> cell_list(const OpetopicGraph& g, const Json& obj, const std::string& key) const {
    std::vector<CellId> out;
    for (const Json& v : array_field(obj, key, "document")) {
      if (!v.is_string()) fail_key(key, "\"" + key + "\" must list cell ids");
      out.push_back(cell(g, v.get<std::string>()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::string_view text_;
};

Json graph_json(const OpetopicGraph& g) {
  std::vector<CellId> cells;
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) cells.push_back(CellId{i});
  std::sort(cells.begin(), cells.end(), [&](CellId a, CellId b) {
    return std::pair{g.degree(a), g.name(a)} < std::pair{g.degree(b), g.name(b)};
  });
  std::vector<ArrowId> arrows;
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) arrows.push_back(ArrowId{i});
  std::sort(arrows.begin(), arrows.end(), [&](ArrowId a, ArrowId b) { return g.name(a) < g.name(b); });
  std::vector<DiamondId> diamonds;
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) diamonds.push_back(DiamondId{i});
  auto key = [&](DiamondId d) {
    const Diamond& dm = g.diamond(d);
    return std::pair{g.name(dm.het_outer), g.name(dm.het_inner)};
  };
  std::sort(diamonds.begin(), diamonds.end(), [&](DiamondId a, DiamondId b) { return key(a) < key(b); });

  Json out = Json::object();
  out["cells"] = Json::array();
  for (CellId c : cells) out["cells"].push_back(Json{{"id", g.name(c)}, {"degree", g.degree(c)}});
  out["arrows"] = Json::array();
  for (ArrowId a : arrows) {
    const GenArrow& ga = g.arrow(a);
    out["arrows"].push_back(
        Json{{"id", ga.name}, {"dom", g.name(ga.dom)}, {"cod", g.name(ga.cod)}, {"polarity", to_string(ga.polarity)}});
  }
  out["diamonds"] = Json::array();
  for (DiamondId d : diamonds) {
    const Diamond& dm = g.diamond(d);
    out["diamonds"].push_back(Json{{"het", {g.name(dm.het_outer), g.name(dm.het_inner)}},
                                   {"hom", {g.name(dm.hom_outer), g.name(dm.hom_inner)}}});
  }
  return out;
}

Json names(const OpetopicGraph& g, std::vector<CellId> cells) {
  std::vector<std::string> out;
  for (CellId c : cells) out.push_back(g.name(c));
  std::sort(out.begin(), out.end());
  return Json(out);
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

bool is_flat(const Json& v) {
  if (is_scalar(v)) return true;
  if (v.is_array()) return std::all_of(v.begin(), v.end(), is_scalar);
  for (const auto& [k, x] : v.items())
    if (!(is_scalar(x) || (x.is_array() && std::all_of(x.begin(), x.end(), is_scalar)))) return false;
  return true;
}

void write_inline(std::ostream& out, const Json& v) {
  if (is_scalar(v)) {
    out << v.dump();
  } else if (v.is_array()) {
    out << '[';
    bool first = true;
    for (const Json& x : v) {
      out << (first ? "" : ", ");
      write_inline(out, x);
      first = false;
    }
    out << ']';
  } else {
    out << '{';
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      out << (first ? "" : ", ") << Json(k).dump() << ": ";
      write_inline(out, x);
      first = false;
    }
    out << '}';
  }
}

void write_block(std::ostream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_array()) {
    if (v.empty() || std::all_of(v.begin(), v.end(), is_scalar)) {
      write_inline(out, v);
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << pad;
      if (is_flat(v[i]))
        write_inline(out, v[i]);
      else
        write_block(out, v[i], indent + 2);
      out << (i + 1 < v.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << ']';
  } else if (v.is_object()) {
    if (v.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [k, x] : v.items()) {
      out << pad << Json(k).dump() << ": ";
      write_block(out, x, indent + 2);
      out << (++i < v.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << '}';
  } else {
    out << v.dump();
  }
}

}  // namespace

Document parse_document(std::string_view text) {
  Reader r(text);
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    r.fail_at(e.byte > 0 ? e.byte - 1 : 0, what);
  }
  if (!doc.is_object()) r.fail_at(0, "a document must be a JSON object");
  const std::string version = r.string_field(doc, "format_version", "document");
  if (version != format_version) throw VersionError(version);
  const std::string kind = r.string_field(doc, "kind", "document");

  if (kind == "opetopic_set") {
    r.allow_only(doc, {"format_version", "kind", "cells", "arrows", "diamonds"}, "document");
    return Document{r.graph(doc, "document")};
  }
  if (kind == "boundary") {
    r.allow_only(doc, {"format_version", "kind", "n", "cells", "arrows", "diamonds", "marks"}, "document");
    Boundary b{r.graph(doc, "document"), r.int_field(doc, "n", "document"), {}};
    for (const Json& m : r.array_field(doc, "marks", "document")) {
      r.allow_only(m, {"cell", "polarity"}, "mark");
      CellId c = r.cell(b.graph, r.string_field(m, "cell", "mark"));
      std::string pol = r.string_field(m, "polarity", "mark");
      if (pol != "source" && pol != "target") r.fail_near(Reader::quoted(pol), "polarity must be \"source\" or \"target\"");
      if (!b.marks.emplace(c, pol == "source" ? Polarity::Source : Polarity::Target).second)
        r.fail_near(Reader::quoted(b.graph.name(c)), "cell \"" + b.graph.name(c) + "\" is marked twice");
    }
    return Document{std::move(b)};
  }
  if (kind == "pasting_diagram") {
    r.allow_only(doc, {"format_version", "kind", "n", "cells", "arrows", "diamonds", "leaves", "roots"}, "document");
    PastingDiagram p{r.graph(doc, "document"), r.int_field(doc, "n", "document"), {}, {}};
    p.leaves = r.cell_list(p.graph, doc, "leaves");
    p.roots = r.cell_list(p.graph, doc, "roots");
    return Document{std::move(p)};
  }
  if (kind == "opetope_code") {
    r.allow_only(doc, {"format_version", "kind", "code"}, "document");
    std::string code = r.string_field(doc, "code", "document");
    try {
      return Document{parse_code(code)};
    } catch (const ParseError& e) {
      r.fail_near(Reader::quoted(code), std::string("bad opetope code: ") + e.what());
    }
  }
  if (kind == "morphism") {
    r.allow_only(doc, {"format_version", "kind", "source", "target", "cells", "arrows"}, "document");
    const Json& src = r.field(doc, "source", "document");
    const Json& tgt = r.field(doc, "target", "document");
    r.allow_only(src, {"cells", "arrows", "diamonds"}, "source");
    r.allow_only(tgt, {"cells", "arrows", "diamonds"}, "target");
    MorphismDocument m{r.graph(src, "source"), r.graph(tgt, "target"), {}};
    const Json& cells = r.field(doc, "cells", "document");
    const Json& arrows = r.field(doc, "arrows", "document");
    if (!cells.is_object() || !arrows.is_object()) r.fail_key("cells", "cell and arrow maps must be objects");
    m.map.cells.resize(m.source.cell_count());
    m.map.arrows.resize(m.source.arrow_count());
    for (std::uint32_t i = 0; i < m.source.cell_count(); ++i) {
      const std::string& name = m.source.name(CellId{i});
      auto it = cells.find(name);
      if (it == cells.end() || !it->is_string()) r.fail_key("cells", "cell map misses \"" + name + "\"");
      m.map.cells[i] = r.cell(m.target, it->get<std::string>());
    }
    for (std::uint32_t i = 0; i < m.source.arrow_count(); ++i) {
      const std::string& name = m.source.name(ArrowId{i});
      auto it = arrows.find(name);
      if (it == arrows.end() || !it->is_string()) r.fail_key("arrows", "arrow map misses \"" + name + "\"");
      m.map.arrows[i] = r.arrow(m.target, it->get<std::string>());
    }
    if (cells.size() != m.source.cell_count()) r.fail_key("cells", "cell map names cells outside the source");
    if (arrows.size() != m.source.arrow_count()) r.fail_key("arrows", "arrow map names arrows outside the source");
    return Document{std::move(m)};
  }
  r.fail_key(kind, "unknown document kind \"" + kind + "\"");
}

std::string serialize(const Document& doc) {
  Json out = Json::object();
  out["format_version"] = format_version;
  out["kind"] = to_string(doc.kind());
  auto add_graph = [&](const OpetopicGraph& g) {
    Json part = graph_json(g);
    for (auto& [k, v] : part.items()) out[k] = v;
  };
  switch (doc.kind()) {
    case DocumentKind::OpetopicSet:
      add_graph(std::get<OpetopicGraph>(doc.payload));
      break;
    case DocumentKind::Boundary: {
      const Boundary& b = std::get<Boundary>(doc.payload);
      out["n"] = b.n;
      add_graph(b.graph);
      std::vector<std::pair<std::string, Polarity>> marks;
      for (auto [c, p] : b.marks) marks.emplace_back(b.graph.name(c), p);
      std::sort(marks.begin(), marks.end());
      out["marks"] = Json::array();
      for (auto& [name, p] : marks) out["marks"].push_back(Json{{"cell", name}, {"polarity", to_string(p)}});
      break;
    }
    case DocumentKind::PastingDiagram: {
      const PastingDiagram& p = std::get<PastingDiagram>(doc.payload);
      out["n"] = p.n;
      add_graph(p.graph);
      out["leaves"] = names(p.graph, p.leaves);
      out["roots"] = names(p.graph, p.roots);
      break;
    }
    case DocumentKind::OpetopeCode:
      out["code"] = std::get<OpetopeCode>(doc.payload).text;
      break;
    case DocumentKind::Morphism: {
      const MorphismDocument& m = std::get<MorphismDocument>(doc.payload);
      out["source"] = graph_json(m.source);
      out["target"] = graph_json(m.target);
      std::map<std::string, std::string> cells, arrows;
      for (std::uint32_t i = 0; i < m.source.cell_count(); ++i)
        cells[m.source.name(CellId{i})] = m.target.name(m.map.cells[i]);
      for (std::uint32_t i = 0; i < m.source.arrow_count(); ++i)
        arrows[m.source.name(ArrowId{i})] = m.target.name(m.map.arrows[i]);
      out["cells"] = Json::object();
      for (auto& [k, v] : cells) out["cells"][k] = v;
      out["arrows"] = Json::object();
      for (auto& [k, v] : arrows) out["arrows"][k] = v;
      break;
    }
  }
  std::ostringstream s;
  write_block(s, out, 0);
  s << '\n';
  return s.str();
}

Document load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const std::filesystem::path& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path.string());
  out << serialize(doc);
}

Opetope as_opetope(const Document& doc) {
  switch (doc.kind()) {
    case DocumentKind::OpetopeCode:
      return decode(std::get<OpetopeCode>(doc.payload));
    case DocumentKind::OpetopicSet: {
      const OpetopicGraph& g = std::get<OpetopicGraph>(doc.payload);
      if (!check_opetopic(g).ok()) throw ConstructionError(ConstructionFailure::NotAnOpetope, "the document fails the axioms");
      auto top = is_opetope(g);
      if (!top) throw ConstructionError(ConstructionFailure::NotAnOpetope, "the document has no terminal cell");
      return Opetope{g, *top};
    }
    default:
      throw ConstructionError(ConstructionFailure::NotAnOpetope,
                              "a document of kind " + std::string(to_string(doc.kind())) + " does not describe an opetope");
  }
}

PastingDiagram as_pasting_diagram(const Document& doc) {
  if (doc.kind() != DocumentKind::PastingDiagram)
    throw ConstructionError(ConstructionFailure::NotAPastingDiagram,
                            "a document of kind " + std::string(to_string(doc.kind())) + " does not describe a pasting diagram");
  return std::get<PastingDiagram>(doc.payload);
}

const OpetopicGraph& graph_of(const Document& doc) {
  switch (doc.kind()) {
    case DocumentKind::OpetopicSet: return std::get<OpetopicGraph>(doc.payload);
    case DocumentKind::Boundary: return std::get<Boundary>(doc.payload).graph;
    case DocumentKind::PastingDiagram: return std::get<PastingDiagram>(doc.payload).graph;
    case DocumentKind::Morphism: return std::get<MorphismDocument>(doc.payload).source;
    case DocumentKind::OpetopeCode: break;
  }
  throw std::invalid_argument("an opetope_code document carries no graph");
}

}  // namespace opetope::io
