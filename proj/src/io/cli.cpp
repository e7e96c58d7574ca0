#include "opetope/io/cli.hpp"

#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opetope/axioms/axioms.hpp"
#include "opetope/calculus/calculus.hpp"
#include "opetope/codec/shape.hpp"
#include "opetope/constructions/constructions.hpp"
#include "opetope/enumerator/enumerator.hpp"
#include "opetope/io/document.hpp"
#include "opetope/io/render.hpp"

namespace opetope::io {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::string output;  // file for document results, stdout when empty
};

Json report_json(const AxiomReport& r) {
  Json out = Json::object();
  out["ok"] = r.ok();
  out["results"] = Json::array();
  for (const AxiomResult& a : r.results) {
    Json item = Json::object();
    item["label"] = a.label;
    item["status"] = a.status == Status::Pass ? "pass" : a.status == Status::Fail ? "fail" : "skipped";
    item["witnesses"] = a.witnesses;
    if (!a.note.empty()) item["note"] = a.note;
    out["results"].push_back(item);
  }
  return out;
}

void emit(Context& ctx, const Document& doc) {
  if (ctx.output.empty())
    ctx.out << serialize(doc);
  else
    save_document(ctx.output, doc);
}

CellId cell_arg(const OpetopicGraph& g, const std::string& name) {
  auto c = g.find_cell(name);
  if (!c) throw UsageError("no cell named \"" + name + "\"");
  return *c;
}

std::map<CellId, PastingDiagram> assignments(const PastingDiagram& a, const std::vector<std::string>& at) {
  std::map<CellId, PastingDiagram> out;
  for (const std::string& item : at) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--at expects CELL=FILE, got \"" + item + "\"");
    CellId c = cell_arg(a.graph, item.substr(0, eq));
    if (!out.emplace(c, as_pasting_diagram(load_document(item.substr(eq + 1)))).second)
      throw UsageError("cell \"" + item.substr(0, eq) + "\" is assigned twice");
  }
  return out;
}

int validate(Context& ctx, const std::string& file, const std::string& o6) {
  Document doc = load_document(file);
  CheckOptions options;
  if (o6 == "zigzag") options.o6 = O6Mode::Zigzag;
  AxiomReport report;
  std::optional<bool> opetope;
  switch (doc.kind()) {
    case DocumentKind::OpetopicSet: {
      const OpetopicGraph& g = std::get<OpetopicGraph>(doc.payload);
      report = check_opetopic(g, options);
      if (report.ok()) opetope = is_opetope(g).has_value();
      break;
    }
    case DocumentKind::Boundary: report = check_boundary(std::get<Boundary>(doc.payload)); break;
    case DocumentKind::PastingDiagram: report = check_pasting_diagram(std::get<PastingDiagram>(doc.payload)); break;
    case DocumentKind::OpetopeCode: {
      Opetope x = decode(std::get<OpetopeCode>(doc.payload));
      report = check_opetopic(x.graph, options);
      opetope = is_opetope(x.graph).has_value();
      break;
    }
    case DocumentKind::Morphism: {
      const MorphismDocument& m = std::get<MorphismDocument>(doc.payload);
      AxiomResult& r = report.add("morphism");
      for (const Violation& v : validate_morphism(m.source, m.target, m.map)) {
        r.status = Status::Fail;
        r.witnesses.push_back(v.kind + ": " + v.detail);
      }
      break;
    }
  }
  if (ctx.json) {
    Json j = report_json(report);
    j["kind"] = to_string(doc.kind());
    if (opetope) j["opetope"] = *opetope;
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << report.summary();
    if (opetope) ctx.out << "opetope: " << (*opetope ? "yes" : "no") << "\n";
  }
  return report.ok() ? 0 : 1;
}

int hom_command(Context& ctx, const std::string& file, const std::string& from, const std::string& to) {
  Document doc = load_document(file);
  OpetopicGraph g = doc.kind() == DocumentKind::OpetopeCode ? as_opetope(doc).graph : graph_of(doc);
  std::vector<NormalForm> arrows = hom(g, cell_arg(g, from), cell_arg(g, to));
  if (ctx.json) {
    Json j = Json::object();
    j["from"] = from;
    j["to"] = to;
    j["count"] = arrows.size();
    j["arrows"] = Json::array();
    for (const NormalForm& nf : arrows) j["arrows"].push_back(describe(g, nf));
    ctx.out << j.dump(2) << "\n";
  } else {
    for (const NormalForm& nf : arrows) ctx.out << describe(g, nf) << "\n";
    ctx.out << arrows.size() << (arrows.size() == 1 ? " arrow\n" : " arrows\n");
  }
  return 0;
}

std::string classify_label(const OpetopicGraph& g, DiamondId d, const std::map<std::string, int>& bottoms,
                           const std::map<std::pair<std::string, std::string>, int>& spans) {
  const Diamond& dm = g.diamond(d);
  const std::string bottom = g.name(g.arrow(dm.het_inner).dom);
  const std::string top = g.name(g.arrow(dm.het_outer).cod);
  if (bottoms.at(bottom) == 1) return bottom;
  if (spans.at({bottom, top}) == 1) return bottom + " -> " + top;
  return bottom + " -> " + top + " [" + g.name(dm.het_outer) + ", " + g.name(dm.het_inner) + "]";
}

int classify(Context& ctx, const std::string& file) {
  Document doc = load_document(file);
  Opetope x = as_opetope(doc);
  const OpetopicGraph& g = x.graph;
  std::map<std::string, int> bottoms;
  std::map<std::pair<std::string, std::string>, int> spans;
  std::vector<DiamondId> order;
  for (std::uint32_t i = 0; i < g.diamond_count(); ++i) {
    const Diamond& dm = g.diamond(DiamondId{i});
    bottoms[g.name(g.arrow(dm.het_inner).dom)]++;
    spans[{g.name(g.arrow(dm.het_inner).dom), g.name(g.arrow(dm.het_outer).cod)}]++;
    order.push_back(DiamondId{i});
  }
  auto key = [&](DiamondId d) {
    const Diamond& dm = g.diamond(d);
    return std::pair{g.name(dm.het_outer), g.name(dm.het_inner)};
  };
  std::sort(order.begin(), order.end(), [&](DiamondId a, DiamondId b) { return key(a) < key(b); });
  Json j = Json::array();
  for (DiamondId d : order) {
    std::string label = classify_label(g, d, bottoms, spans);
    std::string family(to_string(classify_diamond(g, d)));
    if (ctx.json)
      j.push_back(Json{{"diamond", label}, {"family", family}});
    else
      ctx.out << label << ": " << family << "\n";
  }
  if (ctx.json) ctx.out << j.dump(2) << "\n";
  return 0;
}

int iso(Context& ctx, const std::string& a_file, const std::string& b_file) {
  Document a = load_document(a_file), b = load_document(b_file);
  auto graph = [](const Document& d) { return d.kind() == DocumentKind::OpetopeCode ? as_opetope(d).graph : graph_of(d); };
  OpetopicGraph ga = graph(a), gb = graph(b);
  std::optional<Morphism> f = find_isomorphism(ga, gb);
  if (ctx.json) {
    Json j = Json::object();
    j["isomorphic"] = f.has_value();
    if (f) {
      j["cells"] = Json::object();
      for (std::uint32_t i = 0; i < ga.cell_count(); ++i) j["cells"][ga.name(CellId{i})] = gb.name(f->cells[i]);
    }
    ctx.out << j.dump(2) << "\n";
  } else if (f) {
    ctx.out << "isomorphic\n";
    for (std::uint32_t i = 0; i < ga.cell_count(); ++i) ctx.out << ga.name(CellId{i}) << " -> " << gb.name(f->cells[i]) << "\n";
  } else {
    ctx.out << "not isomorphic\n";
  }
  return f ? 0 : 1;
}

int render(Context& ctx, const std::string& file, const std::string& what, const std::string& cell, bool dot) {
  Document doc = load_document(file);
  if (what == "graph") {
    ctx.out << dot_graph(doc.kind() == DocumentKind::OpetopeCode ? as_opetope(doc).graph : graph_of(doc));
    return 0;
  }
  if (what == "ograph") {
    OpetopicGraph g = doc.kind() == DocumentKind::OpetopeCode ? as_opetope(doc).graph : graph_of(doc);
    if (cell.empty()) throw UsageError("--what ograph needs --cell");
    ctx.out << dot_ograph(g, cell_arg(g, cell));
    return 0;
  }
  PastingDiagram p = doc.kind() == DocumentKind::PastingDiagram ? as_pasting_diagram(doc) : source_horn(boundary(as_opetope(doc)));
  if (what == "pdgraph") {
    ctx.out << dot_pdgraph(p);
    return 0;
  }
  DecoratedTree t = pd_to_tree(p);
  ctx.out << (dot ? dot_tree(t) : ascii_tree(t));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opetope workbench: validate, construct, encode and enumerate opetopes"};
  app.require_subcommand(1);
  std::string format = "text";
  Context ctx{out, err, false, {}};
  app.add_option("--format", format, "Output format for reports")->check(CLI::IsMember({"text", "json"}));

  std::string file, file2, name, name2, what = "tree", o6 = "tree";
  std::vector<std::string> at;
  std::vector<std::size_t> profile;
  bool count = false, dot = false;
  SizeBudget budget{2, 4, 3, 32};
  std::optional<std::size_t> nodes;
  int max_degree = 3;
  std::function<int()> action;

  auto doc_out = [&](CLI::App* sub) { sub->add_option("-o,--output", ctx.output, "Write the resulting document here"); };

  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms of a document");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_option("--o6", o6, "O6 check: tree or zigzag")->check(CLI::IsMember({"tree", "zigzag"}));
  validate_cmd->callback([&] { action = [&] { return validate(ctx, file, o6); }; });

  auto* hom_cmd = app.add_subcommand("hom", "List the arrows between two cells in normal form");
  hom_cmd->add_option("file", file)->required();
  hom_cmd->add_option("from", name)->required();
  hom_cmd->add_option("to", name2)->required();
  hom_cmd->callback([&] { action = [&] { return hom_command(ctx, file, name, name2); }; });

  auto* slice_cmd = app.add_subcommand("slice", "Slice an opetopic set at a cell");
  slice_cmd->add_option("file", file)->required();
  slice_cmd->add_option("cell", name)->required();
  doc_out(slice_cmd);
  slice_cmd->callback([&] {
    action = [&] {
      Document doc = load_document(file);
      OpetopicGraph g = doc.kind() == DocumentKind::OpetopeCode ? as_opetope(doc).graph : graph_of(doc);
      emit(ctx, Document{slice(g, cell_arg(g, name)).opetope.graph});
      return 0;
    };
  });

  auto* boundary_cmd = app.add_subcommand("boundary", "Boundary of an opetope");
  boundary_cmd->add_option("file", file)->required();
  doc_out(boundary_cmd);
  boundary_cmd->callback([&] {
    action = [&] {
      emit(ctx, Document{boundary(as_opetope(load_document(file)))});
      return 0;
    };
  });

  auto* fill_cmd = app.add_subcommand("fill", "Fill a boundary with a top cell");
  fill_cmd->add_option("file", file)->required();
  doc_out(fill_cmd);
  fill_cmd->callback([&] {
    action = [&] {
      Document doc = load_document(file);
      if (doc.kind() != DocumentKind::Boundary) throw InvalidInput("fill expects a boundary document");
      emit(ctx, Document{fill(std::get<Boundary>(doc.payload)).graph});
      return 0;
    };
  });

  auto* horn_cmd = app.add_subcommand("horn", "Source horn of a boundary or an opetope");
  horn_cmd->add_option("file", file)->required();
  doc_out(horn_cmd);
  horn_cmd->callback([&] {
    action = [&] {
      Document doc = load_document(file);
      Boundary b = doc.kind() == DocumentKind::Boundary ? std::get<Boundary>(doc.payload) : boundary(as_opetope(doc));
      emit(ctx, Document{source_horn(b)});
      return 0;
    };
  });

  auto* target_cmd = app.add_subcommand("target", "Target opetope of a pasting diagram or target face of an opetope");
  target_cmd->add_option("file", file)->required();
  doc_out(target_cmd);
  target_cmd->callback([&] {
    action = [&] {
      Document doc = load_document(file);
      if (doc.kind() == DocumentKind::PastingDiagram) {
        emit(ctx, Document{pd_target(as_pasting_diagram(doc)).graph});
      } else {
        Opetope x = as_opetope(doc);
        std::optional<ArrowId> t = x.graph.target_arrow(x.top);
        if (!t) throw UsageError("a point has no target face");
        emit(ctx, Document{slice(x.graph, x.graph.arrow(*t).dom).opetope.graph});
      }
      return 0;
    };
  });

  auto* shift_cmd = app.add_subcommand("shift", "Pasting diagram with a single top cell");
  shift_cmd->add_option("file", file)->required();
  doc_out(shift_cmd);
  shift_cmd->callback([&] {
    action = [&] {
      emit(ctx, Document{shift(as_opetope(load_document(file)))});
      return 0;
    };
  });

  auto* degen_cmd = app.add_subcommand("degen", "Degenerate pasting diagram at an opetope");
  degen_cmd->add_option("file", file)->required();
  doc_out(degen_cmd);
  degen_cmd->callback([&] {
    action = [&] {
      emit(ctx, Document{degen(as_opetope(load_document(file)))});
      return 0;
    };
  });

  for (std::string op : {"subst", "graft"}) {
    auto* cmd = app.add_subcommand(op, op == "subst" ? "Substitute pasting diagrams for top cells" : "Graft pasting diagrams onto leaves");
    cmd->add_option("file", file)->required();
    cmd->add_option("--at", at, "CELL=FILE, repeatable")->required();
    doc_out(cmd);
    cmd->callback([&, op] {
      action = [&, op] {
        PastingDiagram a = as_pasting_diagram(load_document(file));
        auto b = assignments(a, at);
        emit(ctx, Document{(op == "subst" ? subst(a, b) : graft(a, b)).pd});
        return 0;
      };
    });
  }

  auto* encode_cmd = app.add_subcommand("encode", "Canonical code of an opetope");
  encode_cmd->add_option("file", file)->required();
  encode_cmd->callback([&] {
    action = [&] {
      OpetopeCode c = encode(as_opetope(load_document(file)));
      if (ctx.json)
        ctx.out << Json{{"code", c.text}}.dump(2) << "\n";
      else
        ctx.out << c.text << "\n";
      return 0;
    };
  });

  auto* decode_cmd = app.add_subcommand("decode", "Opetopic set of a code");
  decode_cmd->add_option("code", name)->required();
  doc_out(decode_cmd);
  decode_cmd->callback([&] {
    action = [&] {
      emit(ctx, Document{decode(parse_code(name)).graph});
      return 0;
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Family of every diamond of an opetope");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->callback([&] { action = [&] { return classify(ctx, file); }; });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate opetopes by tree encoding");
  enumerate_cmd->add_option("--degree", budget.degree)->required();
  enumerate_cmd->add_option("--nodes", nodes, "Keep only codes with exactly this many sources");
  enumerate_cmd->add_option("--max-top-cells", budget.max_top_cells);
  enumerate_cmd->add_option("--max-arity", budget.max_arity);
  enumerate_cmd->add_option("--max-cells", budget.max_total_cells);
  enumerate_cmd->add_flag("--count", count, "Print only the number of codes");
  enumerate_cmd->callback([&] {
    action = [&] {
      if (nodes) budget.max_top_cells = std::min(budget.max_top_cells, *nodes);
      std::vector<OpetopeCode> codes;
      for (OpetopeCode& c : enumerate_opetopes(budget))
        if (!nodes || source_count(c) == *nodes) codes.push_back(std::move(c));
      if (ctx.json) {
        Json j = Json::object();
        j["count"] = codes.size();
        if (!count) {
          j["codes"] = Json::array();
          for (const OpetopeCode& c : codes) j["codes"].push_back(c.text);
        }
        ctx.out << j.dump(2) << "\n";
      } else if (count) {
        ctx.out << codes.size() << "\n";
      } else {
        for (const OpetopeCode& c : codes) ctx.out << c.text << "\n";
      }
      return 0;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle-enumerate", "Brute-force enumeration on a cell profile");
  oracle_cmd->add_option("profile", profile, "Cells per degree, lowest first")->required();
  oracle_cmd->add_flag("--count", count);
  oracle_cmd->callback([&] {
    action = [&] {
      std::vector<std::string> codes;
      for (const Opetope& x : oracle_enumerate(profile)) codes.push_back(encode(x).text);
      std::sort(codes.begin(), codes.end());
      if (ctx.json)
        ctx.out << Json{{"count", codes.size()}, {"codes", codes}}.dump(2) << "\n";
      else if (count)
        ctx.out << codes.size() << "\n";
      else
        for (const std::string& c : codes) ctx.out << c << "\n";
      return 0;
    };
  });

  auto* counts_cmd = app.add_subcommand("counts", "Counts per degree and number of sources");
  counts_cmd->add_option("--max-degree", max_degree);
  counts_cmd->add_option("--max-top-cells", budget.max_top_cells);
  counts_cmd->add_option("--max-arity", budget.max_arity);
  counts_cmd->add_option("--max-cells", budget.max_total_cells);
  counts_cmd->callback([&] {
    action = [&] {
      std::vector<CountRow> rows = count_table(max_degree, budget);
      bool all = true;
      Json j = Json::array();
      if (!ctx.json) ctx.out << "degree sources trees oracle match\n";
      for (const CountRow& r : rows) {
        all = all && r.match;
        if (ctx.json) {
          Json row = Json::object();
          row["degree"] = r.degree;
          row["sources"] = r.sources;
          row["trees"] = r.tree_count;
          row["oracle"] = r.oracle_count ? Json(*r.oracle_count) : Json(nullptr);
          row["match"] = r.match;
          j.push_back(row);
        } else {
          ctx.out << r.degree << " " << r.sources << " " << r.tree_count << " "
                  << (r.oracle_count ? std::to_string(*r.oracle_count) : "-") << " " << (r.match ? "yes" : "NO") << "\n";
        }
      }
      if (ctx.json) ctx.out << j.dump(2) << "\n";
      return all ? 0 : 1;
    };
  });

  auto* iso_cmd = app.add_subcommand("iso", "Search for an isomorphism between two documents");
  iso_cmd->add_option("a", file)->required();
  iso_cmd->add_option("b", file2)->required();
  iso_cmd->callback([&] { action = [&] { return iso(ctx, file, file2); }; });

  auto* render_cmd = app.add_subcommand("render", "Draw the tree of an opetope or pasting diagram");
  render_cmd->add_option("file", file)->required();
  render_cmd->add_option("--what", what, "tree, graph, pdgraph or ograph")
      ->check(CLI::IsMember({"tree", "graph", "pdgraph", "ograph"}));
  render_cmd->add_option("--cell", name, "Cell for --what ograph");
  render_cmd->add_flag("--dot", dot, "Graphviz instead of ASCII for trees");
  render_cmd->callback([&] { action = [&] { return render(ctx, file, what, name, dot); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  ctx.json = format == "json";
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const VersionError& e) {
    err << "version error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ProfileTooLarge& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const FileError& e) {
    err << "file error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace opetope::io
