#include "opetope/core/morphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace opetope {

Morphism identity_morphism(const OpetopicGraph& g) {
  Morphism m;
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) m.cells.push_back(CellId{i});
  for (std::uint32_t i = 0; i < g.arrow_count(); ++i) m.arrows.push_back(ArrowId{i});
  return m;
}

Morphism then(const Morphism& first, const Morphism& second) {
  Morphism m;
  for (CellId c : first.cells) m.cells.push_back(second(c));
  for (ArrowId a : first.arrows) m.arrows.push_back(second(a));
  return m;
}

NormalForm apply(const Morphism& f, const NormalForm& nf) {
  NormalForm out{f(nf.from), f(nf.to), {}};
  for (ArrowId a : nf.path) out.path.push_back(f(a));
  return out;
}

ValidationReport validate_morphism(const OpetopicGraph& src, const OpetopicGraph& tgt, const Morphism& f) {
  ValidationReport report;
  if (f.cells.size() != src.cell_count() || f.arrows.size() != src.arrow_count()) {
    report.push_back({"shape", "map sizes do not match the source graph"});
    return report;
  }
  for (CellId c : f.cells)
    if (c.index >= tgt.cell_count()) {
      report.push_back({"range", "cell image out of range"});
      return report;
    }
  for (ArrowId a : f.arrows)
    if (a.index >= tgt.arrow_count()) {
      report.push_back({"range", "arrow image out of range"});
      return report;
    }
  for (std::uint32_t i = 0; i < src.cell_count(); ++i) {
    CellId c{i};
    if (src.degree(c) != tgt.degree(f(c)))
      report.push_back({"degree", "cell " + src.name(c) + " changes degree"});
  }
  for (std::uint32_t i = 0; i < src.arrow_count(); ++i) {
    const GenArrow& a = src.arrow(ArrowId{i});
    const GenArrow& b = tgt.arrow(f(ArrowId{i}));
    if (f(a.dom) != b.dom || f(a.cod) != b.cod)
      report.push_back({"endpoints", "arrow " + a.name + " is not sent to an arrow between the image cells"});
    if (a.polarity != b.polarity) report.push_back({"polarity", "arrow " + a.name + " changes polarity"});
  }
  for (std::uint32_t i = 0; i < src.diamond_count(); ++i) {
    const Diamond& d = src.diamond(DiamondId{i});
    Diamond img{f(d.het_outer), f(d.het_inner), f(d.hom_outer), f(d.hom_inner)};
    bool found = false;
    for (DiamondId e : tgt.diamonds_with_pair(img.het_outer, img.het_inner))
      if (tgt.diamond(e) == img) found = true;
    if (!found)
      report.push_back({"diamond", "diamond " + describe_pair(src, d.het_outer, d.het_inner) + " has no image"});
  }
  // Discrete fibration: generators into c correspond bijectively to
  // generators into f(c).
  for (std::uint32_t i = 0; i < src.cell_count(); ++i) {
    CellId c{i};
    std::vector<ArrowId> images;
    for (ArrowId a : src.arrows_into(c)) images.push_back(f(a));
    std::sort(images.begin(), images.end());
    std::vector<ArrowId> expected(tgt.arrows_into(f(c)).begin(), tgt.arrows_into(f(c)).end());
    std::sort(expected.begin(), expected.end());
    if (images != expected)
      report.push_back({"fibration", "generators into " + src.name(c) + " are not in bijection with those into " +
                                         tgt.name(f(c))});
  }
  return report;
}

namespace {

using Signature = std::tuple<int, int, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

Signature signature(const OpetopicGraph& g, CellId c, const std::vector<int>& colors) {
  std::size_t si = 0, ti = 0, so = 0, to = 0;
  for (ArrowId a : g.arrows_into(c)) (g.arrow(a).polarity == Polarity::Source ? si : ti)++;
  for (ArrowId a : g.arrows_from(c)) (g.arrow(a).polarity == Polarity::Source ? so : to)++;
  int color = colors.empty() ? 0 : colors.at(c.index);
  return {g.degree(c), color, si, ti, so, to, g.diamonds_into(c).size()};
}

// Number of arrows a -> b of each polarity, plus b -> a.
std::array<int, 4> link(const OpetopicGraph& g, CellId a, CellId b) {
  std::array<int, 4> out{};
  for (ArrowId e : g.arrows_from(a))
    if (g.arrow(e).cod == b) out[g.arrow(e).polarity == Polarity::Source ? 0 : 1]++;
  for (ArrowId e : g.arrows_from(b))
    if (g.arrow(e).cod == a) out[g.arrow(e).polarity == Polarity::Source ? 2 : 3]++;
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const OpetopicGraph& g, const OpetopicGraph& h, const IsoOptions& opt) : g_(g), h_(h), opt_(opt) {}

  std::vector<Morphism> run() {
    if (g_.cell_count() != h_.cell_count() || g_.arrow_count() != h_.arrow_count() ||
        g_.diamond_count() != h_.diamond_count())
      return {};
    for (std::uint32_t i = 0; i < h_.cell_count(); ++i)
      by_sig_[signature(h_, CellId{i}, opt_.target_colors)].push_back(CellId{i});
    order_cells();
    cell_map_.assign(g_.cell_count(), std::nullopt);
    used_cells_.assign(h_.cell_count(), false);
    arrow_map_.assign(g_.arrow_count(), std::nullopt);
    used_arrows_.assign(h_.arrow_count(), false);
    diamonds_of_.assign(g_.arrow_count(), {});
    for (std::uint32_t i = 0; i < g_.diamond_count(); ++i) {
      const Diamond& d = g_.diamond(DiamondId{i});
      for (ArrowId a : {d.het_outer, d.het_inner, d.hom_outer, d.hom_inner}) diamonds_of_[a.index].push_back(DiamondId{i});
    }
    assign_cell(0);
    return std::move(results_);
  }

 private:
  void order_cells() {
    std::vector<bool> placed(g_.cell_count(), false);
    std::vector<CellId> all;
    for (std::uint32_t i = 0; i < g_.cell_count(); ++i) all.push_back(CellId{i});
    std::stable_sort(all.begin(), all.end(), [&](CellId a, CellId b) { return g_.degree(a) > g_.degree(b); });
    for (CellId start : all) {
      if (placed[start.index]) continue;
      std::vector<CellId> queue{start};
      placed[start.index] = true;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        CellId c = queue[k];
        order_.push_back(c);
        auto visit = [&](CellId n) {
          if (!placed[n.index]) {
            placed[n.index] = true;
            queue.push_back(n);
          }
        };
        for (ArrowId a : g_.arrows_into(c)) visit(g_.arrow(a).dom);
        for (ArrowId a : g_.arrows_from(c)) visit(g_.arrow(a).cod);
      }
    }
  }

  bool consistent(CellId gc, CellId hc) {
    auto check = [&](CellId gn) {
      if (!cell_map_[gn.index]) return true;
      return link(g_, gc, gn) == link(h_, hc, *cell_map_[gn.index]);
    };
    for (ArrowId a : g_.arrows_into(gc))
      if (!check(g_.arrow(a).dom)) return false;
    for (ArrowId a : g_.arrows_from(gc))
      if (!check(g_.arrow(a).cod)) return false;
    return true;
  }

  void assign_cell(std::size_t k) {
    if (results_.size() >= opt_.max_results) return;
    if (k == order_.size()) {
      arrow_order_.clear();
      for (std::uint32_t i = 0; i < g_.arrow_count(); ++i) arrow_order_.push_back(ArrowId{i});
      assign_arrow(0);
      return;
    }
    CellId gc = order_[k];
    auto it = by_sig_.find(signature(g_, gc, opt_.source_colors));
    if (it == by_sig_.end()) return;
    for (CellId hc : it->second) {
      if (used_cells_[hc.index] || !consistent(gc, hc)) continue;
      cell_map_[gc.index] = hc;
      used_cells_[hc.index] = true;
      assign_cell(k + 1);
      used_cells_[hc.index] = false;
      cell_map_[gc.index] = std::nullopt;
      if (results_.size() >= opt_.max_results) return;
    }
  }

  bool diamonds_ok(ArrowId ga) {
    for (DiamondId d : diamonds_of_[ga.index]) {
      const Diamond& gd = g_.diamond(d);
      auto m = [&](ArrowId a) { return arrow_map_[a.index]; };
      if (!m(gd.het_outer) || !m(gd.het_inner) || !m(gd.hom_outer) || !m(gd.hom_inner)) continue;
      Diamond img{*m(gd.het_outer), *m(gd.het_inner), *m(gd.hom_outer), *m(gd.hom_inner)};
      bool found = false;
      for (DiamondId e : h_.diamonds_with_pair(img.het_outer, img.het_inner))
        if (h_.diamond(e) == img) found = true;
      if (!found) return false;
    }
    return true;
  }

  void assign_arrow(std::size_t k) {
    if (results_.size() >= opt_.max_results) return;
    if (k == arrow_order_.size()) {
      Morphism m;
      for (auto& c : cell_map_) m.cells.push_back(*c);
      for (auto& a : arrow_map_) m.arrows.push_back(*a);
      results_.push_back(std::move(m));
      return;
    }
    ArrowId ga = arrow_order_[k];
    const GenArrow& a = g_.arrow(ga);
    CellId hd = *cell_map_[a.dom.index];
    CellId hc = *cell_map_[a.cod.index];
    for (ArrowId hb : h_.arrows_into(hc)) {
      const GenArrow& b = h_.arrow(hb);
      if (used_arrows_[hb.index] || b.dom != hd || b.polarity != a.polarity) continue;
      arrow_map_[ga.index] = hb;
      used_arrows_[hb.index] = true;
      if (diamonds_ok(ga)) assign_arrow(k + 1);
      used_arrows_[hb.index] = false;
      arrow_map_[ga.index] = std::nullopt;
      if (results_.size() >= opt_.max_results) return;
    }
  }

  const OpetopicGraph& g_;
  const OpetopicGraph& h_;
  const IsoOptions& opt_;
  std::map<Signature, std::vector<CellId>> by_sig_;
  std::vector<CellId> order_;
  std::vector<ArrowId> arrow_order_;
  std::vector<std::optional<CellId>> cell_map_;
  std::vector<bool> used_cells_;
  std::vector<std::optional<ArrowId>> arrow_map_;
  std::vector<bool> used_arrows_;
  std::vector<std::vector<DiamondId>> diamonds_of_;
  std::vector<Morphism> results_;
};

}  // namespace

std::vector<Morphism> find_isomorphisms(const OpetopicGraph& g, const OpetopicGraph& h, const IsoOptions& options) {
  if (g.cell_count() > options.size_limit || h.cell_count() > options.size_limit)
    throw SizeLimit("isomorphism search is limited to " + std::to_string(options.size_limit) + " cells");
  return IsoSearch(g, h, options).run();
}

std::optional<Morphism> find_isomorphism(const OpetopicGraph& g, const OpetopicGraph& h, const IsoOptions& options) {
  IsoOptions one = options;
  one.max_results = 1;
  auto found = find_isomorphisms(g, h, one);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace opetope
