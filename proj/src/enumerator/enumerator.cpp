#include "opetope/enumerator/enumerator.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <set>

#include "opetope/axioms/axioms.hpp"
#include "opetope/core/morphism.hpp"

namespace opetope {

std::size_t source_count(const OpetopeCode& code) {
  if (code.text == "o") return 0;
  return parse_tree(std::string_view(code.text).substr(1, code.text.size() - 2)).node_count();
}

namespace {

constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

class TreeEnumerator {
 public:
  explicit TreeEnumerator(const EnumerationLimits& limits) : limits_(limits) {}

  std::vector<OpetopeCode> codes(int d, std::size_t max_top, std::size_t arity, std::size_t cells) {
    std::vector<OpetopeCode> out;
    if (d == 0) {
      if (cells >= 1) out.push_back(OpetopeCode{"o"});
      return out;
    }
    if (d == 1) {
      if (cells >= 3 && arity >= 1 && max_top >= 1) out.push_back(OpetopeCode{"{nd(o)()}"});
      return out;
    }
    if (cells < 3) return out;
    for (const OpetopeCode& e : codes(d - 2, unbounded, unbounded, cells - 2)) {
      OpetopeCode c{"{deg(" + e.text + ")}"};
      if (cell_count(c) <= cells) out.push_back(c);
    }

    Level level;
    level.budget = cells;
    for (const OpetopeCode& c : codes(d - 1, arity, arity, cells - 2)) {
      level.decorations.push_back(c);
      level.sources[c] = source_shapes(c);
      level.cells[c] = cell_count(c);
      level.by_target[target_shape(c)].push_back(c);
    }
    const std::size_t max_nodes = std::min({max_top, arity, cells});
    std::vector<const Subtree*> candidates;
    for (std::size_t k = 1; k <= max_nodes; ++k)
      for (const OpetopeCode& c : level.decorations) {
        if (level.cells[c] + 2 > cells) continue;
        for (const Subtree& t : trees(level, c, k)) {
          candidates.push_back(&t);
          if (candidates.size() > limits_.soft_cap)
            throw BudgetExceeded("more than " + std::to_string(limits_.soft_cap) + " candidate trees in degree " +
                                 std::to_string(d));
        }
      }
    for (const Subtree* t : candidates) {
      OpetopeCode code{"{" + t->text + "}"};
      if (cell_count(code) <= cells) out.push_back(std::move(code));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Subtree {
    std::string text;
    std::size_t leaves;
  };

  struct Level {
    std::size_t budget = 0;
    std::vector<OpetopeCode> decorations;
    std::map<OpetopeCode, std::vector<OpetopeCode>> sources;
    std::map<OpetopeCode, std::size_t> cells;
    std::map<OpetopeCode, std::vector<OpetopeCode>> by_target;
    std::map<std::pair<OpetopeCode, std::size_t>, std::vector<Subtree>> memo;
  };

  // A tree with j nodes and l leaves has at least 2 + 2j + l cells: the
  // top, its target, one cell per node and one per edge.
  static bool viable(std::size_t nodes, std::size_t leaves, std::size_t cells) { return 2 + 2 * nodes + leaves <= cells; }

  // Trees with exactly k nodes whose root node is decorated by c.
  const std::vector<Subtree>& trees(Level& level, const OpetopeCode& c, std::size_t k) {
    auto key = std::pair{c, k};
    if (auto it = level.memo.find(key); it != level.memo.end()) return it->second;
    const std::vector<OpetopeCode>& inputs = level.sources[c];
    struct Partial {
      std::string text;
      std::size_t nodes = 1;
      std::size_t leaves = 0;
    };
    std::vector<Partial> partial{{"nd(" + c.text + ")(", 1, 0}};
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const std::string sep = i ? "," : "";
      std::vector<Partial> next;
      for (const Partial& p : partial) {
        if (viable(p.nodes, p.leaves + 1, level.budget)) next.push_back({p.text + sep + "lf", p.nodes, p.leaves + 1});
        for (std::size_t j = 1; p.nodes + j <= k; ++j)
          for (const OpetopeCode& child : level.by_target[inputs[i]])
            for (const Subtree& sub : trees(level, child, j))
              if (viable(p.nodes + j, p.leaves + sub.leaves, level.budget))
                next.push_back({p.text + sep + sub.text, p.nodes + j, p.leaves + sub.leaves});
      }
      partial = std::move(next);
    }
    std::vector<Subtree> out;
    for (Partial& p : partial)
      if (p.nodes == k) out.push_back({std::move(p.text) + ")", p.leaves});
    return level.memo.emplace(key, std::move(out)).first->second;
  }

  const EnumerationLimits& limits_;
};

class Oracle {
 public:
  Oracle(const std::vector<std::size_t>& profile, const EnumerationLimits& limits) : profile_(profile), limits_(limits) {
    for (std::size_t d = 0; d < profile.size(); ++d)
      for (std::size_t j = 0; j < profile[d]; ++j) {
        degree_.push_back(static_cast<int>(d));
        offset_of_.push_back(offset(d));
      }
    incidence_.assign(degree_.size(), {});
  }

  std::vector<Opetope> run() {
    order_.clear();
    for (std::size_t d = profile_.size(); d-- > 1;)
      for (std::size_t x = first_of(d); x < first_of(d + 1); ++x) order_.push_back(x);
    assign(0);
    return std::move(found_);
  }

 private:
  std::size_t offset(std::size_t d) const {
    std::size_t o = 0;
    for (std::size_t i = 0; i < d; ++i) o += profile_[i];
    return o;
  }
  std::size_t first_of(std::size_t d) const { return d < profile_.size() ? offset(d) : degree_.size(); }

  // Entry bits: 1 = source arrow, 2 = target arrow.
  std::vector<std::vector<std::uint8_t>> options(std::size_t cell) const {
    const std::size_t d = static_cast<std::size_t>(degree_[cell]);
    const std::size_t k = profile_[d - 1];
    std::vector<std::vector<std::uint8_t>> out;
    for (std::size_t t = 0; t < k; ++t) {
      if (d == 1) {
        for (std::size_t s = 0; s < k; ++s) {
          std::vector<std::uint8_t> v(k, 0);
          v[t] |= 2;
          v[s] |= 1;
          out.push_back(v);
        }
      } else {
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
          std::vector<std::uint8_t> v(k, 0);
          v[t] |= 2;
          for (std::size_t s = 0; s < k; ++s)
            if (mask >> s & 1) v[s] |= 1;
          out.push_back(v);
        }
      }
    }
    return out;
  }

  // Entries of the cells one degree up at y, in cell order.
  std::vector<std::uint8_t> column(std::size_t y) const {
    const std::size_t d = static_cast<std::size_t>(degree_[y]);
    std::vector<std::uint8_t> out;
    for (std::size_t x = first_of(d + 1); x < first_of(d + 2); ++x) out.push_back(incidence_[x][y - offset_of_[y]]);
    return out;
  }

  static std::array<std::size_t, 3> kinds(const std::vector<std::uint8_t>& row) {
    std::array<std::size_t, 3> out{};
    for (std::uint8_t e : row)
      if (e) out[e - 1]++;
    return out;
  }

  // Cells are assigned from the top degree down.  Permuting the cells of
  // one degree is a symmetry, so within a degree the columns seen from
  // above are kept sorted, and cells with equal columns are sorted by the
  // multiset of their own entries.
  void assign(std::size_t step) {
    if (step == order_.size()) {
      if (!level_done(1)) return;
      finish();
      return;
    }
    const std::size_t cell = order_[step];
    const bool tie_before = cell > offset_of_[cell] && column(cell - 1) == column(cell);
    for (const auto& v : options(cell)) {
      if (tie_before && kinds(v) < kinds(incidence_[cell - 1])) continue;
      incidence_[cell] = v;
      const bool last_of_level = cell + 1 == first_of(static_cast<std::size_t>(degree_[cell]) + 1);
      if (last_of_level && step + 1 < order_.size() && !level_done(degree_[cell])) continue;
      assign(step + 1);
    }
  }

  // Checks that become decidable once every cell of degree d has its entries.
  bool level_done(int d) const {
    if (!covered(d - 1)) return false;
    const std::size_t below = static_cast<std::size_t>(d - 1);
    for (std::size_t y = first_of(below) + 1; y < first_of(below + 1); ++y)
      if (column(y) < column(y - 1)) return false;
    for (std::size_t x = first_of(static_cast<std::size_t>(d) + 1); x < first_of(static_cast<std::size_t>(d) + 2); ++x)
      if (!balanced(x)) return false;
    return true;
  }

  // Heterogeneous and homogeneous pairs from each cell two degrees down must
  // be equinumerous for a bijection of diamonds to exist.
  bool balanced(std::size_t x) const {
    const int d = degree_[x];
    if (d < 2) return true;
    const std::size_t mid = offset(static_cast<std::size_t>(d - 1));
    std::vector<long> excess(profile_[static_cast<std::size_t>(d - 2)], 0);
    for (std::size_t j = 0; j < incidence_[x].size(); ++j) {
      const std::uint8_t outer = incidence_[x][j];
      if (!outer) continue;
      const auto& lower = incidence_[mid + j];
      for (std::size_t z = 0; z < lower.size(); ++z)
        for (std::uint8_t po = 1; po <= 2; ++po)
          for (std::uint8_t pi = 1; pi <= 2; ++pi)
            if ((outer & po) && (lower[z] & pi)) excess[z] += po == pi ? 1 : -1;
    }
    return std::all_of(excess.begin(), excess.end(), [](long e) { return e == 0; });
  }

  // Every cell of degree d is below some cell of degree d + 1.
  bool covered(int d) const {
    if (d < 0 || d + 1 >= static_cast<int>(profile_.size())) return true;
    const std::size_t first = first_of(static_cast<std::size_t>(d + 1));
    const std::size_t last = first_of(static_cast<std::size_t>(d + 2));
    for (std::size_t y = 0; y < profile_[static_cast<std::size_t>(d)]; ++y) {
      bool any = false;
      for (std::size_t x = first; x < last && !any; ++x) any = incidence_[x][y] != 0;
      if (!any) return false;
    }
    return true;
  }

  struct Arrow {
    std::size_t dom, cod;
    Polarity pol;
  };

  void finish() {
    const std::size_t n = degree_.size();
    std::vector<Arrow> arrows;
    for (std::size_t x = 0; x < n; ++x) {
      if (degree_[x] == 0) continue;
      const std::size_t base = offset(static_cast<std::size_t>(degree_[x] - 1));
      for (std::size_t j = 0; j < incidence_[x].size(); ++j) {
        if (incidence_[x][j] & 1) arrows.push_back({base + j, x, Polarity::Source});
        if (incidence_[x][j] & 2) arrows.push_back({base + j, x, Polarity::Target});
      }
    }

    // Composable pairs grouped by endpoints.
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::vector<std::pair<std::size_t, std::size_t>>,
                                                            std::vector<std::pair<std::size_t, std::size_t>>>>
        groups;
    for (std::size_t o = 0; o < arrows.size(); ++o)
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (arrows[i].cod != arrows[o].dom) continue;
        auto& g = groups[{arrows[i].dom, arrows[o].cod}];
        (arrows[o].pol == arrows[i].pol ? g.second : g.first).emplace_back(o, i);
      }
    std::vector<std::pair<std::vector<std::pair<std::size_t, std::size_t>>, std::vector<std::pair<std::size_t, std::size_t>>>>
        list;
    for (auto& [key, g] : groups) {
      if (g.first.size() != g.second.size()) return;
      list.push_back(g);
    }
    std::vector<std::vector<std::size_t>> perms(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      perms[i].resize(list[i].first.size());
      for (std::size_t k = 0; k < perms[i].size(); ++k) perms[i][k] = k;
    }
    // Odometer over the permutations of every group.
    for (;;) {
      build_and_test(arrows, list, perms);
      std::size_t i = 0;
      for (; i < perms.size(); ++i) {
        if (std::next_permutation(perms[i].begin(), perms[i].end())) break;
      }
      if (i == perms.size()) break;
    }
  }

  template <class Groups>
  void build_and_test(const std::vector<Arrow>& arrows, const Groups& list, const std::vector<std::vector<std::size_t>>& perms) {
    if (!zigzags_are_trees(arrows, list, perms)) return;
    OpetopicGraph g;
    for (std::size_t x = 0; x < degree_.size(); ++x)
      g.add_cell("x" + std::to_string(degree_[x]) + "_" + std::to_string(x - offset_of_[x]), degree_[x]);
    for (std::size_t a = 0; a < arrows.size(); ++a)
      g.add_arrow("e" + std::to_string(a), CellId{static_cast<std::uint32_t>(arrows[a].dom)},
                  CellId{static_cast<std::uint32_t>(arrows[a].cod)}, arrows[a].pol);
    auto id = [](std::size_t a) { return ArrowId{static_cast<std::uint32_t>(a)}; };
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t k = 0; k < perms[i].size(); ++k) {
        auto het = list[i].first[k];
        auto hom = list[i].second[perms[i][k]];
        g.add_diamond(Diamond{id(het.first), id(het.second), id(hom.first), id(hom.second)});
      }
    if (!check_opetopic(g).ok()) return;
    auto top = is_opetope(g);
    if (!top) return;
    for (const Opetope& seen : found_)
      if (find_isomorphism(seen.graph, g, IsoOptions{64, 1, {}, {}})) return;
    found_.push_back(Opetope{std::move(g), *top});
  }

  // The tree form of the zigzag axiom read off the matching directly, a
  // cheap filter before the full check.
  template <class Groups>
  bool zigzags_are_trees(const std::vector<Arrow>& arrows, const Groups& list,
                         const std::vector<std::vector<std::size_t>>& perms) const {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> cls;
    std::size_t next = 0;
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t k = 0; k < perms[i].size(); ++k) {
        cls[list[i].first[k]] = next;
        cls[list[i].second[perms[i][k]]] = next++;
      }
    for (std::size_t x = 0; x < degree_.size(); ++x) {
      if (degree_[x] < 2) continue;
      std::map<std::size_t, std::size_t> vertex;  // classes first offset by arrow count
      auto index = [&](std::size_t key) { return vertex.emplace(key, vertex.size()).first->second; };
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      std::optional<std::size_t> root;
      for (std::size_t o = 0; o < arrows.size(); ++o) {
        if (arrows[o].cod != x) continue;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
          if (arrows[i].cod != arrows[o].dom) continue;
          std::size_t c = index(arrows.size() + cls.at({o, i}));
          if (arrows[o].pol == Polarity::Target) {
            if (arrows[i].pol == Polarity::Target) root = c;
            continue;
          }
          std::size_t gv = index(o);
          if (arrows[i].pol == Polarity::Target)
            edges.emplace_back(gv, c);
          else
            edges.emplace_back(c, gv);
        }
      }
      if (!root || tree_defect(vertex.size(), edges, *root)) return false;
    }
    return true;
  }

  std::vector<std::size_t> profile_;
  const EnumerationLimits& limits_;
  std::vector<int> degree_;
  std::vector<std::size_t> offset_of_;
  std::vector<std::vector<std::uint8_t>> incidence_;
  std::vector<std::size_t> order_;
  std::vector<Opetope> found_;
};

// Sources of the top and, recursively, of every source stay within the bounds.
bool within_arity(const Opetope& x, std::size_t arity, std::size_t max_top) {
  const OpetopicGraph& g = x.graph;
  if (g.source_arrows(x.top).size() > std::min(arity, max_top)) return false;
  std::vector<CellId> stack{x.top};
  std::set<CellId> seen{x.top};
  while (!stack.empty()) {
    CellId c = stack.back();
    stack.pop_back();
    auto sources = g.source_arrows(c);
    if (sources.size() > arity) return false;
    for (ArrowId s : sources)
      if (seen.insert(g.arrow(s).dom).second) stack.push_back(g.arrow(s).dom);
  }
  return true;
}

}  // namespace

std::vector<OpetopeCode> enumerate_opetopes(const SizeBudget& budget, const EnumerationLimits& limits) {
  TreeEnumerator e(limits);
  return e.codes(budget.degree, budget.max_top_cells, budget.max_arity, budget.max_total_cells);
}

std::vector<Opetope> oracle_enumerate(const std::vector<std::size_t>& profile, const EnumerationLimits& limits) {
  std::size_t total = 0;
  for (std::size_t k : profile) total += k;
  if (total > limits.oracle_cell_cap)
    throw ProfileTooLarge("profile has " + std::to_string(total) + " cells; the cap is " +
                          std::to_string(limits.oracle_cell_cap));
  if (profile.empty()) return {};
  for (std::size_t k : profile)
    if (k == 0) return {};
  return Oracle(profile, limits).run();
}

std::vector<std::vector<std::size_t>> profiles(int degree, std::size_t max_cells) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, int d, std::size_t remaining) -> void {
    if (d == degree) {
      if (remaining >= 1) {
        current.push_back(1);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (std::size_t k = 1; k + (degree - d) <= remaining; ++k) {
      current.push_back(k);
      self(self, d + 1, remaining - k);
      current.pop_back();
    }
  };
  rec(rec, 0, max_cells);
  return out;
}

std::vector<CountRow> count_table(int max_degree, const SizeBudget& budget, const EnumerationLimits& limits) {
  std::vector<CountRow> rows;
  for (int d = 0; d <= max_degree; ++d) {
    SizeBudget b = budget;
    b.degree = d;
    std::map<std::size_t, CountRow> by_sources;
    for (const OpetopeCode& c : enumerate_opetopes(b, limits)) {
      CountRow& row = by_sources[source_count(c)];
      row.degree = d;
      row.sources = source_count(c);
      row.tree_count++;
    }
    if (budget.max_total_cells <= limits.oracle_cell_cap) {
      for (auto& [k, row] : by_sources) row.oracle_count = 0;
      for (const auto& profile : profiles(d, budget.max_total_cells))
        for (const Opetope& x : oracle_enumerate(profile, limits)) {
          if (!within_arity(x, budget.max_arity, budget.max_top_cells)) continue;
          std::size_t k = x.graph.source_arrows(x.top).size();
          CountRow& row = by_sources[k];
          row.degree = d;
          row.sources = k;
          row.oracle_count = row.oracle_count.value_or(0) + 1;
        }
    }
    for (auto& [k, row] : by_sources) {
      row.match = !row.oracle_count || *row.oracle_count == row.tree_count;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace opetope
