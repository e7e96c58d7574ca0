#include "agreement.hpp"

#include "opetope/axioms/axioms.hpp"
#include "opetope/enumerator/enumerator.hpp"

namespace opetope::fixtures {

std::vector<std::size_t> profile_of(const OpetopicGraph& g) {
  std::vector<std::size_t> p(static_cast<std::size_t>(g.max_degree() + 1), 0);
  for (std::uint32_t i = 0; i < g.cell_count(); ++i) ++p[static_cast<std::size_t>(g.degree(CellId{i}))];
  return p;
}

Agreement compare_enumerators(int degree, std::size_t max_cells) {
  Agreement out;
  using Groups = std::map<std::vector<std::size_t>, std::set<std::string>>;
  Groups tree, oracle;
  for (const OpetopeCode& c : enumerate_opetopes(SizeBudget{degree, max_cells, max_cells, max_cells})) {
    Opetope x = decode(c);
    if (!check_opetopic(x.graph).ok() || !is_opetope(x.graph)) out.invalid.push_back(c.text);
    tree[profile_of(x.graph)].insert(c.text);
    ++out.tree_count;
  }
  for (const std::vector<std::size_t>& p : profiles(degree, max_cells))
    for (const Opetope& x : oracle_enumerate(p)) {
      oracle[p].insert(encode(x).text);
      ++out.oracle_count;
    }
  for (const auto& [p, codes] : tree)
    for (const std::string& c : codes)
      if (!oracle[p].contains(c)) out.differences.push_back("tree only: " + c);
  for (const auto& [p, codes] : oracle)
    for (const std::string& c : codes)
      if (!tree[p].contains(c)) out.differences.push_back("oracle only: " + c);
  return out;
}

}  // namespace opetope::fixtures

namespace opetope::fixtures {

std::size_t planar_tree_count(std::size_t nodes, std::size_t max_arity) {
  // trees[k]: trees with k nodes; slots[m][r]: m inputs holding r nodes in total
  std::vector<std::size_t> trees(nodes + 1, 0);
  for (std::size_t k = 1; k <= nodes; ++k) {
    std::vector<std::vector<std::size_t>> slots(max_arity + 1, std::vector<std::size_t>(k, 0));
    slots[0][0] = 1;
    for (std::size_t m = 1; m <= max_arity; ++m)
      for (std::size_t r = 0; r < k; ++r) {
        slots[m][r] = slots[m - 1][r];
        for (std::size_t j = 1; j <= r; ++j) slots[m][r] += slots[m - 1][r - j] * trees[j];
      }
    for (std::size_t m = 0; m <= max_arity; ++m) trees[k] += slots[m][k - 1];
  }
  return nodes == 0 ? 0 : trees[nodes];
}

}  // namespace opetope::fixtures
