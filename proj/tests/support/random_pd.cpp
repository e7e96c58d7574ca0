#include "random_pd.hpp"

#include "opetope/enumerator/enumerator.hpp"

namespace opetope::fixtures {

const std::vector<OpetopeCode>& PdGenerator::decorations(int n) {
  auto it = pools_.find(n);
  if (it != pools_.end()) return it->second;
  SizeBudget b{n, 3, 3, 12};
  if (n >= 3) b = SizeBudget{n, 2, 2, 12};
  std::vector<OpetopeCode> pool = enumerate_opetopes(b);
  for (const OpetopeCode& c : pool) by_target_[n][target_shape(c)].push_back(c);
  return pools_.emplace(n, std::move(pool)).first->second;
}

DecoratedTree PdGenerator::grow(int n, const OpetopeCode& root, std::size_t& budget) {
  decorations(n);
  const std::vector<OpetopeCode>& fits = by_target_[n][root];
  OpetopeCode c = pick(fits);
  --budget;
  std::vector<DecoratedTree> inputs;
  for (const OpetopeCode& s : source_shapes(c)) {
    auto child = by_target_[n].find(s);
    if (budget > 0 && child != by_target_[n].end() && coin(0.5))
      inputs.push_back(grow(n, s, budget));
    else
      inputs.push_back(DecoratedTree::leaf());
  }
  return DecoratedTree::node(std::move(c), std::move(inputs));
}

DecoratedTree PdGenerator::tree(int n, const OpetopeCode& root, std::size_t max_nodes) {
  decorations(n);
  if (max_nodes == 0 || by_target_[n][root].empty()) return DecoratedTree::degenerate(root);
  std::size_t budget = max_nodes;
  return grow(n, root, budget);
}

DecoratedTree PdGenerator::any_tree(int n, std::size_t max_nodes, double degenerate_chance) {
  const OpetopeCode& c = pick(decorations(n));
  OpetopeCode root = target_shape(c);
  if (coin(degenerate_chance)) return DecoratedTree::degenerate(root);
  return tree(n, root, max_nodes);
}

}  // namespace opetope::fixtures
