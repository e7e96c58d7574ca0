#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "opetope/calculus/calculus.hpp"
#include "random_pd.hpp"

namespace opetope::fixtures {

// S(P) together with the cell of P that each of its cells comes from.
struct Horn {
  PastingDiagram pd;
  std::vector<CellId> origin;
};

Horn horn_of(const PastingDiagram& p);
// Code of the opetope filling the boundary of p.
OpetopeCode boundary_code(const PastingDiagram& p);

struct LawTally {
  std::size_t instances = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Random instances of the calculus laws.  Every call checks one instance;
// the cardinality formulas are checked on every subst and graft performed.
class LawChecker {
 public:
  explicit LawChecker(std::uint32_t seed) : gen_(seed) {}

  void subst_associativity(int n);
  void graft_associativity(int n);
  void subst_units(int n);
  void graft_units(int n);
  void horn_interchange(int n);

  // Both counts laws on the two fixed figures: 3 top cells replaced by
  // (2, 2, 0) and one top cell with 3 leaves grafted with (1, 1, 0).
  void figure_counts();

  const LawTally& laws() const { return laws_; }
  const LawTally& counts() const { return counts_; }
  PdGenerator& generator() { return gen_; }

 private:
  PastingDiagram random_pd(int n);
  PastingDiagram replacement(const OpetopeCode& shape);  // boundary matches shape
  PastingDiagram onto(int n, const OpetopeCode& leaf_shape);  // root object matches leaf_shape
  std::map<CellId, PastingDiagram> replacements(const PastingDiagram& a);
  std::map<CellId, PastingDiagram> grafts(const PastingDiagram& a, double chance);

  CompositeResult do_subst(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b);
  CompositeResult do_graft(const PastingDiagram& a, const std::map<CellId, PastingDiagram>& b);
  void expect_same(const std::string& law, const PastingDiagram& lhs, const PastingDiagram& rhs);
  template <class F>
  void instance(const std::string& law, F&& body);

  PdGenerator gen_;
  std::map<int, std::map<OpetopeCode, std::vector<PastingDiagram>>> pool_;
  LawTally laws_;
  LawTally counts_;
};

}  // namespace opetope::fixtures
