#include "doctest.h"

#include <algorithm>
#include <set>

#include "agreement.hpp"
#include "fixtures.hpp"
#include "opetope/axioms/axioms.hpp"
#include "opetope/enumerator/enumerator.hpp"

using namespace opetope;
namespace fx = opetope::fixtures;

namespace {

std::vector<std::string> texts(const std::vector<OpetopeCode>& codes) {
  std::vector<std::string> out;
  for (const OpetopeCode& c : codes) out.push_back(c.text);
  return out;
}

std::size_t with_sources(const std::vector<OpetopeCode>& codes, std::size_t k) {
  return static_cast<std::size_t>(
      std::count_if(codes.begin(), codes.end(), [&](const OpetopeCode& c) { return source_count(c) == k; }));
}

}  // namespace

TEST_CASE("low degrees have one opetope each") {
  CHECK(texts(enumerate_opetopes(SizeBudget{0, 4, 3, 12})) == std::vector<std::string>{"o"});
  CHECK(texts(enumerate_opetopes(SizeBudget{1, 4, 3, 12})) == std::vector<std::string>{encode(fx::arr()).text});
}

TEST_CASE("degree two at arity three") {
  std::vector<OpetopeCode> codes = enumerate_opetopes(SizeBudget{2, 4, 3, 12});
  std::vector<std::string> expected;
  for (int m = 0; m <= 3; ++m) expected.push_back(encode(fx::tri(m)).text);
  std::sort(expected.begin(), expected.end());
  CHECK(texts(codes) == expected);
}

TEST_CASE("degree three at arity two matches the planar tree count") {
  std::vector<OpetopeCode> codes = enumerate_opetopes(SizeBudget{3, 2, 2, 32});
  CHECK(with_sources(codes, 1) == 3);
  CHECK(with_sources(codes, 2) == 9);
  CHECK(with_sources(codes, 1) == fx::planar_tree_count(1, 2));
  CHECK(with_sources(codes, 2) == fx::planar_tree_count(2, 2));
  CHECK(with_sources(codes, 0) == 1);
}

TEST_CASE("planar tree counts") {
  CHECK(fx::planar_tree_count(1, 2) == 3);
  CHECK(fx::planar_tree_count(2, 2) == 9);
  CHECK(fx::planar_tree_count(2, 1) == 2);
  CHECK(fx::planar_tree_count(3, 1) == 2);
  CHECK(fx::planar_tree_count(2, 3) == 24);
}

TEST_CASE("output is sorted and free of duplicates") {
  std::vector<std::string> t = texts(enumerate_opetopes(SizeBudget{3, 3, 3, 14}));
  CHECK(std::is_sorted(t.begin(), t.end()));
  CHECK(std::adjacent_find(t.begin(), t.end()) == t.end());
}

TEST_CASE("oracle examples") {
  REQUIRE(oracle_enumerate({1}).size() == 1);
  std::vector<Opetope> one = oracle_enumerate({2, 2, 1});
  REQUIRE(one.size() == 1);
  CHECK(encode(one.front()) == encode(fx::tri(1)));
  std::vector<Opetope> two = oracle_enumerate({3, 3, 1});
  REQUIRE(two.size() == 1);
  CHECK(encode(two.front()) == encode(fx::tri(2)));
  CHECK_THROWS_AS(oracle_enumerate({4, 4, 1, 1}), ProfileTooLarge);
}

TEST_CASE("profiles") {
  std::set<std::vector<std::size_t>> p;
  for (const auto& v : profiles(2, 7)) p.insert(v);
  CHECK(p.contains({1, 1, 1}));
  CHECK(p.contains({2, 2, 1}));
  CHECK(p.contains({3, 3, 1}));
  CHECK_FALSE(p.contains({4, 4, 1}));
}

TEST_CASE("dual enumerators agree up to eight cells") {
  for (int d = 0; d <= 4; ++d) {
    CAPTURE(d);
    fx::Agreement a = fx::compare_enumerators(d, 8);
    CHECK(a.ok());
    CHECK(a.tree_count == a.oracle_count);
    for (const std::string& line : a.differences) MESSAGE(line);
  }
}

TEST_CASE("dual enumerators agree up to nine cells" * doctest::skip()) {
  for (int d = 0; d <= 4; ++d) {
    CAPTURE(d);
    fx::Agreement a = fx::compare_enumerators(d, 9);
    CHECK(a.ok());
    for (const std::string& line : a.differences) MESSAGE(line);
  }
}

TEST_CASE("enumerated codes decode to opetopes") {
  for (int d = 0; d <= 4; ++d)
    for (const OpetopeCode& c : enumerate_opetopes(SizeBudget{d, 12, 12, 12})) {
      CAPTURE(c.text);
      Opetope x = decode(c);
      CHECK(check_opetopic(x.graph).ok());
      CHECK(is_opetope(x.graph) == x.top);
      CHECK(cell_count(c) <= 12);
    }
}

TEST_CASE("targets of enumerated codes are enumerated one degree down") {
  for (int d = 1; d <= 4; ++d) {
    std::vector<OpetopeCode> below = enumerate_opetopes(SizeBudget{d - 1, 12, 12, 12});
    std::set<OpetopeCode> known(below.begin(), below.end());
    for (const OpetopeCode& c : enumerate_opetopes(SizeBudget{d, 12, 12, 12})) {
      CAPTURE(c.text);
      CHECK(known.contains(target_shape(c)));
    }
  }
}

TEST_CASE("larger budgets never lose codes") {
  const SizeBudget base{3, 2, 2, 10};
  std::vector<OpetopeCode> small = enumerate_opetopes(base);
  for (SizeBudget bigger : {SizeBudget{3, 3, 2, 10}, SizeBudget{3, 2, 3, 10}, SizeBudget{3, 2, 2, 12}}) {
    std::vector<OpetopeCode> big = enumerate_opetopes(bigger);
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
  }
}

TEST_CASE("the soft cap stops runaway enumeration") {
  EnumerationLimits tight;
  tight.soft_cap = 5;
  CHECK_THROWS_AS(enumerate_opetopes(SizeBudget{3, 4, 4, 16}, tight), BudgetExceeded);
}

TEST_CASE("count table") {
  std::vector<CountRow> rows = count_table(3, SizeBudget{2, 2, 2, 8});
  std::map<std::pair<int, std::size_t>, CountRow> at;
  for (const CountRow& r : rows) at[{r.degree, r.sources}] = r;
  CHECK(at.at({0, 0}).tree_count == 1);
  CHECK(at.at({1, 1}).tree_count == 1);
  for (std::size_t m = 0; m <= 2; ++m) CHECK(at.at({2, m}).tree_count == 1);
  for (const CountRow& r : rows) {
    CAPTURE(r.degree);
    CAPTURE(r.sources);
    CHECK(r.match);
    CHECK(r.oracle_count.has_value());
  }
}
