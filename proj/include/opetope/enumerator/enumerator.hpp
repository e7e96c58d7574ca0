#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "opetope/codec/codec.hpp"
#include "opetope/core/shapes.hpp"

namespace opetope {

// Bounds for the tree enumerator.  Every opetope involved (the result and,
// recursively, every node decoration) has at most max_arity sources; the
// result has at most max_top_cells sources and at most max_total_cells cells.
struct SizeBudget {
  int degree = 2;
  std::size_t max_top_cells = 4;
  std::size_t max_arity = 3;
  std::size_t max_total_cells = 12;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ProfileTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationLimits {
  std::size_t soft_cap = 100000;     // candidate trees per degree
  std::size_t oracle_cell_cap = 9;   // cells in an oracle profile
};

std::vector<OpetopeCode> enumerate_opetopes(const SizeBudget& budget, const EnumerationLimits& limits = {});

// Brute force over all generator and diamond assignments on a fixed number
// of cells per degree, filtered by the axioms and deduplicated by
// isomorphism search.
std::vector<Opetope> oracle_enumerate(const std::vector<std::size_t>& profile, const EnumerationLimits& limits = {});

// All cell profiles of opetopes of the given degree with at most max_cells cells.
std::vector<std::vector<std::size_t>> profiles(int degree, std::size_t max_cells);

struct CountRow {
  int degree = 0;
  std::size_t sources = 0;
  std::size_t tree_count = 0;
  std::optional<std::size_t> oracle_count;
  bool match = true;
};

// Counts per degree and number of sources.  The oracle column is filled
// when the cell budget is within the oracle cap.
std::vector<CountRow> count_table(int max_degree, const SizeBudget& budget, const EnumerationLimits& limits = {});

std::size_t source_count(const OpetopeCode& code);

}  // namespace opetope
