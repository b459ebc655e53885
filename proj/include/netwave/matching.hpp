#pragma once

#include <string>
#include <vector>

#include "netwave/periods.hpp"

namespace netwave {

/// A 1-based (row, col) position in a binary matrix.
struct Cell {
  int row = 1;
  int col = 1;

  auto operator<=>(const Cell&) const = default;
};

/// Supporting elements of a binary matrix: 1-entries with pairwise distinct
/// rows and columns that together share a row or column with every 1-entry.
/// Such a set is exactly a maximal matching of the row/column bipartite graph,
/// so a maximum one is a maximum matching (see docs/support-sets.md).
struct SupportSet {
  std::vector<Cell> elements;

  int size() const { return static_cast<int>(elements.size()); }
  bool operator==(const SupportSet&) const = default;
};

struct SupportViolation {
  enum class Kind { NotAOne, Uncovered, SharedRow, SharedCol };
  Kind kind;
  Cell cell;
  std::string message;
};

struct SupportCheck {
  bool valid = true;
  std::vector<SupportViolation> violations;
};

/// Checks the three supporting-set conditions. Throws DomainError when a
/// candidate index lies outside the matrix.
SupportCheck validate_support_set(const BinaryMatrix& matrix, const SupportSet& candidate);

/// Maximum supporting set via augmenting paths. Rows are processed in
/// ascending order and each augmenting search tries columns in ascending
/// order; elements are reported sorted by row.
SupportSet max_support_set(const BinaryMatrix& matrix);

/// U* by exhaustive enumeration of row/column-distinct sets of 1-entries,
/// filtered through validate_support_set. Requires rows * cols <= 30.
int brute_force_max_support(const BinaryMatrix& matrix);

}  // namespace netwave
