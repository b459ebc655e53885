#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netwave/model.hpp"

namespace netwave {

/// Dense 0/1 matrix, 0-based storage in row-major order.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols, bool value = false);
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool operator()(int r, int c) const { return data_[index(r, c)] != 0; }
  void set(int r, int c, bool v) { data_[index(r, c)] = v ? 1 : 0; }

  bool all_zero() const;
  int count_ones() const;

  /// Rows of '0'/'1' characters separated by newlines.
  std::string to_grid() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Phi'(phase, spacing): senders phase, phase+spacing, ... of one path.
struct EquallySpacedSubset {
  int path_id = 1;
  int phase = 1;
  int spacing = 1;

  auto operator<=>(const EquallySpacedSubset&) const = default;
};

/// Members of Phi'(phase, spacing) in ascending order. Requires
/// 1 <= spacing <= n_senders and 1 <= phase <= spacing.
std::vector<NodeRef> subset_members(const PrimaryPath& path, int phase, int spacing);
std::vector<NodeRef> subset_members(const PathPair& pair, const EquallySpacedSubset& subset);
NodeMask subset_mask(const PathPair& pair, const EquallySpacedSubset& subset);

/// Smallest phase whose subset is not a concurrency subset, or 0 when the
/// spacing is a reachable period.
int first_unreachable_phase(const PathPair& pair, int path_id, int spacing);

bool is_reachable_period(const PathPair& pair, int path_id, int spacing);

/// Smallest reachable period, found by ascending scan. When both spread rules hold
/// for the path the result is cross-checked against I* and InternalError is
/// thrown on mismatch.
int intrinsic_period(const PathPair& pair, int path_id);

/// Joint concurrency coefficients between the phases of path 1 at spacing
/// `spacing1` (rows) and path 2 at `spacing2` (cols).
struct ConcurrencyMatrix {
  int spacing1 = 1;
  int spacing2 = 1;
  BinaryMatrix entries;

  bool operator==(const ConcurrencyMatrix&) const = default;
};

/// Requires a two-path pair and reachable spacings; throws DomainError naming
/// the failing phase otherwise.
ConcurrencyMatrix build_matrix(const PathPair& pair, int spacing1, int spacing2);

/// Block tiling: `repeat_rows` copies vertically, `repeat_cols` horizontally.
BinaryMatrix continuation(const BinaryMatrix& matrix, int repeat_rows, int repeat_cols);

}  // namespace netwave
