#include "netwave/periods.hpp"

#include <algorithm>

#include "netwave/analysis.hpp"
#include "netwave/error.hpp"

namespace netwave {

BinaryMatrix::BinaryMatrix(int rows, int cols, bool value) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be nonnegative");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), value ? 1 : 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  BinaryMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw DomainError("matrix rows have different lengths");
    }
    for (int j = 0; j < c; ++j) {
      const int v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != 0 && v != 1) throw DomainError("binary matrix entries must be 0 or 1");
      m.set(i, j, v == 1);
    }
  }
  return m;
}

std::size_t BinaryMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

bool BinaryMatrix::all_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v == 0; });
}

int BinaryMatrix::count_ones() const {
  return static_cast<int>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

std::string BinaryMatrix::to_grid() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.push_back((*this)(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::vector<NodeRef> subset_members(const PrimaryPath& path, int phase, int spacing) {
  if (spacing < 1 || spacing > path.n_senders) {
    throw DomainError("spacing " + std::to_string(spacing) + " outside [1, " +
                      std::to_string(path.n_senders) + "]");
  }
  if (phase < 1 || phase > spacing) {
    throw DomainError("phase " + std::to_string(phase) + " outside [1, " + std::to_string(spacing) +
                      "]");
  }
  std::vector<NodeRef> out;
  for (int j = phase; j <= path.n_senders; j += spacing) out.push_back({path.id, j});
  return out;
}

std::vector<NodeRef> subset_members(const PathPair& pair, const EquallySpacedSubset& subset) {
  return subset_members(pair.path(subset.path_id), subset.phase, subset.spacing);
}

NodeMask subset_mask(const PathPair& pair, const EquallySpacedSubset& subset) {
  return pair.mask_of(subset_members(pair, subset));
}

int first_unreachable_phase(const PathPair& pair, int path_id, int spacing) {
  const PrimaryPath& path = pair.path(path_id);
  for (int phase = 1; phase <= spacing; ++phase) {
    if (!pair.is_concurrent_mask(pair.mask_of(subset_members(path, phase, spacing)))) return phase;
  }
  return 0;
}

bool is_reachable_period(const PathPair& pair, int path_id, int spacing) {
  return first_unreachable_phase(pair, path_id, spacing) == 0;
}

int intrinsic_period(const PathPair& pair, int path_id) {
  const int n = pair.path(path_id).n_senders;
  int found = 0;
  for (int t = 1; t <= n; ++t) {
    if (is_reachable_period(pair, path_id, t)) {
      found = t;
      break;
    }
  }
  if (found == 0) {
    // Spacing n gives singleton phases, which are always concurrency subsets.
    throw InternalError("no reachable period on path " + std::to_string(path_id));
  }
  if (validate_path_rules(pair, path_id).holds()) {
    const int istar = interference_intensity(pair, pair.path_nodes(path_id)).value;
    if (istar != found) {
      throw InternalError("intrinsic period " + std::to_string(found) +
                          " differs from interference intensity " + std::to_string(istar) +
                          " on path " + std::to_string(path_id));
    }
  }
  return found;
}

ConcurrencyMatrix build_matrix(const PathPair& pair, int spacing1, int spacing2) {
  if (pair.path_count() != 2) throw DomainError("joint matrix needs a pair of paths");
  const int spacings[2] = {spacing1, spacing2};
  for (int id = 1; id <= 2; ++id) {
    const int t = spacings[id - 1];
    // subset_members validates the range.
    const int bad = first_unreachable_phase(pair, id, t);
    if (bad != 0) {
      throw DomainError("spacing " + std::to_string(t) + " is not reachable on path " +
                        std::to_string(id) + ": phase " + std::to_string(bad) +
                        " is not a concurrency subset");
    }
  }
  ConcurrencyMatrix out{spacing1, spacing2, BinaryMatrix(spacing1, spacing2)};
  for (int r = 1; r <= spacing1; ++r) {
    const NodeMask m1 = subset_mask(pair, {1, r, spacing1});
    for (int c = 1; c <= spacing2; ++c) {
      out.entries.set(r - 1, c - 1, pair.is_concurrent_mask(m1 | subset_mask(pair, {2, c, spacing2})));
    }
  }
  return out;
}

BinaryMatrix continuation(const BinaryMatrix& matrix, int repeat_rows, int repeat_cols) {
  if (repeat_rows < 1 || repeat_cols < 1) throw DomainError("continuation counts must be >= 1");
  BinaryMatrix out(matrix.rows() * repeat_rows, matrix.cols() * repeat_cols);
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) out.set(r, c, matrix(r % matrix.rows(), c % matrix.cols()));
  }
  return out;
}

}  // namespace netwave
