#include "netwave/matching.hpp"

#include <algorithm>

#include "netwave/error.hpp"

namespace netwave {

namespace {

std::string describe(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

class Augmenter {
 public:
  explicit Augmenter(const BinaryMatrix& m)
      : m_(m), col_owner_(static_cast<std::size_t>(m.cols()), -1) {}

  int run() {
    int size = 0;
    for (int r = 0; r < m_.rows(); ++r) {
      visited_.assign(static_cast<std::size_t>(m_.cols()), false);
      if (augment(r)) ++size;
    }
    return size;
  }

  const std::vector<int>& col_owner() const { return col_owner_; }

 private:
  bool augment(int r) {
    for (int c = 0; c < m_.cols(); ++c) {
      if (!m_(r, c) || visited_[static_cast<std::size_t>(c)]) continue;
      visited_[static_cast<std::size_t>(c)] = true;
      const int owner = col_owner_[static_cast<std::size_t>(c)];
      if (owner < 0 || augment(owner)) {
        col_owner_[static_cast<std::size_t>(c)] = r;
        return true;
      }
    }
    return false;
  }

  const BinaryMatrix& m_;
  std::vector<int> col_owner_;
  std::vector<bool> visited_;
};

}  // namespace

SupportCheck validate_support_set(const BinaryMatrix& matrix, const SupportSet& candidate) {
  SupportCheck check;
  auto fail = [&check](SupportViolation::Kind kind, Cell cell, std::string msg) {
    check.valid = false;
    check.violations.push_back({kind, cell, std::move(msg)});
  };

  std::vector<int> row_uses(static_cast<std::size_t>(matrix.rows()), 0);
  std::vector<int> col_uses(static_cast<std::size_t>(matrix.cols()), 0);
  for (const Cell& c : candidate.elements) {
    if (c.row < 1 || c.row > matrix.rows() || c.col < 1 || c.col > matrix.cols()) {
      throw DomainError("supporting element " + describe(c) + " outside a " +
                        std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                        " matrix");
    }
    if (!matrix(c.row - 1, c.col - 1)) fail(SupportViolation::Kind::NotAOne, c, "element " + describe(c) + " is a zero entry");
    if (++row_uses[static_cast<std::size_t>(c.row - 1)] == 2) {
      fail(SupportViolation::Kind::SharedRow, c, "duplicate row " + std::to_string(c.row));
    }
    if (++col_uses[static_cast<std::size_t>(c.col - 1)] == 2) {
      fail(SupportViolation::Kind::SharedCol, c, "duplicate column " + std::to_string(c.col));
    }
  }
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      if (matrix(r, c) && row_uses[static_cast<std::size_t>(r)] == 0 &&
          col_uses[static_cast<std::size_t>(c)] == 0) {
        const Cell cell{r + 1, c + 1};
        fail(SupportViolation::Kind::Uncovered, cell, "entry " + describe(cell) + " uncovered");
      }
    }
  }
  return check;
}

SupportSet max_support_set(const BinaryMatrix& matrix) {
  Augmenter aug(matrix);
  aug.run();
  SupportSet out;
  const auto& owner = aug.col_owner();
  for (int c = 0; c < matrix.cols(); ++c) {
    if (owner[static_cast<std::size_t>(c)] >= 0) out.elements.push_back({owner[static_cast<std::size_t>(c)] + 1, c + 1});
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

int brute_force_max_support(const BinaryMatrix& matrix) {
  if (matrix.rows() * matrix.cols() > 30) {
    throw DomainError("brute-force support search limited to rows*cols <= 30");
  }
  int best = 0;
  SupportSet current;
  std::vector<bool> col_used(static_cast<std::size_t>(matrix.cols()), false);
  // Each row contributes nothing or one 1-entry in an unused column.
  auto visit = [&](auto&& self, int r) -> void {
    if (r == matrix.rows()) {
      if (current.size() > best && validate_support_set(matrix, current).valid) best = current.size();
      return;
    }
    self(self, r + 1);
    for (int c = 0; c < matrix.cols(); ++c) {
      if (!matrix(r, c) || col_used[static_cast<std::size_t>(c)]) continue;
      col_used[static_cast<std::size_t>(c)] = true;
      current.elements.push_back({r + 1, c + 1});
      self(self, r + 1);
      current.elements.pop_back();
      col_used[static_cast<std::size_t>(c)] = false;
    }
  };
  visit(visit, 0);
  return best;
}

}  // namespace netwave
