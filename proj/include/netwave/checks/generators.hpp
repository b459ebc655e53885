#pragma once

#include <cstdint>
#include <random>

#include "netwave/model.hpp"
#include "netwave/periods.hpp"

namespace netwave::checks {

/// Seeded source for every randomized instance; identical seeds give
/// identical corpora on every platform (no std::*_distribution involved).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  /// Uniform real in [lo, hi) with 53-bit resolution.
  double real(double lo, double hi);
  bool coin(double p_true = 0.5);

 private:
  std::mt19937_64 engine_;
};

/// One path of n senders on the x axis with random gaps and radius.
GeometricTopology random_line_topology(Rng& rng, int n_senders);
PathPair random_line_path(Rng& rng, int max_senders);

/// Two straight, randomly placed paths in the plane. Their positions are
/// drawn so that far-apart, parallel and crossing layouts all occur.
GeometricTopology random_pair_topology(Rng& rng, int n1, int n2);
PathPair random_geometric_pair(Rng& rng, int max_total);

BinaryMatrix random_matrix(Rng& rng, int max_rows, int max_cols);

/// Senders j, k of one n-sender path interfere iff |j - k| < width.
PathPair window_path(int n_senders, int width);

}  // namespace netwave::checks
