#include "netwave/checks/generators.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace netwave::checks {

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<int>(x % span);
}

double Rng::real(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

bool Rng::coin(double p_true) { return real(0.0, 1.0) < p_true; }

namespace {

std::vector<Site> line_sites(Rng& rng, int n_senders, Point start, double angle) {
  std::vector<Site> sites;
  double along = 0.0;
  for (int i = 0; i <= n_senders; ++i) {
    sites.push_back({"", {start.x + along * std::cos(angle), start.y + along * std::sin(angle)}});
    along += rng.real(0.6, 1.6);
  }
  return sites;
}

}  // namespace

GeometricTopology random_line_topology(Rng& rng, int n_senders) {
  GeometricTopology topo;
  topo.routes[1] = line_sites(rng, n_senders, {0.0, 0.0}, 0.0);
  topo.interference_radius = rng.real(0.5, 5.0);
  return topo;
}

PathPair random_line_path(Rng& rng, int max_senders) {
  const int n = rng.uniform(1, max_senders);
  const GeometricTopology topo = random_line_topology(rng, n);
  const std::vector<PrimaryPath> paths{{1, n}};
  return PathPair(paths, derive_relation(topo, paths));
}

GeometricTopology random_pair_topology(Rng& rng, int n1, int n2) {
  GeometricTopology topo;
  topo.interference_radius = rng.real(0.8, 3.5);
  topo.routes[1] = line_sites(rng, n1, {0.0, 0.0}, 0.0);
  const double span = 1.1 * n1;
  Point start;
  double angle = 0.0;
  switch (rng.uniform(0, 2)) {
    case 0:  // far apart or loosely parallel
      start = {rng.real(-2.0, span), rng.real(2.0, 9.0)};
      angle = rng.real(-0.3, 0.3);
      break;
    case 1:  // close parallel, either direction
      start = {rng.real(-1.0, span), rng.real(0.5, 2.5)};
      angle = rng.coin() ? 0.0 : std::numbers::pi;
      if (angle != 0.0) start.x += span;
      break;
    default:  // crossing the first path from below
      start = {rng.real(0.0, span), -rng.real(1.0, 1.2 * n2)};
      angle = rng.real(0.35, std::numbers::pi - 0.35);
      break;
  }
  topo.routes[2] = line_sites(rng, n2, start, angle);
  return topo;
}

PathPair random_geometric_pair(Rng& rng, int max_total) {
  const int n1 = rng.uniform(1, max_total - 1);
  const int n2 = rng.uniform(1, max_total - n1);
  const GeometricTopology topo = random_pair_topology(rng, n1, n2);
  const std::vector<PrimaryPath> paths{{1, n1}, {2, n2}};
  return PathPair(paths, derive_relation(topo, paths));
}

BinaryMatrix random_matrix(Rng& rng, int max_rows, int max_cols) {
  BinaryMatrix m(rng.uniform(1, max_rows), rng.uniform(1, max_cols));
  const double density = rng.real(0.1, 0.9);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m.set(r, c, rng.coin(density));
  }
  return m;
}

PathPair window_path(int n_senders, int width) {
  const std::vector<PrimaryPath> paths{{1, n_senders}};
  return PathPair(paths, InterferenceRelation::from_predicate(
                             {n_senders}, [width](const NodeRef& a, const NodeRef& b) {
                               return std::abs(a.seq - b.seq) < width;
                             }));
}

}  // namespace netwave::checks
