#include "netwave/model.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "netwave/error.hpp"

namespace netwave {

std::string to_string(const NodeRef& n) {
  return "n(" + std::to_string(n.path_id) + "," + std::to_string(n.seq) + ")";
}

namespace {

void check_sizes(const std::vector<int>& sizes) {
  if (sizes.empty() || sizes.size() > 2) {
    throw DomainError("a relation covers one or two paths");
  }
  int total = 0;
  for (int n : sizes) {
    if (n < 1) throw DomainError("every path needs at least one sending node");
    total += n;
  }
  if (total > kMaxSenders) {
    throw DomainError("at most " + std::to_string(kMaxSenders) + " sending nodes are supported");
  }
}

NodeMask bit(int index) { return NodeMask{1} << index; }

}  // namespace

InterferenceRelation::InterferenceRelation(std::vector<int> sizes, std::vector<NodeMask> adjacency)
    : sizes_(std::move(sizes)), adjacency_(std::move(adjacency)) {}

InterferenceRelation InterferenceRelation::from_predicate(
    std::vector<int> sizes, const std::function<bool(const NodeRef&, const NodeRef&)>& interferes) {
  check_sizes(sizes);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  InterferenceRelation rel(sizes, std::vector<NodeMask>(static_cast<std::size_t>(total), 0));
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      if (interferes(rel.node_at(a), rel.node_at(b))) {
        rel.adjacency_[static_cast<std::size_t>(a)] |= bit(b);
        rel.adjacency_[static_cast<std::size_t>(b)] |= bit(a);
      }
    }
  }
  return rel;
}

InterferenceRelation InterferenceRelation::from_matrix(std::vector<int> sizes,
                                                       const std::vector<std::vector<bool>>& matrix) {
  check_sizes(sizes);
  const auto total = static_cast<std::size_t>(std::accumulate(sizes.begin(), sizes.end(), 0));
  if (matrix.size() != total) {
    throw DomainError("relation matrix has " + std::to_string(matrix.size()) + " rows, expected " +
                      std::to_string(total));
  }
  for (std::size_t i = 0; i < total; ++i) {
    if (matrix[i].size() != total) {
      throw DomainError("relation matrix row " + std::to_string(i) + " has wrong length");
    }
    if (matrix[i][i]) throw DomainError("relation matrix diagonal must be false");
    for (std::size_t j = 0; j < i; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        throw DomainError("relation matrix is not symmetric at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
    }
  }
  const int offset2 = sizes[0];
  return from_predicate(std::move(sizes), [&matrix, offset2](const NodeRef& a, const NodeRef& b) {
    auto idx = [offset2](const NodeRef& n) {
      return static_cast<std::size_t>((n.path_id == 1 ? 0 : offset2) + n.seq - 1);
    };
    return static_cast<bool>(matrix[idx(a)][idx(b)]);
  });
}

InterferenceRelation InterferenceRelation::from_pairs(std::vector<int> sizes,
                                                      std::span<const std::array<NodeRef, 2>> pairs) {
  check_sizes(sizes);
  InterferenceRelation rel =
      from_predicate(sizes, [](const NodeRef&, const NodeRef&) { return false; });
  for (const auto& [a, b] : pairs) {
    if (!rel.contains(a) || !rel.contains(b)) {
      throw DomainError("interfering pair names unknown node " +
                        to_string(rel.contains(a) ? b : a));
    }
    if (a == b) throw DomainError("a node cannot interfere with itself: " + to_string(a));
    const int ia = rel.index_of(a);
    const int ib = rel.index_of(b);
    rel.adjacency_[static_cast<std::size_t>(ia)] |= bit(ib);
    rel.adjacency_[static_cast<std::size_t>(ib)] |= bit(ia);
  }
  return rel;
}

bool InterferenceRelation::contains(const NodeRef& n) const {
  return n.path_id >= 1 && n.path_id <= static_cast<int>(sizes_.size()) && n.seq >= 1 &&
         n.seq <= sizes_[static_cast<std::size_t>(n.path_id - 1)];
}

int InterferenceRelation::index_of(const NodeRef& n) const {
  if (!contains(n)) throw DomainError("unknown node " + to_string(n));
  return (n.path_id == 1 ? 0 : sizes_[0]) + n.seq - 1;
}

NodeRef InterferenceRelation::node_at(int index) const {
  if (index < 0 || index >= total()) throw DomainError("node index out of range");
  if (index < sizes_[0]) return {1, index + 1};
  return {2, index - sizes_[0] + 1};
}

bool InterferenceRelation::interferes(const NodeRef& a, const NodeRef& b) const {
  return (conflicts(index_of(a)) & bit(index_of(b))) != 0;
}

PathPair::PathPair(std::vector<PrimaryPath> paths, InterferenceRelation relation)
    : paths_(std::move(paths)), relation_(std::move(relation)) {
  if (paths_.empty() || paths_.size() > 2) throw DomainError("expected one or two paths");
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    if (paths_[i].id != static_cast<int>(i) + 1) {
      throw DomainError("paths must be numbered 1 and 2 in order");
    }
    if (paths_[i].n_senders < 1) {
      throw DomainError("path " + std::to_string(paths_[i].id) + " has no sending nodes");
    }
  }
  if (relation_.sizes().size() != paths_.size()) {
    throw DomainError("relation covers a different number of paths");
  }
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    if (relation_.sizes()[i] != paths_[i].n_senders) {
      throw DomainError("relation size for path " + std::to_string(i + 1) +
                        " does not match its sender count");
    }
  }
}

bool PathPair::has_path(int id) const { return id >= 1 && id <= path_count(); }

const PrimaryPath& PathPair::path(int id) const {
  if (!has_path(id)) throw DomainError("no path with id " + std::to_string(id));
  return paths_[static_cast<std::size_t>(id - 1)];
}

NodeMask PathPair::mask_of(std::span<const NodeRef> nodes) const {
  NodeMask m = 0;
  for (const auto& n : nodes) m |= bit(relation_.index_of(n));
  return m;
}

NodeMask PathPair::path_mask(int id) const {
  const int n = path(id).n_senders;
  const int offset = id == 1 ? 0 : paths_[0].n_senders;
  const NodeMask ones = n == 64 ? ~NodeMask{0} : (bit(n) - 1);
  return ones << offset;
}

NodeMask PathPair::all_mask() const {
  NodeMask m = 0;
  for (const auto& p : paths_) m |= path_mask(p.id);
  return m;
}

std::vector<NodeRef> PathPair::nodes_of(NodeMask mask) const {
  std::vector<NodeRef> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    out.push_back(relation_.node_at(i));
    mask &= mask - 1;
  }
  return out;
}

bool PathPair::is_concurrent_mask(NodeMask mask) const {
  for (NodeMask rest = mask; rest != 0; rest &= rest - 1) {
    if ((relation_.conflicts(std::countr_zero(rest)) & mask) != 0) return false;
  }
  return true;
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

InterferenceRelation derive_relation(const GeometricTopology& topology,
                                     std::span<const PrimaryPath> paths) {
  if (topology.interference_radius < 0.0 || std::isnan(topology.interference_radius)) {
    throw ConfigError("interference_radius must be nonnegative");
  }
  std::vector<int> sizes;
  for (const auto& p : paths) {
    auto it = topology.routes.find(p.id);
    if (it == topology.routes.end()) {
      throw ConfigError("missing positions for path " + std::to_string(p.id));
    }
    const auto have = static_cast<int>(it->second.size());
    if (have < p.n_senders + 1) {
      // The first absent node is the one to report.
      const std::string what = have == p.n_senders
                                   ? "destination of path " + std::to_string(p.id)
                                   : to_string(NodeRef{p.id, have + 1});
      throw ConfigError("missing position for " + what);
    }
    if (have > p.n_senders + 1) {
      throw ConfigError("path " + std::to_string(p.id) + " lists " + std::to_string(have) +
                        " positions, expected " + std::to_string(p.n_senders + 1));
    }
    sizes.push_back(p.n_senders);
  }

  auto site = [&](int path_id, int index) -> const Site& {
    return topology.routes.at(path_id)[static_cast<std::size_t>(index - 1)];
  };
  auto same_radio = [&](int pa, int ia, int pb, int ib) {
    const Site& a = site(pa, ia);
    const Site& b = site(pb, ib);
    if (!a.name.empty() || !b.name.empty()) return a.name == b.name;
    return pa == pb && ia == ib;
  };
  const double r = topology.interference_radius;

  return InterferenceRelation::from_predicate(sizes, [&](const NodeRef& a, const NodeRef& b) {
    const Point& tx_a = site(a.path_id, a.seq).position;
    const Point& rx_a = site(a.path_id, a.seq + 1).position;
    const Point& tx_b = site(b.path_id, b.seq).position;
    const Point& rx_b = site(b.path_id, b.seq + 1).position;
    if (distance(tx_a, rx_b) <= r || distance(tx_b, rx_a) <= r) return true;
    if (!topology.half_duplex) return false;
    return same_radio(a.path_id, a.seq, b.path_id, b.seq) ||
           same_radio(a.path_id, a.seq + 1, b.path_id, b.seq + 1) ||
           same_radio(a.path_id, a.seq + 1, b.path_id, b.seq) ||
           same_radio(b.path_id, b.seq + 1, a.path_id, a.seq);
  });
}

bool is_concurrency_subset(const PathPair& pair, std::span<const NodeRef> nodes) {
  if (nodes.empty()) throw DomainError("concurrency check needs a nonempty node set");
  return pair.is_concurrent_mask(pair.mask_of(nodes));
}

RuleReport validate_path_rules(const PathPair& pair, int path_id) {
  const int n = pair.path(path_id).n_senders;
  RuleReport report;
  report.path_id = path_id;
  auto node = [path_id](int seq) { return NodeRef{path_id, seq}; };
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (!pair.concurrent(node(j), node(k))) continue;
      if (k + 1 <= n && pair.interferes(node(j), node(k + 1))) {
        report.downstream_holds = false;
        report.violations.push_back({Spread::Downstream, j, k});
      }
      if (j - 1 >= 1 && pair.interferes(node(j - 1), node(k))) {
        report.upstream_holds = false;
        report.violations.push_back({Spread::Upstream, j, k});
      }
    }
  }
  return report;
}

}  // namespace netwave
