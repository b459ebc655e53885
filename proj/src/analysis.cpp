#include "netwave/analysis.hpp"

#include <algorithm>
#include <bit>

#include "netwave/error.hpp"

namespace netwave {

namespace {

constexpr NodeMask bit(int i) { return NodeMask{1} << i; }

// Include-first search over ascending indices: the first maximum-size set
// reached is the lexicographically smallest one.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<NodeMask> adjacency) : adj_(std::move(adjacency)) {}

  NodeMask maximum(NodeMask candidates) {
    best_ = 0;
    best_size_ = 0;
    grow(0, 0, candidates);
    return best_;
  }

  std::vector<NodeMask> all_of_size(NodeMask candidates, int target) {
    found_.clear();
    target_ = target;
    collect(0, 0, candidates);
    return found_;
  }

 private:
  void grow(NodeMask current, int size, NodeMask candidates) {
    if (candidates == 0) {
      if (size > best_size_) {
        best_ = current;
        best_size_ = size;
      }
      return;
    }
    if (size + std::popcount(candidates) <= best_size_) return;
    const int v = std::countr_zero(candidates);
    grow(current | bit(v), size + 1, candidates & adj_[static_cast<std::size_t>(v)]);
    grow(current, size, candidates & ~bit(v));
  }

  void collect(NodeMask current, int size, NodeMask candidates) {
    if (size == target_) {
      found_.push_back(current);
      return;
    }
    if (size + std::popcount(candidates) < target_) return;
    const int v = std::countr_zero(candidates);
    collect(current | bit(v), size + 1, candidates & adj_[static_cast<std::size_t>(v)]);
    collect(current, size, candidates & ~bit(v));
  }

  std::vector<NodeMask> adj_;
  NodeMask best_ = 0;
  int best_size_ = 0;
  int target_ = 0;
  std::vector<NodeMask> found_;
};

std::vector<NodeMask> interference_adjacency(const PathPair& pair) {
  std::vector<NodeMask> adj(static_cast<std::size_t>(pair.total_senders()));
  for (int i = 0; i < pair.total_senders(); ++i) {
    adj[static_cast<std::size_t>(i)] = pair.relation().conflicts(i);
  }
  return adj;
}

std::vector<NodeMask> concurrency_adjacency(const PathPair& pair) {
  const NodeMask all = pair.all_mask();
  std::vector<NodeMask> adj(static_cast<std::size_t>(pair.total_senders()));
  for (int i = 0; i < pair.total_senders(); ++i) {
    adj[static_cast<std::size_t>(i)] = all & ~pair.relation().conflicts(i) & ~bit(i);
  }
  return adj;
}

NodeMask nonempty_mask(const PathPair& pair, std::span<const NodeRef> nodes) {
  if (nodes.empty()) throw DomainError("node set must be nonempty");
  return pair.mask_of(nodes);
}

}  // namespace

NodeMask max_clique_mask(const PathPair& pair, NodeMask candidates) {
  return CliqueSearch(interference_adjacency(pair)).maximum(candidates);
}

NodeMask max_independent_mask(const PathPair& pair, NodeMask candidates) {
  return CliqueSearch(concurrency_adjacency(pair)).maximum(candidates);
}

Intensity interference_intensity(const PathPair& pair, std::span<const NodeRef> nodes) {
  const NodeMask best = max_clique_mask(pair, nonempty_mask(pair, nodes));
  return {std::popcount(best), pair.nodes_of(best)};
}

Intensity concurrency_intensity(const PathPair& pair, std::span<const NodeRef> nodes) {
  const NodeMask best = max_independent_mask(pair, nonempty_mask(pair, nodes));
  return {std::popcount(best), pair.nodes_of(best)};
}

std::vector<std::vector<NodeRef>> maximum_interference_cliques(const PathPair& pair,
                                                               std::span<const NodeRef> nodes) {
  const NodeMask mask = nonempty_mask(pair, nodes);
  CliqueSearch search(interference_adjacency(pair));
  const int target = std::popcount(search.maximum(mask));
  std::vector<std::vector<NodeRef>> out;
  for (NodeMask m : search.all_of_size(mask, target)) out.push_back(pair.nodes_of(m));
  return out;
}

DegreeReport connection_degrees(const PathPair& pair, std::span<const NodeRef> nodes) {
  DegreeReport report;
  if (nodes.empty()) return report;
  const NodeMask mask = pair.mask_of(nodes);
  for (const NodeRef& n : pair.nodes_of(mask)) {
    const int i = pair.relation().index_of(n);
    const int interfering = std::popcount(pair.relation().conflicts(i) & mask);
    const int others = std::popcount(mask & ~bit(i));
    NodeDegree d{n, others - interfering, interfering};
    report.intrinsic_concurrency = std::max(report.intrinsic_concurrency, d.concurrency);
    report.intrinsic_interference = std::max(report.intrinsic_interference, d.interference);
    report.per_node.push_back(d);
  }
  return report;
}

bool is_dominant(const PathPair& pair, std::span<const NodeRef> nodes) {
  return connection_degrees(pair, nodes).intrinsic_interference <
         interference_intensity(pair, nodes).value;
}

std::vector<std::vector<NodeRef>> split_dominant(const PathPair& pair,
                                                 std::span<const NodeRef> nodes) {
  if (!is_dominant(pair, nodes)) throw DomainError("set not dominant");
  const NodeMask mask = pair.mask_of(nodes);
  const NodeMask seeds = max_clique_mask(pair, mask);

  std::vector<NodeMask> groups;
  for (NodeMask s = seeds; s != 0; s &= s - 1) groups.push_back(bit(std::countr_zero(s)));

  for (NodeMask rest = mask & ~seeds; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const NodeMask conflicts = pair.relation().conflicts(v);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [conflicts](NodeMask g) { return (g & conflicts) == 0; });
    if (it == groups.end()) {
      throw InternalError("dominant split failed to place " + to_string(pair.relation().node_at(v)));
    }
    *it |= bit(v);
  }

  std::vector<std::vector<NodeRef>> out;
  out.reserve(groups.size());
  for (NodeMask g : groups) out.push_back(pair.nodes_of(g));
  return out;
}

bool check_continuity(const PathPair& pair, int path_id) {
  if (!validate_path_rules(pair, path_id).holds()) {
    throw DomainError("continuity check requires both spread rules on path " + std::to_string(path_id));
  }
  const auto nodes = pair.path_nodes(path_id);
  for (const auto& clique : maximum_interference_cliques(pair, nodes)) {
    for (std::size_t i = 1; i < clique.size(); ++i) {
      if (clique[i].seq != clique[i - 1].seq + 1) return false;
    }
  }
  return true;
}

IntensityReport analyze_set(const PathPair& pair, std::span<const NodeRef> nodes) {
  const Intensity inter = interference_intensity(pair, nodes);
  const Intensity conc = concurrency_intensity(pair, nodes);
  DegreeReport degrees = connection_degrees(pair, nodes);
  IntensityReport r;
  r.interference_intensity = inter.value;
  r.concurrency_intensity = conc.value;
  r.intrinsic_interference_degree = degrees.intrinsic_interference;
  r.intrinsic_concurrency_degree = degrees.intrinsic_concurrency;
  r.dominant = degrees.intrinsic_interference < inter.value;
  r.witness_interference_set = inter.witness;
  r.witness_concurrency_set = conc.witness;
  r.degrees = std::move(degrees.per_node);
  return r;
}

}  // namespace netwave
