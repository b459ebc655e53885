#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace netwave {

/// Bit set over the sending nodes of a pair, indexed in (path_id, seq) order.
using NodeMask = std::uint64_t;

inline constexpr int kMaxSenders = 64;

/// A sending node n(path_id, seq); seq is 1-based along the path.
struct NodeRef {
  int path_id = 1;
  int seq = 1;

  auto operator<=>(const NodeRef&) const = default;
};

std::string to_string(const NodeRef& n);

/// A linear multi-hop route of `n_senders` sending nodes followed by one
/// receive-only destination.
struct PrimaryPath {
  int id = 1;
  int n_senders = 1;

  bool operator==(const PrimaryPath&) const = default;
};

/// Symmetric, irreflexive interference predicate over the senders of one or
/// two paths. Concurrency is its complement on distinct pairs; every node is
/// concurrent with itself.
class InterferenceRelation {
 public:
  InterferenceRelation() = default;

  /// Builds the relation from `interferes(a, b)`, evaluated once per
  /// unordered pair a < b. `sizes[i]` is the sender count of path i+1.
  static InterferenceRelation from_predicate(
      std::vector<int> sizes,
      const std::function<bool(const NodeRef&, const NodeRef&)>& interferes);

  /// Full square boolean matrix over nodes in (path_id, seq) order. The
  /// diagonal must be false and the matrix symmetric.
  static InterferenceRelation from_matrix(std::vector<int> sizes,
                                          const std::vector<std::vector<bool>>& matrix);

  /// List of interfering unordered pairs; every other pair is concurrent.
  static InterferenceRelation from_pairs(std::vector<int> sizes,
                                         std::span<const std::array<NodeRef, 2>> pairs);

  const std::vector<int>& sizes() const { return sizes_; }
  int total() const { return static_cast<int>(adjacency_.size()); }

  bool contains(const NodeRef& n) const;
  int index_of(const NodeRef& n) const;
  NodeRef node_at(int index) const;

  bool interferes(const NodeRef& a, const NodeRef& b) const;
  bool concurrent(const NodeRef& a, const NodeRef& b) const { return !interferes(a, b); }

  /// Nodes interfering with the node at `index`.
  NodeMask conflicts(int index) const { return adjacency_[static_cast<std::size_t>(index)]; }

  bool operator==(const InterferenceRelation&) const = default;

 private:
  InterferenceRelation(std::vector<int> sizes, std::vector<NodeMask> adjacency);

  std::vector<int> sizes_;
  std::vector<NodeMask> adjacency_;
};

/// One path or a pair of paths sharing an interference environment. The
/// single-path form is used for standalone chain analysis.
class PathPair {
 public:
  PathPair(std::vector<PrimaryPath> paths, InterferenceRelation relation);

  int path_count() const { return static_cast<int>(paths_.size()); }
  bool has_path(int id) const;
  const PrimaryPath& path(int id) const;
  const std::vector<PrimaryPath>& paths() const { return paths_; }
  const InterferenceRelation& relation() const { return relation_; }

  int total_senders() const { return relation_.total(); }

  bool interferes(const NodeRef& a, const NodeRef& b) const { return relation_.interferes(a, b); }
  bool concurrent(const NodeRef& a, const NodeRef& b) const { return relation_.concurrent(a, b); }

  NodeMask mask_of(std::span<const NodeRef> nodes) const;
  NodeMask path_mask(int id) const;
  NodeMask all_mask() const;
  std::vector<NodeRef> nodes_of(NodeMask mask) const;
  std::vector<NodeRef> path_nodes(int id) const { return nodes_of(path_mask(id)); }
  std::vector<NodeRef> all_nodes() const { return nodes_of(all_mask()); }

  /// True iff no two distinct members of `mask` interfere.
  bool is_concurrent_mask(NodeMask mask) const;

 private:
  std::vector<PrimaryPath> paths_;
  InterferenceRelation relation_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

double distance(const Point& a, const Point& b);

/// A node position on a route. Nodes sharing a non-empty name are the same
/// physical radio.
struct Site {
  std::string name;
  Point position;

  bool operator==(const Site&) const = default;
};

/// Disk interference model. `routes[id]` lists the n_senders + 1 sites of path
/// `id` from source to destination.
struct GeometricTopology {
  std::map<int, std::vector<Site>> routes;
  double interference_radius = 0.0;
  bool half_duplex = true;

  bool operator==(const GeometricTopology&) const = default;
};

/// Sender a (transmitting to ra) and sender b (to rb) interfere iff a lies
/// within the radius of rb, b lies within the radius of ra, or, with
/// half-duplex radios, the two transmissions share a physical node.
InterferenceRelation derive_relation(const GeometricTopology& topology,
                                     std::span<const PrimaryPath> paths);

/// Throws DomainError on an empty set or foreign node.
bool is_concurrency_subset(const PathPair& pair, std::span<const NodeRef> nodes);

/// Downstream spread: n(j) || n(k) => n(j) || n(k+1).
/// Upstream spread:   n(j) || n(k) => n(j-1) || n(k).
enum class Spread { Downstream, Upstream };

struct RuleViolation {
  Spread kind = Spread::Downstream;
  int j = 0;  // premise pair n(j) || n(k), j < k
  int k = 0;

  bool operator==(const RuleViolation&) const = default;
};

struct RuleReport {
  int path_id = 1;
  bool downstream_holds = true;
  bool upstream_holds = true;
  std::vector<RuleViolation> violations;

  bool holds() const { return downstream_holds && upstream_holds; }
  bool operator==(const RuleReport&) const = default;
};

/// Checks both spread rules for every j < k within one path.
RuleReport validate_path_rules(const PathPair& pair, int path_id);

}  // namespace netwave
