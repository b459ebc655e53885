#pragma once

#include <span>
#include <vector>

#include "netwave/model.hpp"

namespace netwave {

/// Size of an extremal node subset together with one subset attaining it.
struct Intensity {
  int value = 0;
  std::vector<NodeRef> witness;
};

/// I*: size of the largest pairwise-interfering subset (a maximum clique of
/// the interference graph), or 1 when no pair interferes. Among maximum
/// cliques the lexicographically smallest by (path_id, seq) is reported.
Intensity interference_intensity(const PathPair& pair, std::span<const NodeRef> nodes);

/// C*: size of the largest pairwise-concurrent subset (maximum independent set
/// of the interference graph). Same tie-break as interference_intensity.
Intensity concurrency_intensity(const PathPair& pair, std::span<const NodeRef> nodes);

// Mask-level variants used by the higher modules.
NodeMask max_clique_mask(const PathPair& pair, NodeMask candidates);
NodeMask max_independent_mask(const PathPair& pair, NodeMask candidates);

/// Every maximum interference clique of `nodes`, in lexicographic order.
std::vector<std::vector<NodeRef>> maximum_interference_cliques(const PathPair& pair,
                                                               std::span<const NodeRef> nodes);

struct NodeDegree {
  NodeRef node;
  int concurrency = 0;   // concurrent partners, excluding the node itself
  int interference = 0;  // interfering partners
};

struct DegreeReport {
  std::vector<NodeDegree> per_node;
  int intrinsic_concurrency = 0;   // D*_||
  int intrinsic_interference = 0;  // D*_><
};

DegreeReport connection_degrees(const PathPair& pair, std::span<const NodeRef> nodes);

/// True iff the largest interference degree is strictly below I*.
bool is_dominant(const PathPair& pair, std::span<const NodeRef> nodes);

/// Splits a dominant set into exactly I* disjoint concurrency subsets. Groups
/// are seeded with the members of the reported maximum clique; the remaining
/// nodes, ascending, go into the first group they do not conflict with.
/// Throws DomainError("set not dominant") when the precondition fails.
std::vector<std::vector<NodeRef>> split_dominant(const PathPair& pair,
                                                 std::span<const NodeRef> nodes);

/// True iff every maximum interference clique of the path is a run of
/// consecutive sequence numbers. Requires both spread rules to hold for the path.
bool check_continuity(const PathPair& pair, int path_id);

struct IntensityReport {
  int interference_intensity = 1;
  int concurrency_intensity = 1;
  int intrinsic_interference_degree = 0;
  int intrinsic_concurrency_degree = 0;
  bool dominant = true;
  std::vector<NodeRef> witness_interference_set;
  std::vector<NodeRef> witness_concurrency_set;
  std::vector<NodeDegree> degrees;
};

IntensityReport analyze_set(const PathPair& pair, std::span<const NodeRef> nodes);

}  // namespace netwave
