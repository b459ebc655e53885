#pragma once

#include <vector>

#include "netwave/model.hpp"
#include "netwave/periods.hpp"

// Slow reference computations that share no code with the main algorithms
// beyond the relation itself.
namespace netwave::checks {

/// Largest pairwise-interfering subset of `nodes`, by subset enumeration.
int brute_interference_intensity(const PathPair& pair, const std::vector<NodeRef>& nodes);

/// Largest pairwise-concurrent subset of `nodes`, by subset enumeration.
int brute_concurrency_intensity(const PathPair& pair, const std::vector<NodeRef>& nodes);

/// Every phase subset at this spacing is pairwise concurrent.
bool brute_reachable(const PathPair& pair, int path_id, int spacing);

/// Phase phase1 of path 1 and phase phase2 of path 2 are jointly concurrent.
bool brute_joint_entry(const PathPair& pair, int spacing1, int phase1, int spacing2, int phase2);

/// Minimum number of rows plus columns covering every 1-entry.
int brute_min_line_cover(const BinaryMatrix& matrix);

/// Shortest joint period over all beat arrangements in which every phase
/// subset of both paths is activated exactly once, each beat activates one
/// or two subsets (at most one per path) and every beat is interference-free.
/// Works directly on node sets, without the concurrency matrix.
int brute_min_joint_period(const PathPair& pair, int spacing1, int spacing2);

/// All partitions of path `path_id` into exactly `groups` nonempty concurrency
/// subsets, each given as a sorted list of sequence numbers.
std::vector<std::vector<std::vector<int>>> concurrency_partitions(const PathPair& pair, int path_id,
                                                                  int groups);

}  // namespace netwave::checks
