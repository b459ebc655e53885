#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netwave/matching.hpp"
#include "netwave/periods.hpp"
#include "netwave/rational.hpp"

namespace netwave {

enum class ScheduleKind { Primary, PairEqual, PairUnequal };
enum class BeatCategory { Primary, Joint, Path1Only, Path2Only };

std::string to_string(ScheduleKind kind);
std::string to_string(BeatCategory category);

/// One time beat: the equally spaced subsets switched on, at most one per path.
struct Beat {
  std::vector<EquallySpacedSubset> activations;
  BeatCategory category = BeatCategory::Primary;

  bool operator==(const Beat&) const = default;
};

/// How often a path's subsets are each activated per period, and at which spacing.
struct PathPlan {
  int path_id = 1;
  int spacing = 1;
  int activations = 1;

  bool operator==(const PathPlan&) const = default;
};

/// A closed cycle of beats; beat indices wrap modulo `period`.
struct Schedule {
  ScheduleKind kind = ScheduleKind::Primary;
  int period = 1;
  std::vector<Beat> beats;
  std::vector<PathPlan> plans;
  int support_number = 0;  // U* of the (continued) matrix; 0 for primary

  const PathPlan* plan_for(int path_id) const;
  bool operator==(const Schedule&) const = default;
};

/// Single-path wave: beat k activates phase k at the given spacing. Without an
/// explicit period the intrinsic period is used.
Schedule schedule_primary(const PathPair& pair, int path_id,
                          std::optional<int> period = std::nullopt);

/// Equal opportunity: each traversal runs the matched phase pairs, then path-1
/// leftovers, then path-2 leftovers (both ascending); the traversal repeats
/// `repeats` times.
Schedule schedule_pair_equal(const PathPair& pair, int spacing1, int spacing2, int repeats);

/// Unequal opportunity over the repeats1 x repeats2 continuation of the
/// concurrency matrix.
Schedule schedule_pair_unequal(const PathPair& pair, int spacing1, int spacing2, int repeats1,
                               int repeats2);

/// Delivered blocks per beat in steady state: total activations per period
/// over the period.
Rational predicted_throughput(const Schedule& schedule);

struct AuditReport {
  bool valid = true;
  std::vector<std::string> issues;
};

/// Independent check of non-emptiness, concurrency, per-path uniqueness and
/// uniform coverage of all phases.
AuditReport audit_schedule(const PathPair& pair, const Schedule& schedule);

/// Active sender set of each beat.
std::vector<NodeMask> beat_masks(const PathPair& pair, const Schedule& schedule);

/// Rows are senders in (path, seq) order, columns are beats; '#' marks active.
std::string timeline(const PathPair& pair, const Schedule& schedule);

}  // namespace netwave
