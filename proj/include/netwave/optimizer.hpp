#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netwave/rational.hpp"
#include "netwave/scenario.hpp"
#include "netwave/scheduler.hpp"

namespace netwave {

struct SearchSpace {
  /// One entry per path; a single empty route stands for the scenario's
  /// fixed pair.
  std::vector<std::vector<Route>> route_candidates;
  std::map<int, std::array<int, 2>> period_range;  // missing: [I*, N]
  int max_activations = 4;
};

SearchSpace default_space(const Scenario& scenario);

struct Candidate {
  std::vector<int> route_index;  // 0-based, per path
  int spacing1 = 0;
  int spacing2 = 0;
  int repeats1 = 0;
  int repeats2 = 0;
  int support_number = 0;
  int period = 0;
  Rational throughput;
  bool evaluated = false;
  std::string note;  // reason for skipping

  bool operator==(const Candidate&) const = default;
};

struct OptimizationResult {
  std::vector<Route> best_routes;  // empty for a fixed pair
  Candidate best;
  Rational best_throughput;
  PathPair pair;
  Schedule schedule;
  std::vector<Candidate> search_log;
};

/// Exhaustive evaluation of route x period x activation-count combinations.
/// Ties go to the smaller period, then to the lexicographically smaller
/// (routes, T1, T2, L1, L2). Candidates with an unreachable period are logged
/// and skipped. Throws DomainError when nothing can be evaluated.
OptimizationResult optimize(const Scenario& scenario, const SearchSpace& space);

/// True iff `a` should be preferred over `b`.
bool better_candidate(const Candidate& a, const Candidate& b);

}  // namespace netwave
