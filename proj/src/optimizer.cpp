#include "netwave/optimizer.hpp"

#include <tuple>

#include "netwave/analysis.hpp"
#include "netwave/error.hpp"
#include "netwave/matching.hpp"
#include "netwave/periods.hpp"

namespace netwave {

SearchSpace default_space(const Scenario& scenario) {
  SearchSpace space;
  space.period_range = scenario.search.period_range;
  space.max_activations = scenario.search.max_activations;
  if (scenario.uses_network()) {
    for (auto& [id, list] : route_candidates(scenario)) space.route_candidates.push_back(list);
  } else {
    space.route_candidates.assign(scenario.paths.size(), std::vector<Route>{Route{}});
  }
  return space;
}

bool better_candidate(const Candidate& a, const Candidate& b) {
  if (a.throughput != b.throughput) return a.throughput > b.throughput;
  if (a.period != b.period) return a.period < b.period;
  return std::tie(a.route_index, a.spacing1, a.spacing2, a.repeats1, a.repeats2) <
         std::tie(b.route_index, b.spacing1, b.spacing2, b.repeats1, b.repeats2);
}

namespace {

PathPair candidate_pair(const Scenario& scenario, const SearchSpace& space,
                        const std::vector<int>& index) {
  if (!scenario.uses_network()) return scenario_pair(scenario);
  std::vector<Route> chosen;
  std::vector<PrimaryPath> paths;
  for (std::size_t p = 0; p < index.size(); ++p) {
    chosen.push_back(space.route_candidates[p][static_cast<std::size_t>(index[p])]);
    paths.push_back({static_cast<int>(p) + 1, static_cast<int>(chosen.back().size()) - 1});
  }
  return PathPair(paths, derive_relation(route_topology(scenario, chosen), paths));
}

std::array<int, 2> spacing_range(const SearchSpace& space, const PathPair& pair, int path_id) {
  const int n = pair.path(path_id).n_senders;
  auto it = space.period_range.find(path_id);
  if (it != space.period_range.end()) {
    return {std::max(1, it->second[0]), std::min(n, it->second[1])};
  }
  return {interference_intensity(pair, pair.path_nodes(path_id)).value, n};
}

void evaluate_pair(const PathPair& pair, const SearchSpace& space, const std::vector<int>& index,
                   std::vector<Candidate>& log) {
  const auto r1 = spacing_range(space, pair, 1);
  const auto r2 = spacing_range(space, pair, 2);
  for (int t1 = r1[0]; t1 <= r1[1]; ++t1) {
    for (int t2 = r2[0]; t2 <= r2[1]; ++t2) {
      Candidate base;
      base.route_index = index;
      base.spacing1 = t1;
      base.spacing2 = t2;
      const int bad1 = first_unreachable_phase(pair, 1, t1);
      const int bad2 = first_unreachable_phase(pair, 2, t2);
      if (bad1 != 0 || bad2 != 0) {
        base.note = bad1 != 0 ? "path 1 period " + std::to_string(t1) + " unreachable at phase " +
                                    std::to_string(bad1)
                              : "path 2 period " + std::to_string(t2) + " unreachable at phase " +
                                    std::to_string(bad2);
        log.push_back(base);
        continue;
      }
      const BinaryMatrix c = build_matrix(pair, t1, t2).entries;
      for (int l1 = 1; l1 <= space.max_activations; ++l1) {
        for (int l2 = 1; l2 <= space.max_activations; ++l2) {
          Candidate cand = base;
          cand.repeats1 = l1;
          cand.repeats2 = l2;
          cand.support_number = max_support_set(continuation(c, l1, l2)).size();
          cand.period = l1 * t1 + l2 * t2 - cand.support_number;
          cand.throughput = Rational(l1 + l2, cand.period);
          cand.evaluated = true;
          log.push_back(cand);
        }
      }
    }
  }
}

}  // namespace

OptimizationResult optimize(const Scenario& scenario, const SearchSpace& space) {
  if (space.route_candidates.size() != 2) throw DomainError("optimization needs two paths");
  if (space.max_activations < 1) throw DomainError("max_activations must be at least 1");
  for (const auto& list : space.route_candidates) {
    if (list.empty()) throw DomainError("a path has no candidate routes");
  }

  std::vector<Candidate> log;
  std::vector<int> index(2, 0);
  for (index[0] = 0; index[0] < static_cast<int>(space.route_candidates[0].size()); ++index[0]) {
    for (index[1] = 0; index[1] < static_cast<int>(space.route_candidates[1].size()); ++index[1]) {
      evaluate_pair(candidate_pair(scenario, space, index), space, index, log);
    }
  }

  const Candidate* best = nullptr;
  for (const auto& c : log) {
    if (c.evaluated && (best == nullptr || better_candidate(c, *best))) best = &c;
  }
  if (best == nullptr) throw DomainError("search space contains no reachable candidate");

  PathPair pair = candidate_pair(scenario, space, best->route_index);
  Schedule schedule =
      schedule_pair_unequal(pair, best->spacing1, best->spacing2, best->repeats1, best->repeats2);
  if (schedule.period != best->period) throw InternalError("materialized period differs from search");

  std::vector<Route> routes;
  if (scenario.uses_network()) {
    for (std::size_t p = 0; p < 2; ++p) {
      routes.push_back(space.route_candidates[p][static_cast<std::size_t>(best->route_index[p])]);
    }
  }
  return {std::move(routes), *best, best->throughput, std::move(pair), std::move(schedule), std::move(log)};
}

}  // namespace netwave
