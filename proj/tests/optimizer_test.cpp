#include "netwave/optimizer.hpp"

#include <gtest/gtest.h>

#include "netwave/analysis.hpp"
#include "netwave/error.hpp"
#include "netwave/simulator.hpp"
#include "test_support.hpp"

namespace netwave {
namespace {

Scenario fixed(const PathPair& p) {
  Scenario s;
  s.paths = p.paths();
  s.relation = p.relation();
  return s;
}

SearchSpace space_for(const Scenario& s, std::map<int, std::array<int, 2>> ranges, int max_l) {
  SearchSpace space = default_space(s);
  space.period_range = std::move(ranges);
  space.max_activations = max_l;
  return space;
}

Scenario grid() { return load_scenario(std::string(NETWAVE_SCENARIO_DIR) + "/grid_routes.json"); }

TEST(Optimize, FarPairAllJoint) {
  const Scenario s = fixed(test::far_pair(6, 3, 6, 3));
  const OptimizationResult r = optimize(s, space_for(s, {{1, {3, 3}}, {2, {3, 3}}}, 1));
  EXPECT_EQ(r.best_throughput, Rational(2, 3));
  EXPECT_EQ(r.best.period, 3);
  EXPECT_EQ(r.best.support_number, 3);
  EXPECT_TRUE(r.best_routes.empty());
  EXPECT_EQ(r.search_log.size(), 1U);
}

TEST(Optimize, SerialPairFavoursTheShorterPeriod) {
  // With no joint beats the throughput is (L1+L2)/(3 L1 + 2 L2), largest at L1=1, L2=2.
  const Scenario s = fixed(test::blocking_pair(6, 3, 4, 2));
  const OptimizationResult r = optimize(s, space_for(s, {}, 2));
  EXPECT_EQ(r.best_throughput, Rational(3, 7));
  EXPECT_EQ(r.best.spacing1, 3);
  EXPECT_EQ(r.best.spacing2, 2);
  EXPECT_EQ(r.best.repeats1, 1);
  EXPECT_EQ(r.best.repeats2, 2);
  EXPECT_EQ(r.best.support_number, 0);
  const auto once = optimize(s, space_for(s, {}, 1));
  EXPECT_EQ(once.best_throughput, Rational(2, 5));
}

TEST(Optimize, SingleCandidateMatchesDirectSchedule) {
  const PathPair p = test::windowed_pair(4, 2, 6, 3, [](int a, int) { return a % 2 == 0; });
  const Scenario s = fixed(p);
  const OptimizationResult r = optimize(s, space_for(s, {{1, {2, 2}}, {2, {3, 3}}}, 1));
  const Schedule direct = schedule_pair_unequal(p, 2, 3, 1, 1);
  EXPECT_EQ(r.schedule, direct);
  EXPECT_EQ(r.best_throughput, predicted_throughput(direct));
  EXPECT_EQ(r.best.period, direct.period);
  EXPECT_EQ(r.best.support_number, direct.support_number);
}

TEST(Optimize, TieBreakPrefersSmallerPeriodThenParameters) {
  Candidate a{{0, 0}, 2, 2, 1, 1, 2, 2, Rational(1), true, ""};
  Candidate b = a;
  b.repeats1 = b.repeats2 = 2;
  b.period = 4;
  EXPECT_TRUE(better_candidate(a, b));
  EXPECT_FALSE(better_candidate(b, a));
  Candidate c = a;
  c.spacing2 = 3;
  EXPECT_TRUE(better_candidate(a, c));
  Candidate d = a;
  d.throughput = Rational(3, 2);
  EXPECT_TRUE(better_candidate(d, a));
  EXPECT_FALSE(better_candidate(a, a));
}

TEST(Optimize, UnreachablePeriodsAreLogged) {
  const Scenario s = fixed(test::far_pair(6, 3, 6, 3));
  const OptimizationResult r = optimize(s, space_for(s, {{1, {2, 3}}, {2, {3, 3}}}, 1));
  ASSERT_EQ(r.search_log.size(), 2U);
  EXPECT_FALSE(r.search_log[0].evaluated);
  EXPECT_EQ(r.search_log[0].note, "path 1 period 2 unreachable at phase 1");
  EXPECT_TRUE(r.search_log[1].evaluated);
  EXPECT_THROW(optimize(s, space_for(s, {{1, {2, 2}}, {2, {3, 3}}}, 1)), DomainError);
}

TEST(Optimize, RejectsEmptyOrSingleSpace) {
  const Scenario s = fixed(test::far_pair(6, 3, 6, 3));
  SearchSpace none = default_space(s);
  none.route_candidates[1].clear();
  EXPECT_THROW(optimize(s, none), DomainError);
  SearchSpace zero = default_space(s);
  zero.max_activations = 0;
  EXPECT_THROW(optimize(s, zero), DomainError);
  const Scenario one = fixed(test::window(6, 3));
  EXPECT_THROW(optimize(one, default_space(one)), DomainError);
}

TEST(Optimize, RouteSearchOverNetwork) {
  const Scenario s = grid();
  const SearchSpace space = default_space(s);
  ASSERT_EQ(space.route_candidates.size(), 2U);
  const OptimizationResult r = optimize(s, space);
  EXPECT_EQ(r.best_throughput, Rational(2, 3));
  EXPECT_EQ(r.best_routes, (std::vector<Route>{{"a0", "a1", "a2", "a3", "a4"},
                                                {"c0", "c1", "c2", "b2", "b3", "b4"}}));
  EXPECT_EQ(r.pair.path(2).n_senders, 5);
}

TEST(Optimize, DetourAvoidsInterference) {
  // Path 1 may relay through m, next to path 2's relay, or take a detour through z.
  const Scenario s = parse_scenario(nlohmann::json::parse(R"({
    "topology": {
      "interference_radius": 1.0,
      "nodes": {"p0": [0, 0], "p1": [1, 0], "p2": [2, 0],
                "q0": [0, 1], "m": [0.9, 0.2], "q2": [2, 1], "z": [1, 6]},
      "links": [["p0", "p1"], ["p1", "p2"], ["q0", "m"], ["m", "q2"], ["q0", "z"], ["z", "q2"]]
    },
    "flows": {"1": {"source": "q0", "destination": "q2"}, "2": {"source": "p0", "destination": "p2"}},
    "search": {"max_activations": 2}
  })"));
  const SearchSpace space = default_space(s);
  ASSERT_EQ(space.route_candidates[0], (std::vector<Route>{{"q0", "m", "q2"}, {"q0", "z", "q2"}}));
  const OptimizationResult r = optimize(s, space);
  EXPECT_EQ(r.best.route_index, (std::vector<int>{1, 0}));
  EXPECT_EQ(r.best_routes[0], (Route{"q0", "z", "q2"}));
  EXPECT_EQ(r.best_throughput, Rational(1));
  for (const Candidate& c : r.search_log) {
    if (c.evaluated && c.route_index[0] == 0) EXPECT_LE(c.throughput, Rational(2, 3));
  }
}

TEST(Properties, BestDominatesLogAndFormulaHolds) {
  checks::Rng rng(701);
  for (int i = 0; i < 60; ++i) {
    const PathPair p = checks::random_geometric_pair(rng, 14);
    const Scenario s = fixed(p);
    const OptimizationResult r = optimize(s, space_for(s, {}, 3));
    EXPECT_EQ(r.best_throughput, Rational(r.best.repeats1 + r.best.repeats2,
                                          r.best.repeats1 * r.best.spacing1 +
                                              r.best.repeats2 * r.best.spacing2 - r.best.support_number));
    for (const Candidate& c : r.search_log) {
      if (c.evaluated) EXPECT_GE(r.best_throughput, c.throughput);
    }
    EXPECT_LE(r.best_throughput, Rational(1, r.best.spacing1) + Rational(1, r.best.spacing2));
    EXPECT_TRUE(audit_schedule(r.pair, r.schedule).valid);

    const SimReport sim = run(r.pair, r.schedule, 6, default_warmup(r.pair, r.schedule),
                              {BufferPolicy::Queue, false});
    EXPECT_EQ(sim.joint_throughput, r.best_throughput);
    EXPECT_EQ(sim.violation_count, 0);
  }
}

TEST(Properties, LargerSpacesNeverHurt) {
  checks::Rng rng(702);
  for (int i = 0; i < 60; ++i) {
    const PathPair p = checks::random_geometric_pair(rng, 14);
    const Scenario s = fixed(p);
    const int i1 = interference_intensity(p, p.path_nodes(1)).value;
    const int i2 = interference_intensity(p, p.path_nodes(2)).value;
    const std::map<int, std::array<int, 2>> tight{{1, {i1, i1}}, {2, {i2, i2}}};
    Rational last(0);
    for (int l = 1; l <= 3; ++l) {
      const Rational now = optimize(s, space_for(s, tight, l)).best_throughput;
      EXPECT_GE(now, last);
      last = now;
    }
    EXPECT_GE(optimize(s, space_for(s, {}, 3)).best_throughput, last);
  }
}

}  // namespace
}  // namespace netwave
