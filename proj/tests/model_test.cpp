#include "netwave/model.hpp"

#include <gtest/gtest.h>

#include "netwave/checks/generators.hpp"
#include "netwave/error.hpp"
#include "test_support.hpp"

namespace netwave {
namespace {

GeometricTopology unit_line(int n, double radius, bool half_duplex = true) {
  GeometricTopology t;
  for (int i = 0; i <= n; ++i) t.routes[1].push_back({"", {static_cast<double>(i), 0.0}});
  t.interference_radius = radius;
  t.half_duplex = half_duplex;
  return t;
}

PathPair line_pair(int n, double radius, bool half_duplex = true) {
  const std::vector<PrimaryPath> paths{{1, n}};
  return PathPair(paths, derive_relation(unit_line(n, radius, half_duplex), paths));
}

TEST(Relation, PredicateIsSymmetricAndIrreflexive) {
  const PathPair p = test::window(6, 3);
  for (const auto& a : p.all_nodes()) {
    EXPECT_FALSE(p.interferes(a, a));
    EXPECT_TRUE(p.concurrent(a, a));
    for (const auto& b : p.all_nodes()) EXPECT_EQ(p.interferes(a, b), p.interferes(b, a));
  }
}

TEST(Relation, MatrixValidation) {
  EXPECT_THROW(InterferenceRelation::from_matrix({2}, {{false, true}, {false, false}}), DomainError);
  EXPECT_THROW(InterferenceRelation::from_matrix({2}, {{true, false}, {false, false}}), DomainError);
  EXPECT_THROW(InterferenceRelation::from_matrix({2}, {{false, true}}), DomainError);
  const auto rel = InterferenceRelation::from_matrix({1, 1}, {{false, true}, {true, false}});
  EXPECT_TRUE(rel.interferes({1, 1}, {2, 1}));
}

TEST(Relation, PairsValidation) {
  const std::array<NodeRef, 2> unknown[] = {{NodeRef{1, 1}, NodeRef{1, 3}}};
  EXPECT_THROW(InterferenceRelation::from_pairs({2}, unknown), DomainError);
  const std::array<NodeRef, 2> self[] = {{NodeRef{1, 1}, NodeRef{1, 1}}};
  EXPECT_THROW(InterferenceRelation::from_pairs({2}, self), DomainError);
  const std::array<NodeRef, 2> ok[] = {{NodeRef{2, 1}, NodeRef{1, 2}}};
  const auto rel = InterferenceRelation::from_pairs({2, 1}, ok);
  EXPECT_TRUE(rel.interferes({1, 2}, {2, 1}));
  EXPECT_FALSE(rel.interferes({1, 1}, {2, 1}));
}

TEST(Relation, SizeLimits) {
  EXPECT_THROW(InterferenceRelation::from_predicate({0}, [](auto&, auto&) { return false; }),
               DomainError);
  EXPECT_THROW(InterferenceRelation::from_predicate({40, 25}, [](auto&, auto&) { return false; }),
               DomainError);
  EXPECT_NO_THROW(InterferenceRelation::from_predicate({40, 24}, [](auto&, auto&) { return false; }));
}

TEST(PathPair, RejectsInconsistentDeclarations) {
  const auto rel = InterferenceRelation::from_predicate({3}, [](auto&, auto&) { return false; });
  EXPECT_THROW(PathPair({{2, 3}}, rel), DomainError);
  EXPECT_THROW(PathPair({{1, 4}}, rel), DomainError);
  EXPECT_THROW(PathPair({{1, 3}, {2, 1}}, rel), DomainError);
}

TEST(PathPair, MasksFollowPathOrder) {
  const PathPair p = test::far_pair(3, 1, 2, 1);
  EXPECT_EQ(p.path_mask(1), 0b00111u);
  EXPECT_EQ(p.path_mask(2), 0b11000u);
  EXPECT_EQ(p.nodes_of(0b01001u), (std::vector<NodeRef>{{1, 1}, {2, 1}}));
  EXPECT_THROW(p.path(3), DomainError);
}

TEST(Geometry, ThreeApartOnUnitLineIsConcurrent) {
  const PathPair p = line_pair(6, 1.0);
  for (int j = 1; j + 3 <= 6; ++j) EXPECT_TRUE(p.concurrent({1, j}, {1, j + 3}));
}

TEST(Geometry, NeighboursInterfereUnderHalfDuplex) {
  const PathPair p = line_pair(6, 0.0);
  for (int j = 1; j < 6; ++j) EXPECT_TRUE(p.interferes({1, j}, {1, j + 1}));
}

TEST(Geometry, ZeroRadiusWithoutHalfDuplex) {
  const PathPair p = line_pair(6, 0.0, false);
  for (int j = 1; j <= 6; ++j) {
    for (int k = j + 2; k <= 6; ++k) EXPECT_TRUE(p.concurrent({1, j}, {1, k}));
  }
}

TEST(Geometry, WindowThreeChain) {
  EXPECT_EQ(line_pair(6, 1.5).relation(), test::window(6, 3).relation());
}

TEST(Geometry, MissingPositionNamesTheNode) {
  GeometricTopology t = unit_line(4, 1.0);
  const std::vector<PrimaryPath> paths{{1, 6}};
  try {
    derive_relation(t, paths);
    FAIL() << "expected a configuration error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("n(1,6)"), std::string::npos) << e.what();
  }
  t.routes[1].push_back({"", {5.0, 0.0}});
  t.routes[1].push_back({"", {6.0, 0.0}});
  EXPECT_NO_THROW(derive_relation(t, paths));
  t.routes[1].pop_back();
  try {
    derive_relation(t, paths);
    FAIL() << "expected a configuration error";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("destination"), std::string::npos) << e.what();
  }
  const std::vector<PrimaryPath> two{{1, 4}, {2, 1}};
  EXPECT_THROW(derive_relation(unit_line(4, 1.0), two), ConfigError);
}

TEST(Geometry, SharedNamedReceiverInterferesOnlyWithHalfDuplex) {
  GeometricTopology t;
  t.interference_radius = 0.0;
  t.routes[1] = {{"a", {0, 0}}, {"hub", {1, 0}}};
  t.routes[2] = {{"c", {2, 0}}, {"hub", {1, 0}}};
  const std::vector<PrimaryPath> paths{{1, 1}, {2, 1}};
  EXPECT_TRUE(derive_relation(t, paths).interferes({1, 1}, {2, 1}));
  t.half_duplex = false;
  EXPECT_FALSE(derive_relation(t, paths).interferes({1, 1}, {2, 1}));
}

TEST(ConcurrencySubset, Examples) {
  const PathPair line = line_pair(6, 1.0);
  EXPECT_TRUE(is_concurrency_subset(line, test::seqs(1, {1})));
  EXPECT_FALSE(is_concurrency_subset(line, test::seqs(1, {1, 2})));
  EXPECT_TRUE(is_concurrency_subset(test::window(6, 3), test::seqs(1, {1, 4})));
  EXPECT_THROW(is_concurrency_subset(line, {}), DomainError);
  EXPECT_THROW(is_concurrency_subset(line, test::seqs(1, {7})), DomainError);
}

TEST(PathRules, WindowRelationsHold) {
  for (int w = 1; w <= 5; ++w) EXPECT_TRUE(validate_path_rules(test::window(8, w), 1).holds());
  EXPECT_TRUE(validate_path_rules(test::window(1, 1), 1).holds());
}

TEST(PathRules, DownstreamCounterexample) {
  // n1 || n4 but n1 interferes with n5.
  const PathPair p = test::single(5, [](int j, int k) {
    const int lo = std::min(j, k);
    const int hi = std::max(j, k);
    return hi - lo < 3 || (lo == 1 && hi == 5);
  });
  const RuleReport r = validate_path_rules(p, 1);
  EXPECT_FALSE(r.downstream_holds);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations.front(), (RuleViolation{Spread::Downstream, 1, 4}));
}

TEST(PathRules, UpstreamCounterexample) {
  // n2 || n5 but n1 interferes with n5.
  const PathPair p = test::single(5, [](int j, int k) {
    const int lo = std::min(j, k);
    const int hi = std::max(j, k);
    return hi - lo < 3 || (lo == 1 && hi == 5);
  });
  const RuleReport r = validate_path_rules(p, 1);
  EXPECT_FALSE(r.upstream_holds);
  EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), RuleViolation{Spread::Upstream, 2, 5}),
            r.violations.end());
}

TEST(Properties, DerivedRelationsAreSymmetricIrreflexiveAndPartitioned) {
  checks::Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const PathPair p = checks::random_geometric_pair(rng, 20);
    const auto& rel = p.relation();
    for (int a = 0; a < rel.total(); ++a) {
      EXPECT_EQ((rel.conflicts(a) >> a) & 1, 0u);
      for (int b = 0; b < rel.total(); ++b) {
        const NodeRef x = rel.node_at(a);
        const NodeRef y = rel.node_at(b);
        EXPECT_EQ(rel.interferes(x, y), rel.interferes(y, x));
        if (a != b) EXPECT_NE(rel.interferes(x, y), rel.concurrent(x, y));
      }
    }
  }
}

TEST(Properties, UniformLinesSatisfyBothRules) {
  checks::Rng rng(102);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.uniform(1, 16);
    GeometricTopology t;
    const double gap = rng.real(0.2, 3.0);
    for (int s = 0; s <= n; ++s) t.routes[1].push_back({"", {gap * s, 0.0}});
    t.interference_radius = rng.real(0.0, 8.0);
    t.half_duplex = rng.coin();
    const std::vector<PrimaryPath> paths{{1, n}};
    const PathPair p(paths, derive_relation(t, paths));
    EXPECT_TRUE(validate_path_rules(p, 1).holds()) << "instance " << i;
  }
}

TEST(Properties, RandomLinePathsSatisfyBothRules) {
  checks::Rng rng(103);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(validate_path_rules(checks::random_line_path(rng, 16), 1).holds());
  }
}

}  // namespace
}  // namespace netwave
