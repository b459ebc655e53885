#include "netwave/analysis.hpp"

#include <gtest/gtest.h>

#include "netwave/checks/oracles.hpp"
#include "netwave/error.hpp"
#include "test_support.hpp"

namespace netwave {
namespace {

TEST(Intensity, WindowThreeChain) {
  const PathPair p = test::window(6, 3);
  const auto nodes = p.path_nodes(1);
  const Intensity i = interference_intensity(p, nodes);
  EXPECT_EQ(i.value, 3);
  EXPECT_EQ(i.witness, test::seqs(1, {1, 2, 3}));
  const Intensity c = concurrency_intensity(p, nodes);
  EXPECT_EQ(c.value, 2);
  EXPECT_EQ(c.witness, test::seqs(1, {1, 4}));
}

TEST(Intensity, NoInterference) {
  const PathPair p = test::window(5, 1);
  EXPECT_EQ(interference_intensity(p, p.path_nodes(1)).value, 1);
  EXPECT_EQ(concurrency_intensity(p, p.path_nodes(1)).value, 5);
}

TEST(Intensity, FullyInterfering) {
  const PathPair p = test::blocking_pair(2, 2, 2, 2);
  EXPECT_EQ(interference_intensity(p, p.all_nodes()).value, 4);
  EXPECT_EQ(concurrency_intensity(p, p.all_nodes()).value, 1);
}

TEST(Intensity, EmptySetRejected) {
  const PathPair p = test::window(3, 2);
  EXPECT_THROW(interference_intensity(p, {}), DomainError);
  EXPECT_THROW(concurrency_intensity(p, {}), DomainError);
}

TEST(Intensity, SubsetRestrictsSearch) {
  const PathPair p = test::window(6, 3);
  EXPECT_EQ(interference_intensity(p, test::seqs(1, {1, 3, 5})).value, 2);
  EXPECT_EQ(interference_intensity(p, test::seqs(1, {1, 4})).value, 1);
}

TEST(Cliques, AllMaximumWindows) {
  const PathPair p = test::window(6, 3);
  const auto cliques = maximum_interference_cliques(p, p.path_nodes(1));
  ASSERT_EQ(cliques.size(), 4u);
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(cliques[s - 1], test::seqs(1, {s, s + 1, s + 2}));
}

TEST(Degrees, WindowThreeChain) {
  const PathPair p = test::window(6, 3);
  const DegreeReport d = connection_degrees(p, p.path_nodes(1));
  EXPECT_EQ(d.per_node[2].interference, 4);
  EXPECT_EQ(d.per_node[2].concurrency, 1);
  EXPECT_EQ(d.intrinsic_interference, 4);
  EXPECT_EQ(d.intrinsic_concurrency, 3);
}

TEST(Degrees, SingletonAndComplete) {
  const PathPair p = test::window(4, 4);
  const DegreeReport one = connection_degrees(p, test::seqs(1, {2}));
  EXPECT_EQ(one.per_node.front().interference, 0);
  EXPECT_EQ(one.per_node.front().concurrency, 0);
  for (const auto& d : connection_degrees(p, p.path_nodes(1)).per_node) EXPECT_EQ(d.interference, 3);
}

TEST(Dominance, Examples) {
  EXPECT_FALSE(is_dominant(test::window(6, 3), test::window(6, 3).path_nodes(1)));
  EXPECT_TRUE(is_dominant(test::window(3, 3), test::window(3, 3).path_nodes(1)));
  EXPECT_TRUE(is_dominant(test::window(4, 1), test::window(4, 1).path_nodes(1)));
}

TEST(Dominance, SplitExamples) {
  const PathPair three = test::window(3, 3);
  EXPECT_EQ(split_dominant(three, three.path_nodes(1)),
            (std::vector<std::vector<NodeRef>>{test::seqs(1, {1}), test::seqs(1, {2}), test::seqs(1, {3})}));
  const PathPair free = test::window(4, 1);
  EXPECT_EQ(split_dominant(free, free.path_nodes(1)),
            (std::vector<std::vector<NodeRef>>{test::seqs(1, {1, 2, 3, 4})}));
  const PathPair six = test::window(6, 3);
  try {
    split_dominant(six, six.path_nodes(1));
    FAIL() << "expected a domain error";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "set not dominant");
  }
}

TEST(Continuity, Examples) {
  EXPECT_TRUE(check_continuity(test::window(6, 3), 1));
  EXPECT_TRUE(check_continuity(test::window(1, 1), 1));
  const PathPair broken = test::single(5, [](int j, int k) {
    return std::abs(j - k) < 3 || std::min(j, k) == 1 && std::max(j, k) == 5;
  });
  EXPECT_THROW(check_continuity(broken, 1), DomainError);
}

TEST(Continuity, RandomLinePaths) {
  checks::Rng rng(201);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(check_continuity(checks::random_line_path(rng, 14), 1)) << "instance " << i;
  }
}

TEST(Report, CollectsEverything) {
  const PathPair p = test::window(6, 3);
  const IntensityReport r = analyze_set(p, p.path_nodes(1));
  EXPECT_EQ(r.interference_intensity, 3);
  EXPECT_EQ(r.concurrency_intensity, 2);
  EXPECT_EQ(r.intrinsic_interference_degree, 4);
  EXPECT_FALSE(r.dominant);
  EXPECT_EQ(r.degrees.size(), 6u);
}

// Longest run of consecutive senders that pairwise interfere.
int longest_window(const PathPair& p, int path_id) {
  const int n = p.path(path_id).n_senders;
  int best = 1;
  for (int s = 1; s <= n; ++s) {
    int len = 1;
    while (s + len <= n) {
      bool all = true;
      for (int t = s; t < s + len; ++t) all = all && p.interferes({path_id, t}, {path_id, s + len});
      if (!all) break;
      ++len;
    }
    best = std::max(best, len);
  }
  return best;
}

TEST(Properties, CliqueSearchMatchesOracles) {
  checks::Rng rng(202);
  for (int i = 0; i < 150; ++i) {
    const PathPair line = checks::random_line_path(rng, 12);
    const auto nodes = line.path_nodes(1);
    const int clique = interference_intensity(line, nodes).value;
    EXPECT_EQ(clique, checks::brute_interference_intensity(line, nodes));
    EXPECT_EQ(clique, longest_window(line, 1));
    EXPECT_EQ(concurrency_intensity(line, nodes).value, checks::brute_concurrency_intensity(line, nodes));

    const PathPair arbitrary = test::random_relation(rng, {rng.uniform(1, 7), rng.uniform(1, 7)}, rng.real(0.1, 0.9));
    const auto all = arbitrary.all_nodes();
    const Intensity inter = interference_intensity(arbitrary, all);
    EXPECT_EQ(inter.value, checks::brute_interference_intensity(arbitrary, all));
    EXPECT_EQ(concurrency_intensity(arbitrary, all).value, checks::brute_concurrency_intensity(arbitrary, all));
    for (std::size_t a = 0; a < inter.witness.size(); ++a) {
      for (std::size_t b = a + 1; b < inter.witness.size(); ++b) {
        EXPECT_TRUE(arbitrary.interferes(inter.witness[a], inter.witness[b]));
      }
    }
  }
}

TEST(Properties, WitnessIsLexicographicallySmallest) {
  checks::Rng rng(203);
  for (int i = 0; i < 100; ++i) {
    const PathPair p = test::random_relation(rng, {rng.uniform(1, 9)}, rng.real(0.2, 0.8));
    const auto nodes = p.path_nodes(1);
    const auto all = maximum_interference_cliques(p, nodes);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(interference_intensity(p, nodes).witness, *std::min_element(all.begin(), all.end()));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  }
}

TEST(Properties, DominantSetsSplitIntoConcurrencyGroups) {
  checks::Rng rng(204);
  int dominant = 0;
  for (int i = 0; i < 3000 && dominant < 150; ++i) {
    const PathPair p = test::random_relation(rng, {rng.uniform(1, 12)}, rng.real(0.05, 0.6));
    const auto nodes = p.path_nodes(1);
    if (!is_dominant(p, nodes)) continue;
    ++dominant;
    const int istar = interference_intensity(p, nodes).value;
    const int cstar = concurrency_intensity(p, nodes).value;
    EXPECT_GE(istar * cstar, static_cast<int>(nodes.size()));

    const auto groups = split_dominant(p, nodes);
    EXPECT_EQ(static_cast<int>(groups.size()), istar);
    std::size_t covered = 0;
    for (const auto& g : groups) {
      ASSERT_FALSE(g.empty());
      EXPECT_TRUE(is_concurrency_subset(p, g));
      covered += g.size();
    }
    EXPECT_EQ(covered, nodes.size());

    if (nodes.size() <= 10) {
      const auto cliques = maximum_interference_cliques(p, nodes);
      for (std::size_t a = 0; a < cliques.size(); ++a) {
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
          for (const auto& x : cliques[a]) {
            EXPECT_EQ(std::count(cliques[b].begin(), cliques[b].end(), x), 0);
          }
        }
      }
    }
  }
  EXPECT_GE(dominant, 100);
}

TEST(Properties, PairIntensityBounds) {
  checks::Rng rng(205);
  for (int i = 0; i < 200; ++i) {
    const PathPair p = checks::random_geometric_pair(rng, 16);
    const int i1 = interference_intensity(p, p.path_nodes(1)).value;
    const int i2 = interference_intensity(p, p.path_nodes(2)).value;
    const int i12 = interference_intensity(p, p.all_nodes()).value;
    EXPECT_GE(i12, std::max(i1, i2));
    EXPECT_LE(i12, i1 + i2);
  }
}

}  // namespace
}  // namespace netwave
