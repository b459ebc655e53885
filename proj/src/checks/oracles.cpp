#include "netwave/checks/oracles.hpp"

#include <algorithm>
#include <bit>

#include "netwave/error.hpp"

namespace netwave::checks {

namespace {

bool pairwise(const PathPair& pair, const std::vector<NodeRef>& set, bool want_interference) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (pair.interferes(set[a], set[b]) != want_interference) return false;
    }
  }
  return true;
}

int largest_subset(const PathPair& pair, const std::vector<NodeRef>& nodes, bool interfering) {
  if (nodes.size() > 20) throw DomainError("brute-force intensity limited to 20 nodes");
  const std::uint32_t count = 1u << nodes.size();
  int best = 0;
  std::vector<NodeRef> set;
  for (std::uint32_t s = 1; s < count; ++s) {
    set.clear();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if ((s >> i) & 1u) set.push_back(nodes[i]);
    }
    if (static_cast<int>(set.size()) > best && pairwise(pair, set, interfering)) {
      best = static_cast<int>(set.size());
    }
  }
  return best;
}

std::vector<NodeRef> progression(int path_id, int n, int phase, int spacing) {
  std::vector<NodeRef> out;
  for (int seq = phase; seq <= n; seq += spacing) out.push_back({path_id, seq});
  return out;
}

}  // namespace

int brute_interference_intensity(const PathPair& pair, const std::vector<NodeRef>& nodes) {
  return largest_subset(pair, nodes, true);
}

int brute_concurrency_intensity(const PathPair& pair, const std::vector<NodeRef>& nodes) {
  return largest_subset(pair, nodes, false);
}

bool brute_reachable(const PathPair& pair, int path_id, int spacing) {
  const int n = pair.path(path_id).n_senders;
  for (int phase = 1; phase <= spacing; ++phase) {
    if (!pairwise(pair, progression(path_id, n, phase, spacing), false)) return false;
  }
  return true;
}

bool brute_joint_entry(const PathPair& pair, int spacing1, int phase1, int spacing2, int phase2) {
  std::vector<NodeRef> set = progression(1, pair.path(1).n_senders, phase1, spacing1);
  const auto second = progression(2, pair.path(2).n_senders, phase2, spacing2);
  set.insert(set.end(), second.begin(), second.end());
  return pairwise(pair, set, false);
}

int brute_min_line_cover(const BinaryMatrix& m) {
  if (m.rows() > 16) throw DomainError("brute-force cover limited to 16 rows");
  int best = m.rows() + m.cols();
  for (std::uint32_t rows = 0; rows < (1u << m.rows()); ++rows) {
    int cols_needed = 0;
    for (int c = 0; c < m.cols(); ++c) {
      for (int r = 0; r < m.rows(); ++r) {
        if (m(r, c) && ((rows >> r) & 1u) == 0) {
          ++cols_needed;
          break;
        }
      }
    }
    best = std::min(best, std::popcount(rows) + cols_needed);
  }
  return best;
}

int brute_min_joint_period(const PathPair& pair, int spacing1, int spacing2) {
  // With each subset activated exactly once, a beat arrangement is fixed up to
  // order by which path-1 subsets share their beat with which path-2 subset.
  // Enumerate every such pairing; the period is the number of beats used.
  const int n1 = pair.path(1).n_senders;
  const int n2 = pair.path(2).n_senders;
  std::vector<bool> used(static_cast<std::size_t>(spacing2), false);
  int best = spacing1 + spacing2;
  auto visit = [&](auto&& self, int phase1, int shared) -> void {
    if (phase1 > spacing1) {
      best = std::min(best, spacing1 + spacing2 - shared);
      return;
    }
    self(self, phase1 + 1, shared);
    const auto first = progression(1, n1, phase1, spacing1);
    for (int phase2 = 1; phase2 <= spacing2; ++phase2) {
      if (used[static_cast<std::size_t>(phase2 - 1)]) continue;
      std::vector<NodeRef> beat = first;
      const auto second = progression(2, n2, phase2, spacing2);
      beat.insert(beat.end(), second.begin(), second.end());
      if (!pairwise(pair, beat, false)) continue;
      used[static_cast<std::size_t>(phase2 - 1)] = true;
      self(self, phase1 + 1, shared + 1);
      used[static_cast<std::size_t>(phase2 - 1)] = false;
    }
  };
  visit(visit, 1, 0);
  return best;
}

std::vector<std::vector<std::vector<int>>> concurrency_partitions(const PathPair& pair, int path_id,
                                                                  int groups) {
  const int n = pair.path(path_id).n_senders;
  std::vector<std::vector<std::vector<int>>> found;
  std::vector<std::vector<int>> current;
  // Restricted growth: sender seq joins an existing group or opens the next one.
  auto visit = [&](auto&& self, int seq) -> void {
    if (static_cast<int>(current.size()) + (n - seq + 1) < groups) return;
    if (seq > n) {
      if (static_cast<int>(current.size()) == groups) found.push_back(current);
      return;
    }
    for (auto& g : current) {
      bool ok = true;
      for (int other : g) ok = ok && pair.concurrent({path_id, other}, {path_id, seq});
      if (!ok) continue;
      g.push_back(seq);
      self(self, seq + 1);
      g.pop_back();
    }
    if (static_cast<int>(current.size()) < groups) {
      current.push_back({seq});
      self(self, seq + 1);
      current.pop_back();
    }
  };
  visit(visit, 1);
  return found;
}

}  // namespace netwave::checks
