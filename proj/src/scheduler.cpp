#include "netwave/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "netwave/error.hpp"

namespace netwave {

std::string to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Primary: return "primary";
    case ScheduleKind::PairEqual: return "pair-equal";
    case ScheduleKind::PairUnequal: return "pair-unequal";
  }
  return "?";
}

std::string to_string(BeatCategory category) {
  switch (category) {
    case BeatCategory::Primary: return "primary";
    case BeatCategory::Joint: return "joint";
    case BeatCategory::Path1Only: return "path1-only";
    case BeatCategory::Path2Only: return "path2-only";
  }
  return "?";
}

const PathPlan* Schedule::plan_for(int path_id) const {
  for (const auto& p : plans) {
    if (p.path_id == path_id) return &p;
  }
  return nullptr;
}

namespace {

void require_reachable(const PathPair& pair, int path_id, int spacing) {
  const int n = pair.path(path_id).n_senders;
  if (spacing < 1 || spacing > n) {
    throw DomainError("spacing " + std::to_string(spacing) + " outside 1.." + std::to_string(n) +
                      " for path " + std::to_string(path_id));
  }
  if (const int phase = first_unreachable_phase(pair, path_id, spacing); phase != 0) {
    throw DomainError("period " + std::to_string(spacing) + " is not reachable for path " +
                      std::to_string(path_id) + ": phase " + std::to_string(phase) +
                      " is not a concurrency subset");
  }
}

void require_repeats(int repeats) {
  if (repeats < 1) throw DomainError("activation count must be at least 1");
}

Beat joint_beat(int t1, int phase1, int t2, int phase2) {
  return {{{1, phase1, t1}, {2, phase2, t2}}, BeatCategory::Joint};
}

// Matched pairs in row order, then unmatched rows, then unmatched cols. Row
// and column indices are folded onto phases modulo the spacing.
std::vector<Beat> traversal(const BinaryMatrix& m, const SupportSet& support, int t1, int t2) {
  std::vector<Beat> beats;
  std::vector<bool> row_used(static_cast<std::size_t>(m.rows()), false);
  std::vector<bool> col_used(static_cast<std::size_t>(m.cols()), false);
  auto phase = [](int index, int spacing) { return (index - 1) % spacing + 1; };
  for (const Cell& c : support.elements) {
    row_used[static_cast<std::size_t>(c.row - 1)] = true;
    col_used[static_cast<std::size_t>(c.col - 1)] = true;
    beats.push_back(joint_beat(t1, phase(c.row, t1), t2, phase(c.col, t2)));
  }
  for (int r = 1; r <= m.rows(); ++r) {
    if (!row_used[static_cast<std::size_t>(r - 1)]) {
      beats.push_back({{{1, phase(r, t1), t1}}, BeatCategory::Path1Only});
    }
  }
  for (int c = 1; c <= m.cols(); ++c) {
    if (!col_used[static_cast<std::size_t>(c - 1)]) {
      beats.push_back({{{2, phase(c, t2), t2}}, BeatCategory::Path2Only});
    }
  }
  return beats;
}

}  // namespace

Schedule schedule_primary(const PathPair& pair, int path_id, std::optional<int> period) {
  const int spacing = period ? *period : intrinsic_period(pair, path_id);
  require_reachable(pair, path_id, spacing);
  Schedule s;
  s.kind = ScheduleKind::Primary;
  s.period = spacing;
  s.plans = {{path_id, spacing, 1}};
  for (int k = 1; k <= spacing; ++k) {
    s.beats.push_back({{{path_id, k, spacing}}, BeatCategory::Primary});
  }
  return s;
}

Schedule schedule_pair_equal(const PathPair& pair, int spacing1, int spacing2, int repeats) {
  require_repeats(repeats);
  require_reachable(pair, 1, spacing1);
  require_reachable(pair, 2, spacing2);
  const ConcurrencyMatrix c = build_matrix(pair, spacing1, spacing2);
  const SupportSet support = max_support_set(c.entries);
  const std::vector<Beat> once = traversal(c.entries, support, spacing1, spacing2);

  Schedule s;
  s.kind = ScheduleKind::PairEqual;
  s.support_number = support.size();
  s.plans = {{1, spacing1, repeats}, {2, spacing2, repeats}};
  for (int l = 0; l < repeats; ++l) s.beats.insert(s.beats.end(), once.begin(), once.end());
  s.period = static_cast<int>(s.beats.size());
  if (s.period != repeats * (spacing1 + spacing2 - s.support_number)) {
    throw InternalError("equal-opportunity period mismatch");
  }
  return s;
}

Schedule schedule_pair_unequal(const PathPair& pair, int spacing1, int spacing2, int repeats1,
                               int repeats2) {
  require_repeats(repeats1);
  require_repeats(repeats2);
  require_reachable(pair, 1, spacing1);
  require_reachable(pair, 2, spacing2);
  const ConcurrencyMatrix c = build_matrix(pair, spacing1, spacing2);
  const BinaryMatrix tiled = continuation(c.entries, repeats1, repeats2);
  const SupportSet support = max_support_set(tiled);

  Schedule s;
  s.kind = ScheduleKind::PairUnequal;
  s.support_number = support.size();
  s.plans = {{1, spacing1, repeats1}, {2, spacing2, repeats2}};
  s.beats = traversal(tiled, support, spacing1, spacing2);
  s.period = static_cast<int>(s.beats.size());
  if (s.period != repeats1 * spacing1 + repeats2 * spacing2 - s.support_number) {
    throw InternalError("unequal-opportunity period mismatch");
  }
  return s;
}

Rational predicted_throughput(const Schedule& schedule) {
  std::int64_t blocks = 0;
  for (const auto& p : schedule.plans) blocks += p.activations;
  return {blocks, schedule.period};
}

AuditReport audit_schedule(const PathPair& pair, const Schedule& schedule) {
  AuditReport report;
  auto issue = [&report](std::string msg) {
    report.valid = false;
    report.issues.push_back(std::move(msg));
  };

  if (schedule.period < 1 || static_cast<int>(schedule.beats.size()) != schedule.period) {
    issue("beat count differs from period");
  }
  std::map<int, const PathPlan*> plans;
  for (const auto& p : schedule.plans) {
    if (!pair.has_path(p.path_id)) {
      issue("plan for unknown path " + std::to_string(p.path_id));
      return report;
    }
    plans[p.path_id] = &p;
  }

  // counts[path][phase]
  std::map<int, std::map<int, int>> counts;
  for (std::size_t b = 0; b < schedule.beats.size(); ++b) {
    const std::string where = "beat " + std::to_string(b + 1);
    const Beat& beat = schedule.beats[b];
    if (beat.activations.empty()) {
      issue(where + " activates nothing");
      continue;
    }
    std::set<int> seen;
    std::vector<NodeRef> active;
    for (const auto& a : beat.activations) {
      auto it = plans.find(a.path_id);
      if (it == plans.end()) {
        issue(where + " activates unplanned path " + std::to_string(a.path_id));
        continue;
      }
      if (!seen.insert(a.path_id).second) {
        issue(where + " activates path " + std::to_string(a.path_id) + " twice");
      }
      if (a.spacing != it->second->spacing || a.phase < 1 || a.phase > a.spacing) {
        issue(where + " uses a subset outside the planned spacing");
        continue;
      }
      ++counts[a.path_id][a.phase];
      for (int seq = a.phase; seq <= pair.path(a.path_id).n_senders; seq += a.spacing) {
        active.push_back({a.path_id, seq});
      }
    }
    if (!active.empty() && !is_concurrency_subset(pair, active)) {
      issue(where + " activates interfering senders");
    }
  }

  for (const auto& [id, plan] : plans) {
    for (int phase = 1; phase <= plan->spacing; ++phase) {
      const int got = counts[id][phase];
      if (got != plan->activations) {
        issue("path " + std::to_string(id) + " phase " + std::to_string(phase) + " activated " +
              std::to_string(got) + " times, expected " + std::to_string(plan->activations));
      }
    }
  }
  return report;
}

std::vector<NodeMask> beat_masks(const PathPair& pair, const Schedule& schedule) {
  std::vector<NodeMask> out;
  out.reserve(schedule.beats.size());
  for (const auto& beat : schedule.beats) {
    NodeMask m = 0;
    for (const auto& a : beat.activations) m |= subset_mask(pair, a);
    out.push_back(m);
  }
  return out;
}

std::string timeline(const PathPair& pair, const Schedule& schedule) {
  const auto masks = beat_masks(pair, schedule);
  std::string out;
  for (int i = 0; i < pair.total_senders(); ++i) {
    const std::string label = to_string(pair.relation().node_at(i));
    out += label + std::string(label.size() < 10 ? 10 - label.size() : 1, ' ');
    for (NodeMask m : masks) out += (m >> i) & 1 ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace netwave
