#include "netwave/simulator.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>

#include "netwave/error.hpp"

namespace netwave {

std::string to_string(BufferPolicy policy) {
  return policy == BufferPolicy::Single ? "single" : "queue";
}

const PathMeasurement* SimReport::path(int id) const {
  for (const auto& p : paths) {
    if (p.path_id == id) return &p;
  }
  return nullptr;
}

BufferPolicy default_policy(const Schedule& schedule) {
  return schedule.kind == ScheduleKind::PairUnequal ? BufferPolicy::Queue : BufferPolicy::Single;
}

int default_warmup(const PathPair& pair, const Schedule& schedule) {
  if (schedule.kind == ScheduleKind::Primary) {
    const PathPlan& plan = schedule.plans.front();
    const int n = pair.path(plan.path_id).n_senders;
    return (n + plan.spacing - 1) / plan.spacing + 1;
  }
  int w = 0;
  for (const auto& p : schedule.plans) {
    w = std::max(w, pair.path(p.path_id).n_senders * (p.activations + 1));
  }
  return w;
}

namespace {

constexpr std::size_t kMaxRecordedViolations = 16;

struct Block {
  long id = 0;
  long injected = 0;
};

class Engine {
 public:
  Engine(const PathPair& pair, BufferPolicy buffers, bool trace)
      : pair_(pair), buffers_(buffers), trace_(trace),
        slots_(static_cast<std::size_t>(pair.total_senders())) {}

  SimReport run(const std::vector<NodeMask>& cycle, int n_periods, int warmup_periods) {
    if (cycle.empty()) throw DomainError("empty activation cycle");
    if (n_periods < 1) throw DomainError("at least one measured period is required");
    if (warmup_periods < 0) throw DomainError("warmup must be nonnegative");

    NodeMask used = 0;
    for (NodeMask m : cycle) used |= m;
    for (const auto& p : pair_.paths()) {
      if ((used & pair_.path_mask(p.id)) != 0) fed_.push_back(p.id);
    }

    const long period = static_cast<long>(cycle.size());
    report_.buffers = buffers_;
    report_.window_start = warmup_periods * period;
    report_.window_length = n_periods * period;
    const long total = report_.window_start + report_.window_length;
    for (long beat = 1; beat <= total; ++beat) {
      step(beat, cycle[static_cast<std::size_t>((beat - 1) % period)]);
    }

    long joint = 0;
    for (int id : fed_) {
      const long m = in_window_[id];
      joint += m;
      report_.paths.push_back({id, m, Rational(m, report_.window_length)});
    }
    report_.joint_throughput = Rational(joint, report_.window_length);
    return std::move(report_);
  }

 private:
  void step(long beat, NodeMask active) {
    check_interference(beat, active);
    BeatTrace bt;
    if (trace_) {
      bt.beat = beat;
      bt.active = pair_.nodes_of(active);
    }

    for (int id : fed_) {
      const int n = pair_.path(id).n_senders;
      const int base = pair_.relation().index_of({id, 1});
      // Downstream first, so a block moved into a slot this beat stays put
      // until the next beat and a freed slot can be refilled at once.
      for (int seq = n; seq >= 1; --seq) {
        const int i = base + seq - 1;
        if (((active >> i) & 1) == 0) continue;
        auto& here = slots_[static_cast<std::size_t>(i)];
        const bool source = seq == 1;
        if (!source && here.empty()) continue;

        const bool last = seq == n;
        const bool accepts = last || buffers_ == BufferPolicy::Queue ||
                             slots_[static_cast<std::size_t>(i + 1)].empty();
        if (!accepts) {
          ++report_.blocked_transmissions;
          continue;
        }
        Block b;
        if (source) {
          b = {++injected_[id], beat};
          ++injected_total_;
        } else {
          b = here.front();
          here.pop_front();
        }
        if (trace_) bt.moves.push_back({id, b.id, seq, seq + 1});
        if (last) {
          deliver(id, b, beat);
        } else {
          slots_[static_cast<std::size_t>(i + 1)].push_back(b);
        }
      }
    }

    long in_flight = 0;
    for (const auto& s : slots_) {
      in_flight += static_cast<long>(s.size());
      report_.peak_occupancy = std::max(report_.peak_occupancy, static_cast<int>(s.size()));
    }
    if (injected_total_ - in_flight != delivered_total_) report_.conservation_ok = false;
    if (trace_) report_.trace.push_back(std::move(bt));
  }

  void deliver(int id, const Block& b, long beat) {
    ++delivered_total_;
    long& last = last_delivered_[id];
    if (b.id <= last) report_.fifo_ok = false;
    last = b.id;
    report_.deliveries.push_back({id, b.id, b.injected, beat, beat - b.injected + 1});
    if (beat > report_.window_start) ++in_window_[id];
  }

  void check_interference(long beat, NodeMask active) {
    if (pair_.is_concurrent_mask(active)) return;
    ++report_.violation_count;
    if (report_.violations.size() >= kMaxRecordedViolations) return;
    for (NodeMask rest = active; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const NodeMask hit = pair_.relation().conflicts(i) & active;
      if (hit != 0) {
        report_.violations.push_back({beat, pair_.relation().node_at(i),
                                      pair_.relation().node_at(std::countr_zero(hit))});
        return;
      }
    }
  }

  const PathPair& pair_;
  BufferPolicy buffers_;
  bool trace_;
  std::vector<std::deque<Block>> slots_;
  std::vector<int> fed_;
  std::map<int, long> injected_;
  std::map<int, long> last_delivered_;
  std::map<int, long> in_window_;
  long injected_total_ = 0;
  long delivered_total_ = 0;
  SimReport report_;
};

}  // namespace

SimReport run_cycle(const PathPair& pair, const std::vector<NodeMask>& cycle, int n_periods,
                    int warmup_periods, BufferPolicy buffers, bool trace) {
  return Engine(pair, buffers, trace).run(cycle, n_periods, warmup_periods);
}

SimReport run(const PathPair& pair, const Schedule& schedule, int n_periods, int warmup_periods,
              const SimOptions& options) {
  const BufferPolicy buffers = options.buffers.value_or(default_policy(schedule));
  return run_cycle(pair, beat_masks(pair, schedule), n_periods, warmup_periods, buffers,
                   options.trace);
}

std::vector<BlockDelay> measure_delay(const PathPair& pair, const Schedule& schedule,
                                      int block_count) {
  if (block_count < 1) throw DomainError("block_count must be at least 1");
  int periods = block_count + default_warmup(pair, schedule) + 1;
  for (int attempt = 0; attempt < 8; ++attempt, periods *= 2) {
    const SimReport r = run(pair, schedule, periods, 0);
    std::map<int, std::vector<BlockDelay>> per_path;
    for (const auto& d : r.deliveries) {
      auto& v = per_path[d.path_id];
      if (static_cast<int>(v.size()) < block_count) v.push_back(d);
    }
    bool enough = !schedule.plans.empty();
    for (const auto& p : schedule.plans) {
      enough = enough && static_cast<int>(per_path[p.path_id].size()) == block_count;
    }
    if (!enough) continue;
    std::vector<BlockDelay> out;
    for (auto& [id, v] : per_path) out.insert(out.end(), v.begin(), v.end());
    return out;
  }
  throw InternalError("schedule failed to deliver the requested blocks");
}

std::string space_time_diagram(const PathPair& pair, const SimReport& report) {
  std::string out;
  const int total = pair.total_senders();
  std::vector<std::string> rows(static_cast<std::size_t>(total));
  for (const auto& bt : report.trace) {
    std::vector<char> col(static_cast<std::size_t>(total), '.');
    for (const auto& n : bt.active) col[static_cast<std::size_t>(pair.relation().index_of(n))] = '*';
    for (const auto& m : bt.moves) {
      const int i = pair.relation().index_of({m.path_id, m.from_seq});
      col[static_cast<std::size_t>(i)] = static_cast<char>('0' + m.block_id % 10);
    }
    for (int i = 0; i < total; ++i) rows[static_cast<std::size_t>(i)] += col[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < total; ++i) {
    const std::string label = to_string(pair.relation().node_at(i));
    out += label + std::string(label.size() < 10 ? 10 - label.size() : 1, ' ') +
           rows[static_cast<std::size_t>(i)] + '\n';
  }
  return out;
}

}  // namespace netwave
