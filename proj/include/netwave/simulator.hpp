#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netwave/rational.hpp"
#include "netwave/scheduler.hpp"

namespace netwave {

/// `Single`: every relay holds at most one block and a sender only transmits
/// when its downstream slot is free (or being emptied in the same beat).
/// `Queue`: relays keep an unbounded FIFO.
enum class BufferPolicy { Single, Queue };

std::string to_string(BufferPolicy policy);

struct SimOptions {
  std::optional<BufferPolicy> buffers;  // unset: default_policy(schedule)
  bool trace = false;
};

struct BlockDelay {
  int path_id = 1;
  long block_id = 0;        // 1-based injection order on the path
  long injected_beat = 0;   // 1-based beat of the source transmission
  long delivered_beat = 0;  // beat of the final hop
  long delay = 0;           // delivered - injected + 1

  bool operator==(const BlockDelay&) const = default;
};

struct PathMeasurement {
  int path_id = 1;
  long delivered = 0;          // m_k within the window
  Rational average_throughput;  // m_k / d

  bool operator==(const PathMeasurement&) const = default;
};

struct Violation {
  long beat = 0;
  NodeRef a;
  NodeRef b;

  bool operator==(const Violation&) const = default;
};

struct BlockMove {
  int path_id = 1;
  long block_id = 0;
  int from_seq = 1;
  int to_seq = 2;  // n_senders + 1 is the destination

  bool operator==(const BlockMove&) const = default;
};

struct BeatTrace {
  long beat = 0;
  std::vector<NodeRef> active;
  std::vector<BlockMove> moves;

  bool operator==(const BeatTrace&) const = default;
};

struct SimReport {
  BufferPolicy buffers = BufferPolicy::Single;
  long window_start = 0;  // beats completed before the window
  long window_length = 0;
  std::vector<PathMeasurement> paths;
  Rational joint_throughput;  // delivered per beat over the window
  std::vector<BlockDelay> deliveries;
  long violation_count = 0;
  std::vector<Violation> violations;  // first few, for diagnosis
  long blocked_transmissions = 0;
  int peak_occupancy = 0;
  bool fifo_ok = true;
  bool conservation_ok = true;
  std::vector<BeatTrace> trace;

  const PathMeasurement* path(int id) const;
  bool operator==(const SimReport&) const = default;
};

BufferPolicy default_policy(const Schedule& schedule);

/// Warmup in periods: ceil(N/T)+1 for a primary schedule, max_i N_i (L_i+1)
/// for pair schedules.
int default_warmup(const PathPair& pair, const Schedule& schedule);

/// Runs warmup + measured periods of the schedule with saturated sources.
SimReport run(const PathPair& pair, const Schedule& schedule, int n_periods, int warmup_periods,
              const SimOptions& options = {});

/// Same as run() for an arbitrary cycle of active sender sets. Every path with
/// an active sender somewhere in the cycle is fed by its source.
SimReport run_cycle(const PathPair& pair, const std::vector<NodeMask>& cycle, int n_periods,
                    int warmup_periods, BufferPolicy buffers, bool trace = false);

/// End-to-end delays of the first `block_count` blocks of each scheduled path.
std::vector<BlockDelay> measure_delay(const PathPair& pair, const Schedule& schedule,
                                      int block_count);

/// ASCII space-time diagram: one row per sender, one column per beat; the
/// mark is the last digit of the forwarded block id, '*' for an idle
/// activation and '.' otherwise.
std::string space_time_diagram(const PathPair& pair, const SimReport& report);

}  // namespace netwave
