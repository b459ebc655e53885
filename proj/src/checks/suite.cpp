#include "netwave/checks/suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "netwave/analysis.hpp"
#include "netwave/checks/generators.hpp"
#include "netwave/checks/oracles.hpp"
#include "netwave/error.hpp"
#include "netwave/matching.hpp"
#include "netwave/scheduler.hpp"
#include "netwave/simulator.hpp"

namespace netwave::checks {

namespace {

constexpr int kLinePathMax = 12;
constexpr int kPairTotalMax = 16;
constexpr int kMeasuredPeriods = 6;

// Collects the first failure; later ones only bump the counter.
class Outcome {
 public:
  void fail(const std::string& what) {
    if (failures_++ == 0) first_ = what;
  }
  void check(bool ok, const std::function<std::string()>& what) {
    if (!ok) fail(what());
  }
  long failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  long failures_ = 0;
  std::string first_;
};

std::uint64_t corpus_seed(const SuiteConfig& c, int salt) {
  return c.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(salt);
}

std::string instance_tag(long index) { return "instance " + std::to_string(index) + ": "; }

std::string str(const Rational& r) { return to_string(r); }

int intensity(const PathPair& pair, const std::vector<NodeRef>& nodes) {
  return interference_intensity(pair, nodes).value;
}

// Line-path corpus shared by the single-path checks.
std::vector<PathPair> line_corpus(const SuiteConfig& c) {
  Rng rng(corpus_seed(c, 1));
  std::vector<PathPair> out;
  out.reserve(static_cast<std::size_t>(c.instances));
  for (int i = 0; i < c.instances; ++i) out.push_back(random_line_path(rng, kLinePathMax));
  return out;
}

std::vector<PathPair> pair_corpus(const SuiteConfig& c, int salt, int max_total) {
  Rng rng(corpus_seed(c, salt));
  std::vector<PathPair> out;
  out.reserve(static_cast<std::size_t>(c.instances));
  for (int i = 0; i < c.instances; ++i) out.push_back(random_geometric_pair(rng, max_total));
  return out;
}

long intrinsic_period_matches(const SuiteConfig& c, Outcome& o) {
  const auto corpus = line_corpus(c);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PathPair& p = corpus[i];
    const auto nodes = p.path_nodes(1);
    const int clique = intensity(p, nodes);
    const int brute = brute_interference_intensity(p, nodes);
    try {
      const int period = intrinsic_period(p, 1);
      o.check(period == clique && clique == brute, [&] {
        return instance_tag(static_cast<long>(i)) + "T*=" + std::to_string(period) +
               " I*=" + std::to_string(clique) + " brute I*=" + std::to_string(brute);
      });
    } catch (const InternalError& e) {
      o.fail(instance_tag(static_cast<long>(i)) + e.what());
    }
  }
  return static_cast<long>(corpus.size());
}

long reachability_threshold(const SuiteConfig& c, Outcome& o) {
  const auto corpus = line_corpus(c);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PathPair& p = corpus[i];
    const int clique = intensity(p, p.path_nodes(1));
    for (int t = 1; t <= p.path(1).n_senders; ++t) {
      const bool got = is_reachable_period(p, 1, t);
      const bool brute = brute_reachable(p, 1, t);
      o.check(got == (t >= clique) && got == brute, [&] {
        return instance_tag(static_cast<long>(i)) + "T=" + std::to_string(t) +
               " I*=" + std::to_string(clique) + " reachable=" + std::to_string(got) +
               " brute=" + std::to_string(brute);
      });
    }
  }
  return static_cast<long>(corpus.size());
}

std::string sim_problems(const SimReport& r, bool single_slot) {
  std::string out;
  if (r.violation_count != 0) out += " violations=" + std::to_string(r.violation_count);
  if (single_slot && r.peak_occupancy > 1) out += " peak=" + std::to_string(r.peak_occupancy);
  if (!r.fifo_ok) out += " fifo";
  if (!r.conservation_ok) out += " conservation";
  return out;
}

long primary_throughput(const SuiteConfig& c, Outcome& o) {
  const auto corpus = line_corpus(c);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PathPair& p = corpus[i];
    const Schedule s = schedule_primary(p, 1);
    const AuditReport audit = audit_schedule(p, s);
    const SimReport r = run(p, s, kMeasuredPeriods, default_warmup(p, s),
                            SimOptions{BufferPolicy::Single, false});
    const Rational expected(1, intrinsic_period(p, 1));
    const std::string problems = sim_problems(r, true);
    o.check(audit.valid && problems.empty() && r.joint_throughput == expected &&
                predicted_throughput(s) == expected,
            [&] {
              return instance_tag(static_cast<long>(i)) + "measured " + str(r.joint_throughput) +
                     " expected " + str(expected) + problems +
                     (audit.valid ? "" : " audit: " + audit.issues.front());
            });
  }
  return static_cast<long>(corpus.size());
}

long first_block_delay(const SuiteConfig& c, Outcome& o) {
  const auto corpus = line_corpus(c);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PathPair& p = corpus[i];
    const auto delays = measure_delay(p, schedule_primary(p, 1), 1);
    const int n = p.path(1).n_senders;
    o.check(delays.size() == 1 && delays.front().delay == n, [&] {
      return instance_tag(static_cast<long>(i)) + "N=" + std::to_string(n) + " first delay " +
             (delays.empty() ? std::string("none") : std::to_string(delays.front().delay));
    });
  }
  return static_cast<long>(corpus.size());
}

long support_oracle(const SuiteConfig& c, Outcome& o) {
  Rng rng(corpus_seed(c, 5));
  const long count = std::max(500, 3 * c.instances);
  for (long i = 0; i < count; ++i) {
    const BinaryMatrix m = random_matrix(rng, 5, 6);
    const SupportSet s = max_support_set(m);
    const SupportCheck v = validate_support_set(m, s);
    const int brute = brute_force_max_support(m);
    o.check(v.valid && s.size() == brute, [&] {
      return instance_tag(i) + "U*=" + std::to_string(s.size()) + " brute " +
             std::to_string(brute) + (v.valid ? "" : " invalid witness") + "\n" + m.to_grid();
    });
  }
  return count;
}

long pair_throughput(const SuiteConfig& c, Outcome& o) {
  const auto corpus = pair_corpus(c, 6, kPairTotalMax);
  Rng rng(corpus_seed(c, 60));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PathPair& p = corpus[i];
    const int t1 = rng.uniform(intrinsic_period(p, 1), p.path(1).n_senders);
    const int t2 = rng.uniform(intrinsic_period(p, 2), p.path(2).n_senders);
    const int l = rng.uniform(1, 3);
    const int l1 = rng.uniform(1, 3);
    const int l2 = rng.uniform(1, 3);
    const std::string params = "T1=" + std::to_string(t1) + " T2=" + std::to_string(t2);

    const Schedule equal = schedule_pair_equal(p, t1, t2, l);
    const SimReport re = run(p, equal, kMeasuredPeriods, default_warmup(p, equal),
                             SimOptions{BufferPolicy::Single, false});
    const Rational want_e(2 * l, equal.period);
    const bool audit_e = audit_schedule(p, equal).valid;
    const std::string prob_e = sim_problems(re, true);
    o.check(audit_e && prob_e.empty() && re.joint_throughput == want_e &&
                re.path(1)->average_throughput == Rational(l, equal.period) &&
                re.path(2)->average_throughput == Rational(l, equal.period),
            [&] {
              return instance_tag(static_cast<long>(i)) + "equal " + params +
                     " L=" + std::to_string(l) + " measured " + str(re.joint_throughput) +
                     " expected " + str(want_e) + prob_e + (audit_e ? "" : " audit failed");
            });

    const Schedule unequal = schedule_pair_unequal(p, t1, t2, l1, l2);
    const SimReport ru = run(p, unequal, kMeasuredPeriods, default_warmup(p, unequal),
                             SimOptions{BufferPolicy::Queue, false});
    const Rational want_u(l1 + l2, unequal.period);
    const bool audit_u = audit_schedule(p, unequal).valid;
    const std::string prob_u = sim_problems(ru, false);
    o.check(audit_u && prob_u.empty() && ru.joint_throughput == want_u &&
                ru.path(1)->average_throughput == Rational(l1, unequal.period) &&
                ru.path(2)->average_throughput == Rational(l2, unequal.period),
            [&] {
              return instance_tag(static_cast<long>(i)) + "unequal " + params +
                     " L1=" + std::to_string(l1) + " L2=" + std::to_string(l2) + " measured " +
                     str(ru.joint_throughput) + " expected " + str(want_u) + prob_u +
                     (audit_u ? "" : " audit failed");
            });
  }
  return static_cast<long>(corpus.size());
}

std::vector<int> reachable_periods(const PathPair& p, int path_id) {
  std::vector<int> out;
  for (int t = 1; t <= p.path(path_id).n_senders; ++t) {
    if (is_reachable_period(p, path_id, t)) out.push_back(t);
  }
  return out;
}

long equal_period_optimal(const SuiteConfig& c, Outcome& o) {
  const auto corpus = pair_corpus(c, 7, 12);
  long checked = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PathPair& p = corpus[i];
    for (int t1 : reachable_periods(p, 1)) {
      for (int t2 : reachable_periods(p, 2)) {
        if (t1 + t2 > 7) continue;
        ++checked;
        const int algo = schedule_pair_equal(p, t1, t2, 1).period;
        const int brute = brute_min_joint_period(p, t1, t2);
        o.check(algo == brute, [&] {
          return instance_tag(static_cast<long>(i)) + "T1=" + std::to_string(t1) +
                 " T2=" + std::to_string(t2) + " schedule period " + std::to_string(algo) +
                 " best arrangement " + std::to_string(brute);
        });
      }
    }
  }
  return checked;
}

long bounds_hold(const SuiteConfig& c, Outcome& o) {
  const auto corpus = pair_corpus(c, 8, kPairTotalMax);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const PathPair& p = corpus[i];
    const std::string tag = instance_tag(static_cast<long>(i));
    const int i1 = intensity(p, p.path_nodes(1));
    const int i2 = intensity(p, p.path_nodes(2));
    const int i12 = intensity(p, p.all_nodes());
    o.check(i12 >= std::max(i1, i2), [&] { return tag + "joint intensity below a path's"; });
    o.check(i12 <= i1 + i2, [&] { return tag + "joint intensity above the sum"; });

    for (int t1 : reachable_periods(p, 1)) {
      for (int t2 : reachable_periods(p, 2)) {
        const std::string params = " T1=" + std::to_string(t1) + " T2=" + std::to_string(t2);
        const ConcurrencyMatrix cm = build_matrix(p, t1, t2);
        const int u = max_support_set(cm.entries).size();
        o.check(u <= t1 + t2 - i12, [&] { return tag + "U* above T1+T2-I*" + params; });

        const Rational r2 = predicted_throughput(schedule_pair_equal(p, t1, t2, 1));
        o.check(r2 <= Rational(2, i12), [&] { return tag + "equal throughput above 2/I*" + params; });
        if (u == t1 + t2 - i12) {
          o.check(r2 == Rational(2, i12), [&] { return tag + "equal throughput misses 2/I*" + params; });
        }

        const Rational ceiling = Rational(1, t1) + Rational(1, t2);
        for (int l1 = 1; l1 <= 3; ++l1) {
          for (int l2 = 1; l2 <= 3; ++l2) {
            const Schedule s = schedule_pair_unequal(p, t1, t2, l1, l2);
            const Rational r3 = predicted_throughput(s);
            o.check(r3 <= ceiling, [&] {
              return tag + "unequal throughput " + str(r3) + " above " + str(ceiling) + params;
            });
            if (s.support_number == l1 * t1 && l1 * t1 == l2 * t2) {
              o.check(r3 == ceiling, [&] { return tag + "unequal throughput misses ceiling" + params; });
            }
          }
        }
      }
    }
  }
  return static_cast<long>(corpus.size());
}

long continuation_scaling(const SuiteConfig& c, Outcome& o) {
  Rng rng(corpus_seed(c, 9));
  const long count = std::max(100, c.instances);
  for (long i = 0; i < count; ++i) {
    const BinaryMatrix m = random_matrix(rng, 4, 4);
    const int base = max_support_set(m).size();
    for (int l = 1; l <= 3; ++l) {
      const int tiled = max_support_set(continuation(m, l, l)).size();
      o.check(tiled == l * base, [&] {
        return instance_tag(i) + "L=" + std::to_string(l) + " U*=" + std::to_string(tiled) +
               " base " + std::to_string(base) + "\n" + m.to_grid();
      });
    }
  }
  return count;
}

long unique_partition(const SuiteConfig&, Outcome& o) {
  long checked = 0;
  for (int n = 1; n <= 9; ++n) {
    for (int width = 1; width <= n; ++width) {
      ++checked;
      const PathPair p = window_path(n, width);
      const int clique = intensity(p, p.path_nodes(1));
      const auto parts = concurrency_partitions(p, 1, clique);
      std::vector<std::vector<int>> spaced;
      for (int phase = 1; phase <= clique; ++phase) {
        std::vector<int> g;
        for (int seq = phase; seq <= n; seq += clique) g.push_back(seq);
        spaced.push_back(g);
      }
      o.check(clique == width && parts.size() == 1 && parts.front() == spaced, [&] {
        return "N=" + std::to_string(n) + " width=" + std::to_string(width) + " I*=" +
               std::to_string(clique) + " partitions=" + std::to_string(parts.size());
      });
    }
  }
  return checked;
}

struct Entry {
  int id;
  const char* name;
  double time_limit;
  long (*body)(const SuiteConfig&, Outcome&);
};

constexpr Entry kEntries[] = {
    {1, "intrinsic period equals interference intensity", 10.0, intrinsic_period_matches},
    {2, "reachable exactly from interference intensity upward", 0.0, reachability_threshold},
    {3, "single-path wave delivers one block per period", 0.0, primary_throughput},
    {4, "first block delay equals path length", 0.0, first_block_delay},
    {5, "maximum supporting set matches exhaustive search", 0.0, support_oracle},
    {6, "pair schedules deliver their predicted throughput", 0.0, pair_throughput},
    {7, "equal-opportunity period is minimal", 60.0, equal_period_optimal},
    {8, "intensity, support and throughput bounds", 0.0, bounds_hold},
    {9, "continuation scales the supporting number", 0.0, continuation_scaling},
    {10, "equally spaced split is the only minimal partition", 0.0, unique_partition},
};

}  // namespace

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  for (const Entry& e : kEntries) {
    if (e.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.name = e.name;
    r.time_limit = e.time_limit;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.instances = e.body(config, o);
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.failures() == 0;
    if (r.passed && r.time_limit > 0.0 && r.seconds >= r.time_limit) {
      r.passed = false;
      o.fail("took longer than the time limit");
    }
    r.detail = r.passed ? "ok" : std::to_string(o.failures()) + " failure(s); first: " + o.first();
    return r;
  }
  throw DomainError("no check with id " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(const SuiteConfig& config) {
  std::vector<CriterionResult> out;
  for (const Entry& e : kEntries) out.push_back(run_criterion(e.id, config));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << r.instances
     << " instances, " << timing;
  if (r.time_limit > 0.0) os << ", limit " << r.time_limit << " s";
  os << ")";
  if (!r.passed) os << "\n      " << r.detail;
  return os.str();
}

}  // namespace netwave::checks
