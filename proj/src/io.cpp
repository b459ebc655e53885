#include "netwave/io.hpp"

#include "netwave/error.hpp"

namespace netwave {

NLOHMANN_JSON_SERIALIZE_ENUM(ScheduleKind, {{ScheduleKind::Primary, "primary"},
                                            {ScheduleKind::PairEqual, "pair-equal"},
                                            {ScheduleKind::PairUnequal, "pair-unequal"}})
NLOHMANN_JSON_SERIALIZE_ENUM(BeatCategory, {{BeatCategory::Primary, "primary"},
                                            {BeatCategory::Joint, "joint"},
                                            {BeatCategory::Path1Only, "path1-only"},
                                            {BeatCategory::Path2Only, "path2-only"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Spread, {{Spread::Downstream, "downstream"}, {Spread::Upstream, "upstream"}})
NLOHMANN_JSON_SERIALIZE_ENUM(BufferPolicy, {{BufferPolicy::Single, "single"},
                                            {BufferPolicy::Queue, "queue"}})

void to_json(json& j, const NodeRef& v) { j = json::array({v.path_id, v.seq}); }
void from_json(const json& j, NodeRef& v) {
  v.path_id = j.at(0).get<int>();
  v.seq = j.at(1).get<int>();
}

void to_json(json& j, const PrimaryPath& v) { j = {{"id", v.id}, {"n_senders", v.n_senders}}; }
void from_json(const json& j, PrimaryPath& v) {
  j.at("id").get_to(v.id);
  j.at("n_senders").get_to(v.n_senders);
}

json relation_json(const InterferenceRelation& rel) {
  json pairs = json::array();
  for (int a = 0; a < rel.total(); ++a) {
    for (int b = a + 1; b < rel.total(); ++b) {
      if ((rel.conflicts(a) >> b) & 1) pairs.push_back({rel.node_at(a), rel.node_at(b)});
    }
  }
  return {{"interfering", pairs}};
}

void to_json(json& j, const InterferenceRelation& v) { j = relation_json(v); }

InterferenceRelation relation_from_json(const json& j, std::vector<int> sizes) {
  std::vector<std::array<NodeRef, 2>> pairs;
  for (const auto& p : j.at("interfering")) {
    pairs.push_back({p.at(0).get<NodeRef>(), p.at(1).get<NodeRef>()});
  }
  return InterferenceRelation::from_pairs(std::move(sizes), pairs);
}

json pair_json(const PathPair& pair) {
  return {{"paths", pair.paths()}, {"relation", relation_json(pair.relation())}};
}

PathPair pair_from_json(const json& j) {
  const auto paths = j.at("paths").get<std::vector<PrimaryPath>>();
  std::vector<int> sizes;
  for (const auto& p : paths) sizes.push_back(p.n_senders);
  return PathPair(paths, relation_from_json(j.at("relation"), sizes));
}

void to_json(json& j, const RuleReport& v) {
  json violations = json::array();
  for (const auto& x : v.violations) violations.push_back({{"kind", x.kind}, {"j", x.j}, {"k", x.k}});
  j = {{"path_id", v.path_id},
       {"downstream_holds", v.downstream_holds},
       {"upstream_holds", v.upstream_holds},
       {"violations", violations}};
}
void from_json(const json& j, RuleReport& v) {
  j.at("path_id").get_to(v.path_id);
  j.at("downstream_holds").get_to(v.downstream_holds);
  j.at("upstream_holds").get_to(v.upstream_holds);
  v.violations.clear();
  for (const auto& x : j.at("violations")) {
    v.violations.push_back({x.at("kind").get<Spread>(), x.at("j").get<int>(), x.at("k").get<int>()});
  }
}

void to_json(json& j, const NodeDegree& v) {
  j = {{"node", v.node}, {"concurrency", v.concurrency}, {"interference", v.interference}};
}
void from_json(const json& j, NodeDegree& v) {
  j.at("node").get_to(v.node);
  j.at("concurrency").get_to(v.concurrency);
  j.at("interference").get_to(v.interference);
}

void to_json(json& j, const IntensityReport& v) {
  j = {{"interference_intensity", v.interference_intensity},
       {"concurrency_intensity", v.concurrency_intensity},
       {"intrinsic_interference_degree", v.intrinsic_interference_degree},
       {"intrinsic_concurrency_degree", v.intrinsic_concurrency_degree},
       {"dominant", v.dominant},
       {"witness_interference_set", v.witness_interference_set},
       {"witness_concurrency_set", v.witness_concurrency_set},
       {"degrees", v.degrees}};
}
void from_json(const json& j, IntensityReport& v) {
  j.at("interference_intensity").get_to(v.interference_intensity);
  j.at("concurrency_intensity").get_to(v.concurrency_intensity);
  j.at("intrinsic_interference_degree").get_to(v.intrinsic_interference_degree);
  j.at("intrinsic_concurrency_degree").get_to(v.intrinsic_concurrency_degree);
  j.at("dominant").get_to(v.dominant);
  j.at("witness_interference_set").get_to(v.witness_interference_set);
  j.at("witness_concurrency_set").get_to(v.witness_concurrency_set);
  j.at("degrees").get_to(v.degrees);
}

void to_json(json& j, const BinaryMatrix& v) {
  j = json::array();
  for (int r = 0; r < v.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < v.cols(); ++c) row.push_back(v(r, c) ? 1 : 0);
    j.push_back(row);
  }
}
void from_json(const json& j, BinaryMatrix& v) {
  v = BinaryMatrix::from_rows(j.get<std::vector<std::vector<int>>>());
}

void to_json(json& j, const ConcurrencyMatrix& v) {
  j = {{"spacing1", v.spacing1}, {"spacing2", v.spacing2}, {"entries", v.entries}};
}
void from_json(const json& j, ConcurrencyMatrix& v) {
  j.at("spacing1").get_to(v.spacing1);
  j.at("spacing2").get_to(v.spacing2);
  j.at("entries").get_to(v.entries);
}

void to_json(json& j, const EquallySpacedSubset& v) {
  j = {{"path_id", v.path_id}, {"phase", v.phase}, {"spacing", v.spacing}};
}
void from_json(const json& j, EquallySpacedSubset& v) {
  j.at("path_id").get_to(v.path_id);
  j.at("phase").get_to(v.phase);
  j.at("spacing").get_to(v.spacing);
}

void to_json(json& j, const Cell& v) { j = json::array({v.row, v.col}); }
void from_json(const json& j, Cell& v) {
  v.row = j.at(0).get<int>();
  v.col = j.at(1).get<int>();
}

void to_json(json& j, const SupportSet& v) { j = v.elements; }
void from_json(const json& j, SupportSet& v) { j.get_to(v.elements); }

void to_json(json& j, const Beat& v) {
  j = {{"activations", v.activations}, {"category", v.category}};
}
void from_json(const json& j, Beat& v) {
  j.at("activations").get_to(v.activations);
  j.at("category").get_to(v.category);
}

void to_json(json& j, const PathPlan& v) {
  j = {{"path_id", v.path_id}, {"spacing", v.spacing}, {"activations", v.activations}};
}
void from_json(const json& j, PathPlan& v) {
  j.at("path_id").get_to(v.path_id);
  j.at("spacing").get_to(v.spacing);
  j.at("activations").get_to(v.activations);
}

void to_json(json& j, const Schedule& v) {
  j = {{"kind", v.kind},
       {"period", v.period},
       {"beats", v.beats},
       {"plans", v.plans},
       {"support_number", v.support_number},
       {"predicted_throughput", predicted_throughput(v)}};
}
void from_json(const json& j, Schedule& v) {
  j.at("kind").get_to(v.kind);
  j.at("period").get_to(v.period);
  j.at("beats").get_to(v.beats);
  j.at("plans").get_to(v.plans);
  j.at("support_number").get_to(v.support_number);
}

void to_json(json& j, const BlockDelay& v) {
  j = {{"path_id", v.path_id},
       {"block_id", v.block_id},
       {"injected_beat", v.injected_beat},
       {"delivered_beat", v.delivered_beat},
       {"delay", v.delay}};
}
void from_json(const json& j, BlockDelay& v) {
  j.at("path_id").get_to(v.path_id);
  j.at("block_id").get_to(v.block_id);
  j.at("injected_beat").get_to(v.injected_beat);
  j.at("delivered_beat").get_to(v.delivered_beat);
  j.at("delay").get_to(v.delay);
}

void to_json(json& j, const PathMeasurement& v) {
  j = {{"path_id", v.path_id},
       {"delivered", v.delivered},
       {"average_throughput", v.average_throughput}};
}
void from_json(const json& j, PathMeasurement& v) {
  j.at("path_id").get_to(v.path_id);
  j.at("delivered").get_to(v.delivered);
  j.at("average_throughput").get_to(v.average_throughput);
}

void to_json(json& j, const Violation& v) { j = {{"beat", v.beat}, {"a", v.a}, {"b", v.b}}; }
void from_json(const json& j, Violation& v) {
  j.at("beat").get_to(v.beat);
  j.at("a").get_to(v.a);
  j.at("b").get_to(v.b);
}

void to_json(json& j, const BlockMove& v) {
  j = {{"path_id", v.path_id}, {"block_id", v.block_id}, {"from", v.from_seq}, {"to", v.to_seq}};
}
void from_json(const json& j, BlockMove& v) {
  j.at("path_id").get_to(v.path_id);
  j.at("block_id").get_to(v.block_id);
  j.at("from").get_to(v.from_seq);
  j.at("to").get_to(v.to_seq);
}

void to_json(json& j, const BeatTrace& v) {
  j = {{"beat", v.beat}, {"active", v.active}, {"moves", v.moves}};
}
void from_json(const json& j, BeatTrace& v) {
  j.at("beat").get_to(v.beat);
  j.at("active").get_to(v.active);
  j.at("moves").get_to(v.moves);
}

void to_json(json& j, const SimReport& v) {
  j = {{"buffers", v.buffers},
       {"window_start", v.window_start},
       {"window_length", v.window_length},
       {"paths", v.paths},
       {"joint_throughput", v.joint_throughput},
       {"deliveries", v.deliveries},
       {"violation_count", v.violation_count},
       {"violations", v.violations},
       {"blocked_transmissions", v.blocked_transmissions},
       {"peak_occupancy", v.peak_occupancy},
       {"fifo_ok", v.fifo_ok},
       {"conservation_ok", v.conservation_ok}};
  if (!v.trace.empty()) j["trace"] = v.trace;
}
void from_json(const json& j, SimReport& v) {
  j.at("buffers").get_to(v.buffers);
  j.at("window_start").get_to(v.window_start);
  j.at("window_length").get_to(v.window_length);
  j.at("paths").get_to(v.paths);
  j.at("joint_throughput").get_to(v.joint_throughput);
  j.at("deliveries").get_to(v.deliveries);
  j.at("violation_count").get_to(v.violation_count);
  j.at("violations").get_to(v.violations);
  j.at("blocked_transmissions").get_to(v.blocked_transmissions);
  j.at("peak_occupancy").get_to(v.peak_occupancy);
  j.at("fifo_ok").get_to(v.fifo_ok);
  j.at("conservation_ok").get_to(v.conservation_ok);
  v.trace.clear();
  if (j.contains("trace")) j.at("trace").get_to(v.trace);
}

void to_json(json& j, const Candidate& v) {
  j = {{"route_index", v.route_index},
       {"spacing1", v.spacing1},
       {"spacing2", v.spacing2},
       {"evaluated", v.evaluated}};
  if (v.evaluated) {
    j["repeats1"] = v.repeats1;
    j["repeats2"] = v.repeats2;
    j["support_number"] = v.support_number;
    j["period"] = v.period;
    j["throughput"] = v.throughput;
  } else {
    j["note"] = v.note;
  }
}
void from_json(const json& j, Candidate& v) {
  v = Candidate{};
  j.at("route_index").get_to(v.route_index);
  j.at("spacing1").get_to(v.spacing1);
  j.at("spacing2").get_to(v.spacing2);
  j.at("evaluated").get_to(v.evaluated);
  if (v.evaluated) {
    j.at("repeats1").get_to(v.repeats1);
    j.at("repeats2").get_to(v.repeats2);
    j.at("support_number").get_to(v.support_number);
    j.at("period").get_to(v.period);
    j.at("throughput").get_to(v.throughput);
  } else {
    j.at("note").get_to(v.note);
  }
}

json result_json(const OptimizationResult& r) {
  return {{"best_routes", r.best_routes}, {"best", r.best},
          {"best_throughput", r.best_throughput}, {"pair", pair_json(r.pair)},
          {"schedule", r.schedule}, {"search_log", r.search_log}};
}

OptimizationResult result_from_json(const json& j) {
  return {j.at("best_routes").get<std::vector<Route>>(), j.at("best").get<Candidate>(),
          j.at("best_throughput").get<Rational>(), pair_from_json(j.at("pair")),
          j.at("schedule").get<Schedule>(), j.at("search_log").get<std::vector<Candidate>>()};
}

}  // namespace netwave
