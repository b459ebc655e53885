#include "netwave/scenario.hpp"

#include <gtest/gtest.h>

#include "netwave/analysis.hpp"
#include "netwave/error.hpp"
#include "netwave/io.hpp"
#include "netwave/optimizer.hpp"
#include "netwave/simulator.hpp"
#include "test_support.hpp"

namespace netwave {
namespace {

using nlohmann::json;

std::string file(const std::string& name) { return std::string(NETWAVE_SCENARIO_DIR) + "/" + name; }

// Message of the ConfigError raised by parsing `doc`, or "" when it parses.
std::string parse_error(const json& doc) {
  try {
    parse_scenario(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

json line_doc() {
  return json::parse(R"({
    "paths": [{"id": 1, "n_senders": 3}],
    "topology": {"interference_radius": 1.5, "positions": {"1": [[0], [1], [2], [3]]}}
  })");
}

json network_doc() {
  return json::parse(R"({
    "topology": {
      "interference_radius": 1.0,
      "nodes": {"s": [0, 0], "m": [1, 0], "t": [2, 0], "u": [1, 1]},
      "links": [["s", "m"], ["m", "t"], ["s", "u"], ["u", "t"]]
    },
    "flows": {"1": {"source": "s", "destination": "t"}}
  })");
}

template <typename T>
T round_trip(const T& v) {
  return json::parse(json(v).dump()).get<T>();
}

TEST(Files, EveryShippedScenarioParses) {
  for (const char* name : {"chain6.json", "far_pair.json", "crossing_pair.json", "grid_routes.json"}) {
    SCOPED_TRACE(name);
    const Scenario s = load_scenario(file(name));
    const PathPair p = scenario_pair(s);
    EXPECT_GE(p.path_count(), 1);
    EXPECT_EQ(parse_scenario(scenario_to_json(s)), s);
  }
}

TEST(Files, ChainMatchesWindowRelation) {
  const PathPair p = scenario_pair(load_scenario(file("chain6.json")));
  EXPECT_EQ(p.relation(), test::window(6, 3).relation());
}

TEST(Files, MissingOrMalformedFile) {
  EXPECT_THROW(load_scenario(file("no_such.json")), ConfigError);
  EXPECT_THROW(load_scenario(NETWAVE_SCENARIO_DIR), ConfigError);
}

TEST(Parse, LineTopology) {
  const Scenario s = parse_scenario(line_doc());
  ASSERT_TRUE(s.topology.has_value());
  EXPECT_EQ(s.paths, (std::vector<PrimaryPath>{{1, 3}}));
  EXPECT_EQ(s.topology->routes.at(1)[2].position, (Point{2, 0}));
  EXPECT_TRUE(s.topology->half_duplex);
  EXPECT_EQ(scenario_pair(s).relation(), test::window(3, 3).relation());
}

TEST(Parse, ExplicitRelation) {
  const json pairs = json::parse(R"({
    "paths": [{"id": 1, "n_senders": 2}, {"id": 2, "n_senders": 1}],
    "relation": {"interfering": [[[1, 1], [2, 1]]]}
  })");
  const PathPair p = scenario_pair(parse_scenario(pairs));
  EXPECT_TRUE(p.interferes({1, 1}, {2, 1}));
  EXPECT_FALSE(p.interferes({1, 2}, {2, 1}));
  EXPECT_FALSE(p.interferes({1, 1}, {1, 2}));

  const json matrix = json::parse(R"({
    "paths": [{"id": 1, "n_senders": 3}],
    "relation": {"matrix": [[0, 1, 0], [1, 0, 1], [0, 1, 0]]}
  })");
  EXPECT_EQ(scenario_pair(parse_scenario(matrix)).relation(), test::window(3, 2).relation());
}

TEST(Parse, NamedSitesShareRadios) {
  json doc = line_doc();
  doc["topology"]["interference_radius"] = 0.1;
  doc["paths"].push_back({{"id", 2}, {"n_senders", 1}});
  doc["topology"]["positions"]["2"] = json::parse(R"([{"name": "hub", "at": [9, 9]}, [9, 10]])");
  doc["topology"]["positions"]["1"][1] = json::parse(R"({"name": "hub", "at": [1]})");
  const PathPair p = scenario_pair(parse_scenario(doc));
  EXPECT_TRUE(p.interferes({1, 1}, {2, 1}));
  EXPECT_TRUE(p.interferes({1, 2}, {2, 1}));
  EXPECT_FALSE(p.interferes({1, 3}, {2, 1}));
}

TEST(Parse, ErrorsNameTheLocation) {
  json both = line_doc();
  both["relation"] = {{"interfering", json::array()}};
  EXPECT_EQ(parse_error(both), "/: give exactly one of topology or relation");

  json neither = line_doc();
  neither.erase("topology");
  EXPECT_EQ(parse_error(neither), "/: give exactly one of topology or relation");

  json unknown = line_doc();
  unknown["colour"] = "red";
  EXPECT_EQ(parse_error(unknown), "/colour: unknown key");

  json bad_point = line_doc();
  bad_point["topology"]["positions"]["1"][2] = json::array({1, 2, 3});
  EXPECT_EQ(parse_error(bad_point), "/topology/positions/1/2: expected [x] or [x, y]");

  json short_route = line_doc();
  short_route["topology"]["positions"]["1"].erase(3);
  EXPECT_EQ(parse_error(short_route).rfind("/topology/positions: missing position", 0), 0U);

  json radius = line_doc();
  radius["topology"]["interference_radius"] = -1;
  EXPECT_EQ(parse_error(radius), "/topology/interference_radius: must be nonnegative");

  json no_paths = line_doc();
  no_paths.erase("paths");
  EXPECT_EQ(parse_error(no_paths), "/paths: missing");

  json order = line_doc();
  order["paths"][0]["id"] = 2;
  EXPECT_EQ(parse_error(order), "/paths/0/id: paths must be numbered 1, 2 in order");
}

TEST(Parse, RelationErrors) {
  json asym = json::parse(R"({
    "paths": [{"id": 1, "n_senders": 2}],
    "relation": {"matrix": [[0, 1], [0, 0]]}
  })");
  EXPECT_EQ(parse_error(asym).rfind("/relation: relation matrix is not symmetric", 0), 0U);

  json foreign = json::parse(R"({
    "paths": [{"id": 1, "n_senders": 2}],
    "relation": {"interfering": [[[1, 1], [1, 3]]]}
  })");
  EXPECT_EQ(parse_error(foreign), "/relation: interfering pair names unknown node n(1,3)");
}

TEST(Network, FlowsAndRoutes) {
  const Scenario s = parse_scenario(network_doc());
  EXPECT_TRUE(s.uses_network());
  const auto cands = route_candidates(s);
  EXPECT_EQ(cands.at(1), (std::vector<Route>{{"s", "m", "t"}, {"s", "u", "t"}}));
  const PathPair p = scenario_pair(s);
  EXPECT_EQ(p.paths(), (std::vector<PrimaryPath>{{1, 2}}));

  json hops = network_doc();
  hops["search"] = {{"max_hops", 1}};
  EXPECT_THROW(route_candidates(parse_scenario(hops)), ConfigError);

  json fixed = network_doc();
  fixed.erase("flows");
  fixed["routes"] = {{"1", {{"s", "u", "t"}}}};
  EXPECT_EQ(route_candidates(parse_scenario(fixed)).at(1), (std::vector<Route>{{"s", "u", "t"}}));
}

TEST(Network, Errors) {
  json with_paths = network_doc();
  with_paths["paths"] = json::array({{{"id", 1}, {"n_senders", 2}}});
  EXPECT_EQ(parse_error(with_paths), "/paths: paths are derived from routes or flows");

  json unknown_node = network_doc();
  unknown_node["flows"]["1"]["destination"] = "z";
  EXPECT_EQ(parse_error(unknown_node), "/flows/1/destination: unknown node");

  json bad_link = network_doc();
  bad_link["topology"]["links"].push_back({"s", "q"});
  EXPECT_EQ(parse_error(bad_link), "/topology/links/4/1: unknown node \"q\"");

  json both = network_doc();
  both["routes"] = {{"1", {{"s", "m", "t"}}}};
  EXPECT_EQ(parse_error(both), "/flows: path 1 has both routes and a flow");

  json revisit = network_doc();
  revisit.erase("flows");
  revisit["routes"] = {{"1", {{"s", "m", "s"}}}};
  EXPECT_EQ(parse_error(revisit), "/routes/1/0: a route may not revisit a node");

  json none = network_doc();
  none.erase("flows");
  EXPECT_EQ(parse_error(none), "/: a node map needs routes or flows");
}

TEST(Search, BoundsParseAndValidate) {
  json doc = line_doc();
  doc["search"] = json::parse(R"({"max_activations": 3, "max_hops": 4, "period_range": {"1": [2, 3]}})");
  const Scenario s = parse_scenario(doc);
  EXPECT_EQ(s.search.max_activations, 3);
  EXPECT_EQ(s.search.max_hops, 4);
  EXPECT_EQ(s.search.period_range.at(1), (std::array<int, 2>{2, 3}));

  doc["search"]["period_range"]["1"] = json::array({3, 2});
  EXPECT_EQ(parse_error(doc), "/search/period_range/1: expected 1 <= low <= high");
  doc["search"]["period_range"].erase("1");
  doc["search"]["max_activations"] = 0;
  EXPECT_EQ(parse_error(doc), "/search/max_activations: must be at least 1");
}

TEST(Io, TypedRoundTrips) {
  const PathPair p = test::windowed_pair(4, 2, 6, 3, [](int a, int) { return a % 2 == 0; });
  EXPECT_EQ(round_trip(NodeRef{2, 5}), (NodeRef{2, 5}));
  EXPECT_EQ(json(NodeRef{2, 5}), json::parse("[2,5]"));
  EXPECT_EQ(round_trip(validate_path_rules(checks::window_path(4, 1), 1)),
            validate_path_rules(checks::window_path(4, 1), 1));
  const ConcurrencyMatrix m = build_matrix(p, 2, 3);
  EXPECT_EQ(round_trip(m), m);
  const SupportSet u = max_support_set(m.entries);
  EXPECT_EQ(round_trip(u), u);
  const Schedule s = schedule_pair_unequal(p, 2, 3, 2, 1);
  EXPECT_EQ(round_trip(s), s);
  EXPECT_EQ(json(s)["predicted_throughput"], json(predicted_throughput(s)));
  const SimReport r = run(p, s, 3, 2, {std::nullopt, true});
  EXPECT_EQ(round_trip(r), r);
  EXPECT_EQ(json(Rational(2, 4)), json::parse(R"({"num": 1, "den": 2})"));

  const IntensityReport a = analyze_set(p, p.all_nodes());
  EXPECT_EQ(json(round_trip(a)), json(a));

  EXPECT_EQ(pair_from_json(pair_json(p)).relation(), p.relation());
  EXPECT_EQ(relation_from_json(relation_json(p.relation()), {4, 6}), p.relation());
}

TEST(Io, OptimizationResultRoundTrip) {
  const Scenario sc = load_scenario(file("grid_routes.json"));
  const OptimizationResult res = optimize(sc, default_space(sc));
  const OptimizationResult back = result_from_json(json::parse(result_json(res).dump()));
  EXPECT_EQ(back.best, res.best);
  EXPECT_EQ(back.best_routes, res.best_routes);
  EXPECT_EQ(back.best_throughput, res.best_throughput);
  EXPECT_EQ(back.schedule, res.schedule);
  EXPECT_EQ(back.search_log, res.search_log);
  EXPECT_EQ(back.pair.relation(), res.pair.relation());
  EXPECT_EQ(result_json(back), result_json(res));
}

}  // namespace
}  // namespace netwave
