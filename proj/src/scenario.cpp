#include "netwave/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "netwave/error.hpp"

namespace netwave {

using nlohmann::json;

namespace {

// A JSON value together with its location, for error messages.
class Field {
 public:
  Field(const json& value, std::string where) : v_(value), where_(std::move(where)) {}

  const json& value() const { return v_; }
  const std::string& where() const { return where_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError((where_.empty() ? "/" : where_) + ": " + what);
  }

  bool has(const std::string& key) const { return v_.is_object() && v_.contains(key); }

  Field at(const std::string& key) const {
    if (!v_.is_object()) fail("expected an object");
    if (!v_.contains(key)) Field(v_, where_ + "/" + key).fail("missing");
    return {v_.at(key), where_ + "/" + key};
  }

  Field at(std::size_t i) const { return {v_.at(i), where_ + "/" + std::to_string(i)}; }

  std::vector<Field> items() const {
    if (!v_.is_array()) fail("expected an array");
    std::vector<Field> out;
    for (std::size_t i = 0; i < v_.size(); ++i) out.push_back(at(i));
    return out;
  }

  std::vector<std::pair<std::string, Field>> members() const {
    if (!v_.is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Field>> out;
    for (auto it = v_.begin(); it != v_.end(); ++it) {
      out.emplace_back(it.key(), Field(it.value(), where_ + "/" + it.key()));
    }
    return out;
  }

  void only(std::initializer_list<const char*> keys) const {
    for (const auto& [k, f] : members()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        f.fail("unknown key");
      }
    }
  }

  int integer() const {
    if (!v_.is_number_integer()) fail("expected an integer");
    return v_.get<int>();
  }
  double number() const {
    if (!v_.is_number()) fail("expected a number");
    return v_.get<double>();
  }
  bool boolean() const {
    if (!v_.is_boolean()) fail("expected true or false");
    return v_.get<bool>();
  }
  std::string text() const {
    if (!v_.is_string()) fail("expected a string");
    return v_.get<std::string>();
  }

 private:
  const json& v_;
  std::string where_;
};

int path_key(const std::string& key, const Field& f) {
  if (key != "1" && key != "2") f.fail("path ids are \"1\" or \"2\"");
  return key == "1" ? 1 : 2;
}

Point parse_point(const Field& f) {
  const auto xs = f.items();
  if (xs.empty() || xs.size() > 2) f.fail("expected [x] or [x, y]");
  return {xs[0].number(), xs.size() == 2 ? xs[1].number() : 0.0};
}

json point_json(const Point& p) { return p.y == 0.0 ? json::array({p.x}) : json::array({p.x, p.y}); }

Site parse_site(const Field& f) {
  if (f.value().is_array()) return {"", parse_point(f)};
  f.only({"name", "at"});
  return {f.at("name").text(), parse_point(f.at("at"))};
}

NodeRef parse_node(const Field& f) {
  const auto xs = f.items();
  if (xs.size() != 2) f.fail("expected [path, seq]");
  return {xs[0].integer(), xs[1].integer()};
}

void parse_paths(const Field& f, Scenario& s) {
  int expected = 1;
  for (const Field& item : f.items()) {
    item.only({"id", "n_senders"});
    const int id = item.at("id").integer();
    if (id != expected++) item.at("id").fail("paths must be numbered 1, 2 in order");
    const int n = item.at("n_senders").integer();
    if (n < 1) item.at("n_senders").fail("must be at least 1");
    s.paths.push_back({id, n});
  }
  if (s.paths.empty() || s.paths.size() > 2) f.fail("expected one or two paths");
}

void parse_topology(const Field& f, Scenario& s) {
  f.only({"interference_radius", "half_duplex", "positions", "nodes", "links"});
  GeometricTopology topo;
  topo.interference_radius = f.at("interference_radius").number();
  if (topo.interference_radius < 0) f.at("interference_radius").fail("must be nonnegative");
  if (f.has("half_duplex")) topo.half_duplex = f.at("half_duplex").boolean();

  if (f.has("positions") == f.has("nodes")) f.fail("give exactly one of positions or nodes");
  if (f.has("positions")) {
    if (f.has("links")) f.at("links").fail("links belong to a node map");
    for (const auto& [key, route] : f.at("positions").members()) {
      auto& sites = topo.routes[path_key(key, route)];
      for (const Field& item : route.items()) sites.push_back(parse_site(item));
    }
  } else {
    for (const auto& [name, at] : f.at("nodes").members()) s.nodes[name] = parse_point(at);
    if (s.nodes.empty()) f.at("nodes").fail("no nodes");
    if (f.has("links")) {
      for (const Field& link : f.at("links").items()) {
        const auto ends = link.items();
        if (ends.size() != 2) link.fail("expected [from, to]");
        std::array<std::string, 2> l{ends[0].text(), ends[1].text()};
        for (std::size_t e = 0; e < 2; ++e) {
          if (!s.nodes.contains(l[e])) ends[e].fail("unknown node \"" + l[e] + "\"");
        }
        if (l[0] == l[1]) link.fail("self link");
        s.links.push_back(l);
      }
    }
  }
  s.topology = std::move(topo);
}

void parse_relation(const Field& f, Scenario& s) {
  f.only({"interfering", "matrix"});
  if (f.has("interfering") == f.has("matrix")) f.fail("give exactly one of interfering or matrix");
  std::vector<int> sizes;
  for (const auto& p : s.paths) sizes.push_back(p.n_senders);
  try {
    if (f.has("matrix")) {
      std::vector<std::vector<bool>> m;
      for (const Field& row : f.at("matrix").items()) {
        auto& out = m.emplace_back();
        for (const Field& cell : row.items()) {
          const int v = cell.integer();
          if (v != 0 && v != 1) cell.fail("expected 0 or 1");
          out.push_back(v == 1);
        }
      }
      s.relation = InterferenceRelation::from_matrix(sizes, m);
    } else {
      std::vector<std::array<NodeRef, 2>> pairs;
      for (const Field& item : f.at("interfering").items()) {
        const auto ends = item.items();
        if (ends.size() != 2) item.fail("expected a pair of nodes");
        pairs.push_back({parse_node(ends[0]), parse_node(ends[1])});
      }
      s.relation = InterferenceRelation::from_pairs(sizes, pairs);
    }
  } catch (const DomainError& e) {
    f.fail(e.what());
  }
}

void parse_routes(const Field& f, Scenario& s) {
  for (const auto& [key, list] : f.members()) {
    auto& routes = s.routes[path_key(key, list)];
    for (const Field& r : list.items()) {
      Route route;
      for (const Field& hop : r.items()) {
        route.push_back(hop.text());
        if (!s.nodes.contains(route.back())) hop.fail("unknown node \"" + route.back() + "\"");
      }
      if (route.size() < 2) r.fail("a route needs at least two nodes");
      if (std::set<std::string>(route.begin(), route.end()).size() != route.size()) {
        r.fail("a route may not revisit a node");
      }
      routes.push_back(std::move(route));
    }
    if (routes.empty()) list.fail("no candidate routes");
  }
}

void parse_flows(const Field& f, Scenario& s) {
  for (const auto& [key, flow] : f.members()) {
    flow.only({"source", "destination"});
    Flow out{flow.at("source").text(), flow.at("destination").text()};
    if (!s.nodes.contains(out.source)) flow.at("source").fail("unknown node");
    if (!s.nodes.contains(out.destination)) flow.at("destination").fail("unknown node");
    if (out.source == out.destination) flow.fail("source equals destination");
    s.flows[path_key(key, flow)] = out;
  }
}

void parse_search(const Field& f, Scenario& s) {
  f.only({"max_activations", "max_hops", "period_range"});
  if (f.has("max_activations")) {
    s.search.max_activations = f.at("max_activations").integer();
    if (s.search.max_activations < 1) f.at("max_activations").fail("must be at least 1");
  }
  if (f.has("max_hops")) {
    s.search.max_hops = f.at("max_hops").integer();
    if (*s.search.max_hops < 1) f.at("max_hops").fail("must be at least 1");
  }
  if (f.has("period_range")) {
    for (const auto& [key, range] : f.at("period_range").members()) {
      const auto ends = range.items();
      if (ends.size() != 2) range.fail("expected [low, high]");
      const int lo = ends[0].integer();
      const int hi = ends[1].integer();
      if (lo < 1 || hi < lo) range.fail("expected 1 <= low <= high");
      s.search.period_range[path_key(key, range)] = {lo, hi};
    }
  }
}

void check_positions(const Field& root, const Scenario& s) {
  for (const auto& [id, sites] : s.topology->routes) {
    if (id > static_cast<int>(s.paths.size())) {
      root.at("topology").at("positions").fail("positions for undeclared path " + std::to_string(id));
    }
  }
  try {
    derive_relation(*s.topology, s.paths);
  } catch (const ConfigError& e) {
    root.at("topology").at("positions").fail(e.what());
  }
}

}  // namespace

Scenario parse_scenario(const json& doc) {
  const Field root(doc, "");
  root.only({"paths", "topology", "relation", "routes", "flows", "search"});
  Scenario s;
  if (root.has("topology") == root.has("relation")) {
    root.fail("give exactly one of topology or relation");
  }
  if (root.has("topology")) parse_topology(root.at("topology"), s);

  if (s.uses_network()) {
    if (root.has("paths")) root.at("paths").fail("paths are derived from routes or flows");
    if (root.has("routes")) parse_routes(root.at("routes"), s);
    if (root.has("flows")) parse_flows(root.at("flows"), s);
    std::set<int> ids;
    for (const auto& [id, r] : s.routes) ids.insert(id);
    for (const auto& [id, f] : s.flows) {
      if (!ids.insert(id).second) root.at("flows").fail("path " + std::to_string(id) + " has both routes and a flow");
    }
    if (ids.empty()) root.fail("a node map needs routes or flows");
    if (*ids.begin() != 1 || *ids.rbegin() != static_cast<int>(ids.size())) {
      root.fail("routes and flows must cover paths 1 and optionally 2");
    }
  } else {
    if (root.has("routes")) root.at("routes").fail("routes need a node map topology");
    if (root.has("flows")) root.at("flows").fail("flows need a node map topology");
    parse_paths(root.at("paths"), s);
    if (root.has("relation")) parse_relation(root.at("relation"), s);
    if (s.topology) check_positions(root, s);
  }
  if (root.has("search")) parse_search(root.at("search"), s);
  return s;
}

Scenario load_scenario(const std::string& file) {
  std::ifstream in(file);
  if (!in || !std::filesystem::is_regular_file(file)) throw ConfigError("cannot open scenario " + file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(file + ": " + e.what());
  }
  return parse_scenario(doc);
}

json scenario_to_json(const Scenario& s) {
  json doc = json::object();
  if (!s.paths.empty() && !s.uses_network()) {
    doc["paths"] = json::array();
    for (const auto& p : s.paths) doc["paths"].push_back({{"id", p.id}, {"n_senders", p.n_senders}});
  }
  if (s.topology) {
    json t = {{"interference_radius", s.topology->interference_radius},
              {"half_duplex", s.topology->half_duplex}};
    if (s.uses_network()) {
      for (const auto& [name, at] : s.nodes) t["nodes"][name] = point_json(at);
      t["links"] = json::array();
      for (const auto& l : s.links) t["links"].push_back({l[0], l[1]});
    } else {
      for (const auto& [id, sites] : s.topology->routes) {
        json& list = t["positions"][std::to_string(id)] = json::array();
        for (const auto& site : sites) {
          if (site.name.empty()) {
            list.push_back(point_json(site.position));
          } else {
            list.push_back({{"name", site.name}, {"at", point_json(site.position)}});
          }
        }
      }
    }
    doc["topology"] = t;
  }
  if (s.relation) {
    json pairs = json::array();
    const auto& rel = *s.relation;
    for (int a = 0; a < rel.total(); ++a) {
      for (int b = a + 1; b < rel.total(); ++b) {
        if ((rel.conflicts(a) >> b) & 1) {
          const NodeRef x = rel.node_at(a);
          const NodeRef y = rel.node_at(b);
          pairs.push_back({{x.path_id, x.seq}, {y.path_id, y.seq}});
        }
      }
    }
    doc["relation"] = {{"interfering", pairs}};
  }
  for (const auto& [id, list] : s.routes) doc["routes"][std::to_string(id)] = list;
  for (const auto& [id, f] : s.flows) {
    doc["flows"][std::to_string(id)] = {{"source", f.source}, {"destination", f.destination}};
  }
  json search = {{"max_activations", s.search.max_activations}};
  if (s.search.max_hops) search["max_hops"] = *s.search.max_hops;
  for (const auto& [id, r] : s.search.period_range) {
    search["period_range"][std::to_string(id)] = {r[0], r[1]};
  }
  doc["search"] = search;
  return doc;
}

GeometricTopology route_topology(const Scenario& s, const std::vector<Route>& chosen) {
  if (!s.topology || !s.uses_network()) throw DomainError("scenario has no node map");
  GeometricTopology topo;
  topo.interference_radius = s.topology->interference_radius;
  topo.half_duplex = s.topology->half_duplex;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    auto& sites = topo.routes[static_cast<int>(i) + 1];
    for (const auto& name : chosen[i]) {
      auto it = s.nodes.find(name);
      if (it == s.nodes.end()) throw ConfigError("unknown node \"" + name + "\"");
      sites.push_back({name, it->second});
    }
  }
  return topo;
}

std::map<int, std::vector<Route>> route_candidates(const Scenario& s) {
  if (!s.uses_network()) throw DomainError("scenario has no node map");
  std::map<int, std::vector<Route>> out = s.routes;
  std::map<std::string, std::vector<std::string>> adjacent;
  for (const auto& l : s.links) {
    adjacent[l[0]].push_back(l[1]);
    adjacent[l[1]].push_back(l[0]);
  }
  for (auto& [name, next] : adjacent) {
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
  }
  const int max_hops = s.search.max_hops.value_or(static_cast<int>(s.nodes.size()) - 1);

  for (const auto& [id, flow] : s.flows) {
    auto& found = out[id];
    Route current{flow.source};
    std::set<std::string> on_route{flow.source};
    auto visit = [&](auto&& self) -> void {
      const std::string& at = current.back();
      if (at == flow.destination) {
        found.push_back(current);
        return;
      }
      if (static_cast<int>(current.size()) - 1 == max_hops) return;
      for (const auto& next : adjacent[at]) {
        if (on_route.contains(next)) continue;
        current.push_back(next);
        on_route.insert(next);
        self(self);
        on_route.erase(next);
        current.pop_back();
      }
    };
    visit(visit);
    if (found.empty()) {
      throw ConfigError("no route from " + flow.source + " to " + flow.destination + " within " +
                        std::to_string(max_hops) + " hops");
    }
  }
  return out;
}

PathPair scenario_pair(const Scenario& s) {
  if (s.relation) return PathPair(s.paths, *s.relation);
  if (!s.uses_network()) return PathPair(s.paths, derive_relation(*s.topology, s.paths));
  const auto candidates = route_candidates(s);
  std::vector<Route> chosen;
  std::vector<PrimaryPath> paths;
  for (const auto& [id, list] : candidates) {
    chosen.push_back(list.front());
    paths.push_back({id, static_cast<int>(list.front().size()) - 1});
  }
  return PathPair(paths, derive_relation(route_topology(s, chosen), paths));
}

}  // namespace netwave
