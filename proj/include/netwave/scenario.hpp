#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "netwave/model.hpp"

namespace netwave {

using Route = std::vector<std::string>;

struct Flow {
  std::string source;
  std::string destination;

  bool operator==(const Flow&) const = default;
};

struct SearchBounds {
  std::map<int, std::array<int, 2>> period_range;  // inclusive; default [I*, N]
  int max_activations = 4;
  std::optional<int> max_hops;  // default: node count - 1

  bool operator==(const SearchBounds&) const = default;
};

/// A scenario file. The interference environment is given either by
/// `topology` or by `relation`. A topology either lists per-path positions
/// (fixed geometry, `paths` required) or a named node map with links, in which
/// case the paths come from `routes` or `flows`.
struct Scenario {
  std::vector<PrimaryPath> paths;
  std::optional<GeometricTopology> topology;
  std::optional<InterferenceRelation> relation;
  std::map<std::string, Point> nodes;
  std::vector<std::array<std::string, 2>> links;
  std::map<int, std::vector<Route>> routes;
  std::map<int, Flow> flows;
  SearchBounds search;

  bool uses_network() const { return !nodes.empty(); }
  bool operator==(const Scenario&) const = default;
};

/// Throws ConfigError naming the offending JSON path.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& file);
nlohmann::json scenario_to_json(const Scenario& scenario);

/// Geometry of one route per path over the node map.
GeometricTopology route_topology(const Scenario& scenario, const std::vector<Route>& chosen);

/// Candidate routes of every path: the fixed list, or all simple paths from
/// source to destination within the hop bound, neighbours tried in name order.
std::map<int, std::vector<Route>> route_candidates(const Scenario& scenario);

/// The pair the scenario describes; with route candidates the first candidate
/// of every path is used.
PathPair scenario_pair(const Scenario& scenario);

}  // namespace netwave
