#pragma once

#include <json.hpp>

#include "netwave/analysis.hpp"
#include "netwave/matching.hpp"
#include "netwave/optimizer.hpp"
#include "netwave/periods.hpp"
#include "netwave/rational.hpp"
#include "netwave/scheduler.hpp"
#include "netwave/simulator.hpp"

// JSON forms of the library types. Rationals are {"num", "den"}; enums are
// lowercase strings. Every to_json has a matching from_json.
namespace netwave {

using nlohmann::json;

void to_json(json& j, const NodeRef& v);
void from_json(const json& j, NodeRef& v);
void to_json(json& j, const PrimaryPath& v);
void from_json(const json& j, PrimaryPath& v);
void to_json(json& j, const InterferenceRelation& v);
void to_json(json& j, const RuleReport& v);
void from_json(const json& j, RuleReport& v);

void to_json(json& j, const NodeDegree& v);
void from_json(const json& j, NodeDegree& v);
void to_json(json& j, const IntensityReport& v);
void from_json(const json& j, IntensityReport& v);

void to_json(json& j, const BinaryMatrix& v);
void from_json(const json& j, BinaryMatrix& v);
void to_json(json& j, const ConcurrencyMatrix& v);
void from_json(const json& j, ConcurrencyMatrix& v);
void to_json(json& j, const EquallySpacedSubset& v);
void from_json(const json& j, EquallySpacedSubset& v);

void to_json(json& j, const Cell& v);
void from_json(const json& j, Cell& v);
void to_json(json& j, const SupportSet& v);
void from_json(const json& j, SupportSet& v);

void to_json(json& j, const Beat& v);
void from_json(const json& j, Beat& v);
void to_json(json& j, const PathPlan& v);
void from_json(const json& j, PathPlan& v);
void to_json(json& j, const Schedule& v);
void from_json(const json& j, Schedule& v);

void to_json(json& j, const BlockDelay& v);
void from_json(const json& j, BlockDelay& v);
void to_json(json& j, const PathMeasurement& v);
void from_json(const json& j, PathMeasurement& v);
void to_json(json& j, const Violation& v);
void from_json(const json& j, Violation& v);
void to_json(json& j, const BlockMove& v);
void from_json(const json& j, BlockMove& v);
void to_json(json& j, const BeatTrace& v);
void from_json(const json& j, BeatTrace& v);
void to_json(json& j, const SimReport& v);
void from_json(const json& j, SimReport& v);

void to_json(json& j, const Candidate& v);
void from_json(const json& j, Candidate& v);

json relation_json(const InterferenceRelation& relation);
InterferenceRelation relation_from_json(const json& j, std::vector<int> sizes);
json pair_json(const PathPair& pair);
PathPair pair_from_json(const json& j);
json result_json(const OptimizationResult& result);
OptimizationResult result_from_json(const json& j);

}  // namespace netwave

namespace nlohmann {

template <>
struct adl_serializer<netwave::Rational> {
  static void to_json(json& j, const netwave::Rational& r) {
    j = {{"num", r.numerator()}, {"den", r.denominator()}};
  }
  static void from_json(const json& j, netwave::Rational& r) {
    r.assign(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
  }
};

}  // namespace nlohmann
