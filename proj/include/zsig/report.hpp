#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zsig/bounds.hpp"
#include "zsig/heights.hpp"
#include "zsig/orbit.hpp"
#include "zsig/verifiers.hpp"
#include "zsig/zsigmondy.hpp"

// JSON forms of every report type. Big integers and rationals travel as
// decimal strings; reals are cut to 15 significant digits.
namespace zsig {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const OrbitStatus& st);
OrbitStatus orbit_from_json(const Json& j);

Json to_json(const PrimitiveVerdict& v);
PrimitiveVerdict primitive_verdict_from_json(const Json& j);

Json to_json(const ZsigmondyReport& rep);
ZsigmondyReport zsigmondy_report_from_json(const Json& j);

Json to_json(const RigidViolation& v);

Json to_json(const GlobalC& c);
GlobalC global_c_from_json(const Json& j);

Json to_json(const HeightInterval& h);
HeightInterval height_interval_from_json(const Json& j);

Json to_json(const BoundResult& b);
BoundResult bound_result_from_json(const Json& j);

Json to_json(const TheoremVerdict& v);
TheoremVerdict verdict_from_json(const Json& j);

// Sweep spec file:
//   {"family": "trinomial" | "binomial", "d": [3,4] | {"min":3,"max":5},
//    "e": [...], "c": ["5/2", ...], "c_grid": {"num":[lo,hi],"den":[lo,hi]},
//    "horizon": 8, "digit_budget": ..., "workers": ...}
// Throws ParseError on a malformed file.
SweepSpec sweep_spec_from_json(const Json& j, const RunConfig& base);

// One JSONL record: {"v":1,"key":...,<verdict fields>}.
std::string jsonl_line(const SweepPoint& p, const TheoremVerdict& v);
std::string verdict_key(const TheoremVerdict& v);

}  // namespace zsig
