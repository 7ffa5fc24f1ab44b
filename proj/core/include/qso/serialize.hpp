#pragma once

#include <string>

#include "json.hpp"
#include "qso/dynamics.hpp"
#include "qso/periodic.hpp"
#include "qso/regimes.hpp"

// JSON and CSV forms used by the CLI. JSON round-trips through the module
// types; CSV is RFC-4180 (header row, CRLF, quoting only where needed).

namespace qso {

/// Shortest decimal that parses back to the same double.
std::string to_string_roundtrip(double v);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& raw);

nlohmann::json to_json(const Params& p);
Params params_from_json(const nlohmann::json& j);

// [{"point":0},{"lo":...,"closed_lo":false,"hi":1,"closed_hi":true}]
nlohmann::json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Behavior& b);
Behavior behavior_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OrbitRecord& rec);
OrbitRecord orbit_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TwoCycle& c);
TwoCycle two_cycle_from_json(const nlohmann::json& j);

/// "step,x" rows.
std::string orbit_csv(const OrbitRecord& rec);

}  // namespace qso
