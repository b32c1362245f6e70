#pragma once

// JSON and CSV forms of reports and regions. Rationals always travel as
// "p/q" strings; key order is fixed so output is byte-stable.

#include "newton_sobolev/exponents.hpp"
#include "newton_sobolev/regions.hpp"
#include "newton_sobolev/sublevel.hpp"

#include <json.hpp>

#include <string>

namespace newton_sobolev {

using Json = nlohmann::ordered_json;

Json to_json(const AnalysisReport& r);
AnalysisReport analysis_report_from_json(const Json& j);

Json to_json(const RegionPolygon& r);
RegionPolygon region_from_json(const Json& j);
// Header "x,y", decimals to 12 significant digits.
std::string to_csv(const RegionPolygon& r);

Json to_json(const TargetVerification& t);
Json to_json(const VerificationReport& r);

// Human-readable summary; every rational matches the JSON form.
std::string to_text(const AnalysisReport& r);

}  // namespace newton_sobolev
