#pragma once

// JSON/CSV serialization for grid runs, bound reports, and ratio series.
// Grid reports are byte-stable: object keys are emitted in sorted order,
// result rows are sorted by (suite, key), and nothing timing- or
// thread-dependent is serialized, so re-running with a different worker
// count reproduces the file exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "lcmlab/bounds.hpp"
#include "lcmlab/grid.hpp"

namespace lcmlab {

nlohmann::json grid_config_json(const GridSpec& spec);  // excludes the worker count
nlohmann::json suite_results_json(const std::vector<SuiteResult>& suites, const GridSpec& spec);

nlohmann::json certificate_json(const DivisorCertificate& cert);
nlohmann::json identity_report_json(const IdentityReport& rep);
nlohmann::json bound_report_json(const BoundReport& rep, int digits = 17);
nlohmann::json ratio_point_json(const RatioPoint& point, int digits = 17);

// "n,ratio_lo,ratio_hi" header plus one outward-rounded row per point.
std::string ratio_series_csv(const std::vector<RatioPoint>& points, int digits = 17);

}  // namespace lcmlab
