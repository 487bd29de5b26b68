#pragma once

#include <string>

#include <json.hpp>

#include "fatlas/height.hpp"
#include "fatlas/trace.hpp"

namespace fatlas {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

struct ReportOptions {
    int order = 0;  // 0: use default_order()
    Tolerances tol;
    int maxk = 3;
    bool run_special_rules = true;
};

/// Machine-readable end-to-end classification outcome. `data` is the full
/// document (schema 1); every classification tag inside carries its numeric
/// witnesses, and per-stage failures are recorded under "error" keys without
/// aborting independent stages.
struct Report {
    nlohmann::ordered_json data;
    bool fatal = false;
};

/// classify -> fundamentals -> invariants -> principal branch -> Gauss map ->
/// contact / rational boundedness -> (second kind) height pipeline.
Report run_report(const SurfaceDef& def, Point2 p, const ReportOptions& opts = {});

std::string polyline_csv(const Polyline& line);

nlohmann::ordered_json tolerances_json(const Tolerances& tol, int order);

} // namespace fatlas
