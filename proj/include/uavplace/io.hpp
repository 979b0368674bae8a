#pragma once

#include <optional>
#include <string>

#include "uavplace/metrics.hpp"
#include "uavplace/model.hpp"

namespace uavplace::io {

// Scenario and placement files are JSON documents carrying an explicit
// schema_version (currently 1). Doubles are written in shortest round-trip
// form, so write-then-read is an identity and identical inputs produce
// byte-identical files.

void write_scenario(const std::string& path, const Scenario& s);
Scenario read_scenario(const std::string& path);

void write_placement(const std::string& path, const Placement& p);
Placement read_placement(const std::string& path);

struct ReportDocument {
    PlacementReport report;
    std::optional<metrics::ComparisonRecord> comparison;
};

// Writes the flat metric table (name,value rows) to table_path and the full
// structured document to doc_path. Table numbers carry 12 significant digits.
void write_report(const std::string& table_path, const std::string& doc_path,
                  const PlacementReport& report,
                  const metrics::ComparisonRecord* comparison = nullptr);
ReportDocument read_report(const std::string& doc_path);

// Scatter plot of the scenario colored by assigned cluster: one dot per user
// with radius growing in load (r = 2 + 4 * (load - min) / (max - min + 1e-12)),
// one cross marker per centroid. Same inputs yield byte-identical SVG.
std::string render_svg_string(const Scenario& s, const Placement& p);
void render_svg(const Scenario& s, const Placement& p, const std::string& path);

// 12-significant-digit rendering used by the report table, e.g. 50 ->
// "50.0000000000".
std::string format_number(double v);

}  // namespace uavplace::io
