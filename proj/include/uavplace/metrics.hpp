#pragma once

#include <string>
#include <vector>

#include "uavplace/model.hpp"

namespace uavplace::metrics {

struct MetricDelta {
    double a = 0.0;
    double b = 0.0;
    double delta = 0.0;      // b - a
    std::string winner;      // "a", "b", or "tie"; lower is better on every metric
};

// Per-metric deltas between two placements of the same scenario. No aggregate
// verdict; callers decide what matters.
struct ComparisonRecord {
    std::vector<std::pair<std::string, MetricDelta>> metrics;

    const MetricDelta& at(const std::string& name) const;
};

// Recomputes placement quality from scratch: load-weighted positional WCSS,
// per-cluster load sums, and the unweighted / load-weighted / high-load mean
// user-to-UAV distances. All distances are positional (x, y); the load
// coordinate never enters. The returned objective_trace is empty.
PlacementReport evaluate(const Scenario& s, const Placement& p, double highload_threshold);

ComparisonRecord compare(const Scenario& s, const Placement& a, const Placement& b,
                         double highload_threshold);

}  // namespace uavplace::metrics
