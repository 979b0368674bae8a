#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uavplace {

// A ground terminal: planar position in meters plus a positive traffic
// demand, expressed as a multiple of the minimum traffic unit.
struct User {
    std::string id;
    double x = 0.0;
    double y = 0.0;
    double load = 1.0;
};

struct Rect {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
};

struct Scenario {
    std::vector<User> users;
    Rect area;
    int k = 1;  // number of UAVs
};

// A converged cluster mean. (x, y) is the UAV hover position; load_coord is
// the mean of the scaled load feature and is present only when the placement
// came out of three-feature mode.
struct Centroid {
    double x = 0.0;
    double y = 0.0;
    std::optional<double> load_coord;
};

struct Placement {
    std::vector<Centroid> centroids;       // length k
    std::map<std::string, int> assignment;  // user id -> cluster index in [0, k)
    int iterations = 0;
    bool converged = false;
};

enum class Mode { TwoFeature, ThreeFeature, WeightedReplication };
enum class Init { UniformRandom, PlusPlus };

struct SolveConfig {
    Mode mode = Mode::TwoFeature;
    double load_scale = 1.0;  // alpha on the load coordinate in three-feature mode
    Init init = Init::PlusPlus;
    std::uint64_t seed = 42;
    int max_iters = 300;
    double shift_tol = 1e-9;  // meters; safety net under the assignment-stability criterion
    int restarts = 10;        // run r uses seed + r, best objective wins
};

struct PlacementReport {
    // Load-weighted within-cluster sum of squared positional distances,
    // recomputable from (scenario, placement) alone.
    double objective = 0.0;
    std::vector<double> per_cluster_load;
    double mean_dist_all = 0.0;
    double mean_dist_weighted = 0.0;
    double mean_dist_highload = 0.0;  // mean over users with load > highload_threshold; 0 if none
    double highload_threshold = 0.0;
    // Per-iteration solver objective in the solve mode's own feature space
    // (non-increasing); empty when the report was built by re-evaluation.
    std::vector<double> objective_trace;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Collects every invariant violation: duplicate ids, k out of range, users
// outside the area, non-positive loads, non-finite fields. Violations are
// data, not faults.
ValidationResult validate_scenario(const Scenario& s);

// Median of the user loads (average of the middle two for even counts); the
// default high-load report threshold.
double median_load(const Scenario& s);

// User indices sorted by id. Solvers process users in this canonical order so
// results do not depend on storage order.
std::vector<std::size_t> order_by_id(const Scenario& s);

}  // namespace uavplace
