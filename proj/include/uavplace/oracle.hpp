#pragma once

#include "uavplace/model.hpp"

namespace uavplace::oracle {

struct OracleResult {
    Placement placement;
    double objective = 0.0;  // load-weighted positional WCSS of the optimal partition
};

// Exhaustively enumerates all assignments of users to k labeled clusters
// (label-permutation duplicates skipped via first-occurrence canonical labels),
// scores each part at its load-weighted mean, and returns the global minimum.
// Ties resolve to the lexicographically smallest assignment vector. Bounded to
// n <= 10 users and k <= 3; larger instances throw InstanceTooLarge.
//
// Deliberately self-contained: shares no arithmetic with the kmeans module so
// the two routes stay independent checks of each other.
OracleResult optimal_partition(const Scenario& s);

}  // namespace uavplace::oracle
