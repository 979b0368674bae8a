#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "uavplace/model.hpp"

namespace uavplace::preprocess {

struct Replica {
    std::size_t replica_id = 0;  // dense index into the replica set
    std::string origin_id;
    double x = 0.0;
    double y = 0.0;
};

// Result of splitting every user into load/unit co-located unit-traffic
// replicas. Replica order follows scenario order, each user's replicas
// consecutive; coordinates are bit-identical to the origin user's.
struct ReplicaSet {
    std::vector<Replica> replicas;
    std::map<std::string, int> origin_counts;
};

// Splits each user of load w into round(w/unit) replicas at the user's exact
// position. Throws NonIntegralLoad if any w/unit is not an integer within
// 1e-9 absolute (or rounds to zero).
ReplicaSet split_users(const Scenario& s, double unit);

// Maps replica clusters back onto origin users: each user goes to the cluster
// holding the majority of its replicas, ties to the lowest cluster index.
// replica_assignment is indexed by replica_id; a negative or missing entry
// throws MissingReplica.
std::map<std::string, int> fold_assignment(const ReplicaSet& r,
                                           std::span<const int> replica_assignment);

}  // namespace uavplace::preprocess
