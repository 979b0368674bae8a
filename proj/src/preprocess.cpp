#include "uavplace/preprocess.hpp"

#include <cmath>
#include <unordered_map>

#include "uavplace/errors.hpp"

namespace uavplace::preprocess {

ReplicaSet split_users(const Scenario& s, double unit) {
    if (!(unit > 0.0) || !std::isfinite(unit))
        throw InvalidParams("unit must be a positive finite real");

    ReplicaSet out;
    std::size_t next_id = 0;
    for (const User& u : s.users) {
        double w = u.load / unit;
        double rounded = std::round(w);
        if (std::abs(w - rounded) > 1e-9 || rounded < 1.0)
            throw NonIntegralLoad(u.id);
        int count = static_cast<int>(rounded);
        for (int i = 0; i < count; ++i)
            out.replicas.push_back({next_id++, u.id, u.x, u.y});
        out.origin_counts[u.id] = count;
    }
    return out;
}

std::map<std::string, int> fold_assignment(const ReplicaSet& r,
                                           std::span<const int> replica_assignment) {
    // per user: cluster -> replica votes
    std::unordered_map<std::string, std::map<int, int>> votes;
    for (const Replica& rep : r.replicas) {
        if (rep.replica_id >= replica_assignment.size() ||
            replica_assignment[rep.replica_id] < 0)
            throw MissingReplica(rep.replica_id);
        votes[rep.origin_id][replica_assignment[rep.replica_id]] += 1;
    }

    std::map<std::string, int> folded;
    for (const auto& [id, per_cluster] : votes) {
        int best_cluster = -1;
        int best_count = 0;
        for (const auto& [cluster, count] : per_cluster) {
            // std::map iterates clusters ascending, so > keeps the lowest index on ties
            if (count > best_count) {
                best_count = count;
                best_cluster = cluster;
            }
        }
        folded[id] = best_cluster;
    }
    return folded;
}

}  // namespace uavplace::preprocess
