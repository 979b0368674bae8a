#include "uavplace/oracle.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "uavplace/errors.hpp"

namespace uavplace::oracle {

namespace {

struct PartStats {
    double wsum = 0.0;
    double wx = 0.0;
    double wy = 0.0;
};

double partition_objective(const Scenario& s, const std::vector<int>& labels, int k,
                           std::vector<std::array<double, 2>>& centroids_out) {
    std::vector<PartStats> parts(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < s.users.size(); ++i) {
        const User& u = s.users[i];
        PartStats& p = parts[static_cast<std::size_t>(labels[i])];
        p.wsum += u.load;
        p.wx += u.load * u.x;
        p.wy += u.load * u.y;
    }

    // empty parts (possible only through exact ties) sit at the global mean
    double gw = 0.0, gx = 0.0, gy = 0.0;
    for (const User& u : s.users) {
        gw += u.load;
        gx += u.load * u.x;
        gy += u.load * u.y;
    }

    centroids_out.assign(static_cast<std::size_t>(k), {gx / gw, gy / gw});
    for (int c = 0; c < k; ++c) {
        const PartStats& p = parts[static_cast<std::size_t>(c)];
        if (p.wsum > 0.0)
            centroids_out[static_cast<std::size_t>(c)] = {p.wx / p.wsum, p.wy / p.wsum};
    }

    double obj = 0.0;
    for (std::size_t i = 0; i < s.users.size(); ++i) {
        const User& u = s.users[i];
        const auto& c = centroids_out[static_cast<std::size_t>(labels[i])];
        double dx = u.x - c[0];
        double dy = u.y - c[1];
        obj += u.load * (dx * dx + dy * dy);
    }
    return obj;
}

}  // namespace

OracleResult optimal_partition(const Scenario& s) {
    const std::size_t n = s.users.size();
    const int k = s.k;
    if (n > 10 || k > 3) throw InstanceTooLarge(n, k);
    if (n == 0 || k < 1) throw InvalidParams("oracle needs at least one user and k >= 1");

    // restricted growth strings: labels[0] = 0, labels[i] <= max(labels[0..i-1]) + 1,
    // all labels < k. Lexicographic order makes the first strict minimum the
    // lexicographically smallest optimal assignment.
    std::vector<int> labels(n, 0);
    std::vector<int> best_labels;
    double best_obj = 0.0;
    bool have_best = false;
    std::vector<std::array<double, 2>> centroids;

    auto recurse = [&](auto&& self, std::size_t i, int max_used) -> void {
        if (i == n) {
            double obj = partition_objective(s, labels, k, centroids);
            if (!have_best || obj < best_obj) {
                best_obj = obj;
                best_labels = labels;
                have_best = true;
            }
            return;
        }
        int limit = std::min(max_used + 1, k - 1);
        for (int c = 0; c <= limit; ++c) {
            labels[i] = c;
            self(self, i + 1, std::max(max_used, c));
        }
    };
    recurse(recurse, 0, -1);

    OracleResult out;
    out.objective = partition_objective(s, best_labels, k, centroids);
    for (int c = 0; c < k; ++c)
        out.placement.centroids.push_back(
            {centroids[static_cast<std::size_t>(c)][0], centroids[static_cast<std::size_t>(c)][1],
             std::nullopt});
    for (std::size_t i = 0; i < n; ++i)
        out.placement.assignment[s.users[i].id] = best_labels[i];
    out.placement.iterations = 0;
    out.placement.converged = true;  // the optimum is Lloyd-stable
    return out;
}

}  // namespace uavplace::oracle
