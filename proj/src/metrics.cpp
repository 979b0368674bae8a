#include "uavplace/metrics.hpp"

#include <cmath>
#include <span>

#include "uavplace/errors.hpp"
#include "uavplace/numeric.hpp"

namespace uavplace::metrics {

const MetricDelta& ComparisonRecord::at(const std::string& name) const {
    for (const auto& [n, d] : metrics)
        if (n == name) return d;
    throw InvalidParams("no metric named '" + name + "' in comparison");
}

PlacementReport evaluate(const Scenario& s, const Placement& p, double highload_threshold) {
    const int k = static_cast<int>(p.centroids.size());

    std::vector<double> sq_terms, dist_all, dist_weighted, dist_high, loads;
    sq_terms.reserve(s.users.size());
    dist_all.reserve(s.users.size());

    PlacementReport r;
    r.highload_threshold = highload_threshold;
    r.per_cluster_load.assign(static_cast<std::size_t>(k), 0.0);

    std::vector<NeumaierSum<double>> cluster_load(static_cast<std::size_t>(k));
    for (const User& u : s.users) {
        auto it = p.assignment.find(u.id);
        if (it == p.assignment.end()) throw UncoveredUser(u.id);
        int c = it->second;
        if (c < 0 || c >= k)
            throw InvalidParams("assignment of user '" + u.id + "' references cluster " +
                                std::to_string(c) + " of " + std::to_string(k));
        double dx = u.x - p.centroids[static_cast<std::size_t>(c)].x;
        double dy = u.y - p.centroids[static_cast<std::size_t>(c)].y;
        double d2 = dx * dx + dy * dy;
        double d = std::sqrt(d2);
        sq_terms.push_back(u.load * d2);
        dist_all.push_back(d);
        dist_weighted.push_back(u.load * d);
        loads.push_back(u.load);
        if (u.load > highload_threshold) dist_high.push_back(d);
        cluster_load[static_cast<std::size_t>(c)].add(u.load);
    }

    for (int c = 0; c < k; ++c)
        r.per_cluster_load[static_cast<std::size_t>(c)] =
            cluster_load[static_cast<std::size_t>(c)].value();

    r.objective = pairwise_sum(std::span<const double>(sq_terms));
    double n = static_cast<double>(s.users.size());
    r.mean_dist_all = n > 0 ? pairwise_sum(std::span<const double>(dist_all)) / n : 0.0;
    double load_total = pairwise_sum(std::span<const double>(loads));
    r.mean_dist_weighted =
        load_total > 0 ? pairwise_sum(std::span<const double>(dist_weighted)) / load_total : 0.0;
    r.mean_dist_highload =
        dist_high.empty() ? 0.0
                          : pairwise_sum(std::span<const double>(dist_high)) /
                                static_cast<double>(dist_high.size());
    return r;
}

ComparisonRecord compare(const Scenario& s, const Placement& a, const Placement& b,
                         double highload_threshold) {
    PlacementReport ra = evaluate(s, a, highload_threshold);
    PlacementReport rb = evaluate(s, b, highload_threshold);

    auto entry = [](double va, double vb) {
        MetricDelta d;
        d.a = va;
        d.b = vb;
        d.delta = vb - va;
        d.winner = vb < va ? "b" : (va < vb ? "a" : "tie");
        return d;
    };

    ComparisonRecord rec;
    rec.metrics.emplace_back("objective", entry(ra.objective, rb.objective));
    rec.metrics.emplace_back("mean_dist_all", entry(ra.mean_dist_all, rb.mean_dist_all));
    rec.metrics.emplace_back("mean_dist_weighted",
                             entry(ra.mean_dist_weighted, rb.mean_dist_weighted));
    rec.metrics.emplace_back("mean_dist_highload",
                             entry(ra.mean_dist_highload, rb.mean_dist_highload));
    return rec;
}

}  // namespace uavplace::metrics
