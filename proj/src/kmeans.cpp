#include "uavplace/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "uavplace/metrics.hpp"

namespace uavplace::kmeans {

FeatureSet build_features(const Scenario& s, Mode mode, double load_scale) {
    const std::vector<std::size_t> order = order_by_id(s);
    const Eigen::Index n = static_cast<Eigen::Index>(order.size());
    const Eigen::Index d = mode == Mode::ThreeFeature ? 3 : 2;

    FeatureSet f;
    f.coords.resize(n, d);
    f.weights.resize(n);
    f.ids.reserve(order.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        const User& u = s.users[order[static_cast<std::size_t>(i)]];
        f.coords(i, 0) = u.x;
        f.coords(i, 1) = u.y;
        if (mode == Mode::ThreeFeature) f.coords(i, 2) = load_scale * u.load;
        f.weights(i) = mode == Mode::WeightedReplication ? u.load : 1.0;
        f.ids.push_back(u.id);
    }
    return f;
}

namespace {

Eigen::Index distinct_row_count(const Eigen::Ref<const Eigen::MatrixXd>& m) {
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(m.rows()));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    auto row_less = [&](Eigen::Index a, Eigen::Index b) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(a, j) < m(b, j)) return true;
            if (m(a, j) > m(b, j)) return false;
        }
        return false;
    };
    std::sort(idx.begin(), idx.end(), row_less);
    Eigen::Index distinct = m.rows() > 0 ? 1 : 0;
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (row_less(idx[i - 1], idx[i])) ++distinct;
    return distinct;
}

// First row whose prefix mass exceeds target; falls back to the last row with
// positive mass when rounding pushes target to the total.
Eigen::Index pick_by_mass(const Eigen::VectorXd& mass, double target) {
    double prefix = 0.0;
    Eigen::Index last_positive = -1;
    for (Eigen::Index i = 0; i < mass.size(); ++i) {
        if (mass(i) > 0.0) last_positive = i;
        prefix += mass(i);
        if (prefix > target) return i;
    }
    return last_positive;
}

}  // namespace

Eigen::MatrixXd init_centroids(const Eigen::Ref<const Eigen::MatrixXd>& points,
                               const Eigen::Ref<const Eigen::VectorXd>& weights, int k,
                               Init method, SplitMix64& rng) {
    const Eigen::Index n = points.rows();
    const Eigen::Index d = points.cols();
    if (k < 1) throw InvalidParams("k must be at least 1");
    Eigen::Index distinct = distinct_row_count(points);
    if (distinct < k) throw TooFewDistinctPoints(distinct, k);

    Eigen::MatrixXd centroids(k, d);

    if (method == Init::UniformRandom) {
        for (Eigen::Index j = 0; j < d; ++j) {
            double lo = points.col(j).minCoeff();
            double hi = points.col(j).maxCoeff();
            for (int i = 0; i < k; ++i) centroids(i, j) = rng.next_in(lo, hi);
        }
        return centroids;
    }

    // k-means++ with weight-proportional selection
    Eigen::VectorXd mass = weights;
    Eigen::VectorXd min_d2(n);
    for (int c = 0; c < k; ++c) {
        double total = mass.sum();
        if (!(total > 0.0)) throw TooFewDistinctPoints(c, k);
        Eigen::Index pick = pick_by_mass(mass, rng.next_unit() * total);
        centroids.row(c) = points.row(pick);
        for (Eigen::Index i = 0; i < n; ++i) {
            double d2 = (points.row(i) - centroids.row(c)).squaredNorm();
            min_d2(i) = c == 0 ? d2 : std::min(min_d2(i), d2);
        }
        mass = weights.cwiseProduct(min_d2);
    }
    return centroids;
}

LloydResult lloyd_run(const Eigen::Ref<const Eigen::MatrixXd>& points,
                      const Eigen::Ref<const Eigen::VectorXd>& weights,
                      Eigen::MatrixXd initial_centroids, const LloydOptions& opt) {
    if (opt.max_iters < 1) throw InvalidParams("max_iters must be at least 1");
    const Eigen::Index k = initial_centroids.rows();

    LloydResult res;
    res.centroids = std::move(initial_centroids);
    res.assignment = assign_step(points, res.centroids);
    res.objective_trace.push_back(objective(points, weights, res.centroids, res.assignment));
    if (opt.record_centroids) res.centroid_trace.push_back(res.centroids);

    for (int t = 1; t <= opt.max_iters; ++t) {
        Eigen::MatrixXd next = update_step(points, weights, res.assignment, k);
        Eigen::VectorXi next_assignment = assign_step(points, next);
        double shift = (next - res.centroids).cwiseAbs().maxCoeff();

        res.iterations = t;
        res.objective_trace.push_back(objective(points, weights, next, next_assignment));
        if (opt.record_centroids) res.centroid_trace.push_back(next);

        bool stable = (next_assignment == res.assignment);
        res.centroids = std::move(next);
        res.assignment = std::move(next_assignment);
        if (stable) {
            res.converged = true;
            break;
        }
        if (shift < opt.shift_tol) break;
    }
    return res;
}

SolveResult solve(const Scenario& s, const SolveConfig& cfg) {
    ValidationResult v = validate_scenario(s);
    if (!v.ok()) {
        std::string msg;
        for (const std::string& viol : v.violations) {
            if (!msg.empty()) msg += "; ";
            msg += viol;
        }
        throw InvalidScenario(msg);
    }
    if (!std::isfinite(cfg.load_scale) || cfg.load_scale < 0.0)
        throw InvalidParams("load_scale must be non-negative and finite");
    if (!std::isfinite(cfg.shift_tol) || cfg.shift_tol < 0.0)
        throw InvalidParams("shift_tol must be non-negative and finite");
    if (cfg.max_iters < 1) throw InvalidParams("max_iters must be at least 1");
    if (cfg.restarts < 1) throw InvalidParams("restarts must be at least 1");

    FeatureSet f = build_features(s, cfg.mode, cfg.load_scale);

    LloydOptions opt;
    opt.max_iters = cfg.max_iters;
    opt.shift_tol = cfg.shift_tol;

    LloydResult best;
    bool have_best = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        SplitMix64 rng(cfg.seed + static_cast<std::uint64_t>(r));
        Eigen::MatrixXd init = init_centroids(f.coords, f.weights, s.k, cfg.init, rng);
        LloydResult run = lloyd_run(f.coords, f.weights, std::move(init), opt);
        if (!have_best || run.objective_trace.back() < best.objective_trace.back()) {
            best = std::move(run);
            have_best = true;
        }
    }

    SolveResult out;
    out.placement.centroids.reserve(static_cast<std::size_t>(s.k));
    for (int c = 0; c < s.k; ++c) {
        Centroid ctr;
        ctr.x = best.centroids(c, 0);
        ctr.y = best.centroids(c, 1);
        if (cfg.mode == Mode::ThreeFeature) ctr.load_coord = best.centroids(c, 2);
        out.placement.centroids.push_back(ctr);
    }
    for (std::size_t i = 0; i < f.ids.size(); ++i)
        out.placement.assignment[f.ids[i]] = best.assignment(static_cast<Eigen::Index>(i));
    out.placement.iterations = best.iterations;
    out.placement.converged = best.converged;

    out.report = metrics::evaluate(s, out.placement, median_load(s));
    out.report.objective_trace = std::move(best.objective_trace);
    return out;
}

}  // namespace uavplace::kmeans
