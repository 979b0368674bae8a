#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>
#include <vector>

#include "uavplace/errors.hpp"
#include "uavplace/model.hpp"
#include "uavplace/numeric.hpp"
#include "uavplace/rng.hpp"

namespace uavplace::kmeans {

// Feature rows for one solve: n x d coordinates (d = 2, or 3 with the scaled
// load coordinate appended) plus per-row weights. Rows follow the scenario's
// users sorted by id; `ids` maps rows back to users.
struct FeatureSet {
    Eigen::MatrixXd coords;
    Eigen::VectorXd weights;
    std::vector<std::string> ids;
};

// TwoFeature: (x, y), unit weights. ThreeFeature: (x, y, alpha*load), unit
// weights. WeightedReplication: (x, y) with weight = load.
FeatureSet build_features(const Scenario& s, Mode mode, double load_scale);

// Nearest centroid per row under squared Euclidean distance, ties broken by
// the lowest centroid index.
template <class DerivedP, class DerivedC>
Eigen::VectorXi assign_step(const Eigen::MatrixBase<DerivedP>& points,
                            const Eigen::MatrixBase<DerivedC>& centroids) {
    if (centroids.rows() < 1)
        throw DimensionMismatch("need at least one centroid");
    if (points.cols() != centroids.cols())
        throw DimensionMismatch("points are " + std::to_string(points.cols()) +
                                "-dimensional, centroids " + std::to_string(centroids.cols()));

    using Scalar = typename DerivedP::Scalar;
    Eigen::VectorXi assignment(points.rows());
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        Scalar best = std::numeric_limits<Scalar>::infinity();
        int arg = 0;
        for (Eigen::Index j = 0; j < centroids.rows(); ++j) {
            Scalar d = (points.row(i) - centroids.row(j)).squaredNorm();
            if (d < best) {
                best = d;
                arg = static_cast<int>(j);
            }
        }
        assignment(i) = arg;
    }
    return assignment;
}

// Weighted per-cluster means, compensated so the result is insensitive to the
// member count. An empty cluster is reseeded onto the point farthest (in x,y)
// from its own fresh centroid; with several empty clusters each takes a
// distinct point, lowest cluster index first.
template <class DerivedP, class DerivedW>
Eigen::Matrix<typename DerivedP::Scalar, Eigen::Dynamic, Eigen::Dynamic>
update_step(const Eigen::MatrixBase<DerivedP>& points,
            const Eigen::MatrixBase<DerivedW>& weights,
            const Eigen::VectorXi& assignment, Eigen::Index k) {
    using Scalar = typename DerivedP::Scalar;
    const Eigen::Index n = points.rows();
    const Eigen::Index d = points.cols();
    if (weights.size() != n)
        throw DimensionMismatch("weights size " + std::to_string(weights.size()) +
                                " does not match " + std::to_string(n) + " points");
    if (assignment.size() != n)
        throw DimensionMismatch("assignment size does not match point count");

    std::vector<NeumaierSum<Scalar>> coord_sum(static_cast<std::size_t>(k * d));
    std::vector<NeumaierSum<Scalar>> weight_sum(static_cast<std::size_t>(k));
    std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);

    for (Eigen::Index i = 0; i < n; ++i) {
        int c = assignment(i);
        if (c < 0 || c >= k)
            throw DimensionMismatch("assignment references cluster " + std::to_string(c));
        for (Eigen::Index j = 0; j < d; ++j)
            coord_sum[static_cast<std::size_t>(c * d + j)].add(weights(i) * points(i, j));
        weight_sum[static_cast<std::size_t>(c)].add(weights(i));
        counts[static_cast<std::size_t>(c)] += 1;
    }

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> centroids(k, d);
    bool any_empty = false;
    for (Eigen::Index c = 0; c < k; ++c) {
        if (counts[static_cast<std::size_t>(c)] == 0) {
            any_empty = true;
            continue;
        }
        Scalar wsum = weight_sum[static_cast<std::size_t>(c)].value();
        for (Eigen::Index j = 0; j < d; ++j)
            centroids(c, j) = coord_sum[static_cast<std::size_t>(c * d + j)].value() / wsum;
    }

    if (any_empty) {
        // positional distance of every point to its own (already fresh) centroid
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1> dist2(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            int c = assignment(i);
            dist2(i) = (points.row(i).template head<2>() -
                        centroids.row(c).template head<2>())
                           .squaredNorm();
        }
        for (Eigen::Index c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] != 0) continue;
            Eigen::Index arg = 0;
            Scalar best = -1;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (dist2(i) > best) {
                    best = dist2(i);
                    arg = i;
                }
            }
            centroids.row(c) = points.row(arg);
            dist2(arg) = -1;  // the next empty cluster takes a different point
        }
    }
    return centroids;
}

// Weighted sum of squared distances to the assigned centroid, accumulated by
// pairwise summation.
template <class DerivedP, class DerivedW, class DerivedC>
typename DerivedP::Scalar objective(const Eigen::MatrixBase<DerivedP>& points,
                                    const Eigen::MatrixBase<DerivedW>& weights,
                                    const Eigen::MatrixBase<DerivedC>& centroids,
                                    const Eigen::VectorXi& assignment) {
    using Scalar = typename DerivedP::Scalar;
    std::vector<Scalar> terms(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        terms[static_cast<std::size_t>(i)] =
            weights(i) * (points.row(i) - centroids.row(assignment(i))).squaredNorm();
    return pairwise_sum(std::span<const Scalar>(terms));
}

// Initial centroids. UniformRandom draws k points uniformly inside the
// feature-space bounding box, filling dimension-major (all first coordinates,
// then all second, ...) so lower-dimensional runs share the same draws.
// PlusPlus picks input points with probability proportional to
// weight * min-squared-distance to the centroids chosen so far (the first
// pick is weight-proportional). Throws TooFewDistinctPoints if the input has
// fewer than k distinct rows.
Eigen::MatrixXd init_centroids(const Eigen::Ref<const Eigen::MatrixXd>& points,
                               const Eigen::Ref<const Eigen::VectorXd>& weights, int k,
                               Init method, SplitMix64& rng);

struct LloydOptions {
    int max_iters = 300;
    double shift_tol = 1e-9;
    bool record_centroids = false;
};

struct LloydResult {
    Eigen::MatrixXd centroids;
    Eigen::VectorXi assignment;  // always the assignment induced by `centroids`
    int iterations = 0;
    bool converged = false;  // assignments reached a fixed point
    std::vector<double> objective_trace;         // one entry per iteration, plus the initial state
    std::vector<Eigen::MatrixXd> centroid_trace;  // when recorded: init, then after each update
};

// Lloyd iteration from explicit initial centroids: alternate assign_step and
// update_step until assignments stop changing, the largest per-coordinate
// centroid shift drops below shift_tol, or max_iters is reached.
LloydResult lloyd_run(const Eigen::Ref<const Eigen::MatrixXd>& points,
                      const Eigen::Ref<const Eigen::VectorXd>& weights,
                      Eigen::MatrixXd initial_centroids, const LloydOptions& opt);

struct SolveResult {
    Placement placement;
    PlacementReport report;
};

// Full pipeline: validate, build features, run `restarts` seeded Lloyd runs
// (seed, seed+1, ...), keep the lowest final objective (ties to the lowest
// restart index), and report canonical positional metrics. In three-feature
// mode the load coordinate steers the clustering but the placement's UAV
// position and all metrics are positional only.
SolveResult solve(const Scenario& s, const SolveConfig& cfg);

}  // namespace uavplace::kmeans
