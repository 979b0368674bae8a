#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "uavplace/errors.hpp"
#include "uavplace/kmeans.hpp"
#include "uavplace/oracle.hpp"
#include "uavplace/preprocess.hpp"
#include "uavplace/rng.hpp"
#include "uavplace/scenario.hpp"

using namespace uavplace;

namespace {

Eigen::MatrixXd rows(std::initializer_list<std::initializer_list<double>> values) {
    const auto r = static_cast<Eigen::Index>(values.size());
    const auto c = static_cast<Eigen::Index>(values.begin()->size());
    Eigen::MatrixXd m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : values) {
        Eigen::Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Scenario random_scenario(std::uint64_t seed, int n, int k) {
    return scenario::generate(seed, n, Rect{0.0, 100.0, 0.0, 100.0}, 1.0, 8.0, 0.25, k);
}

}  // namespace

TEST_CASE("assignment picks the nearest centroid, ties to the lowest index") {
    Eigen::MatrixXd pts = rows({{0.0, 0.0}, {9.0, 0.0}, {5.0, 0.0}});
    Eigen::MatrixXd cents = rows({{0.0, 0.0}, {10.0, 0.0}});
    Eigen::VectorXi a = kmeans::assign_step(pts, cents);
    CHECK(a(0) == 0);
    CHECK(a(1) == 1);
    CHECK(a(2) == 0);  // exactly equidistant
}

TEST_CASE("the appended load coordinate changes which centroid is nearest") {
    // positions coincide; only the third feature separates them
    Eigen::MatrixXd pts = rows({{0.0, 0.0, 4.0}});
    Eigen::MatrixXd cents = rows({{0.0, 0.0, 1.0}, {0.0, 0.0, 5.0}});
    Eigen::VectorXi a = kmeans::assign_step(pts, cents);
    CHECK(a(0) == 1);  // |4-5| < |4-1|
}

TEST_CASE("mismatched feature dimensions are rejected") {
    Eigen::MatrixXd pts = rows({{0.0, 0.0, 1.0}});
    Eigen::MatrixXd cents = rows({{0.0, 0.0}});
    CHECK_THROWS_AS(kmeans::assign_step(pts, cents), DimensionMismatch);
}

TEST_CASE("the update step takes weighted means") {
    Eigen::MatrixXd pts = rows({{0.0, 0.0}, {10.0, 0.0}});
    Eigen::VectorXd w(2);
    w << 1.0, 3.0;
    Eigen::VectorXi a(2);
    a << 0, 0;
    Eigen::MatrixXd c = kmeans::update_step(pts, w, a, 1);
    CHECK(c(0, 0) == doctest::Approx(7.5).epsilon(1e-15));
    CHECK(c(0, 1) == 0.0);
}

TEST_CASE("an empty cluster is reseeded on the most isolated point") {
    // three points near the origin, one far away; cluster 1 gets no members
    Eigen::MatrixXd pts = rows({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {50.0, 50.0}});
    Eigen::VectorXd w = Eigen::VectorXd::Ones(4);
    Eigen::VectorXi a(4);
    a << 0, 0, 0, 0;
    Eigen::MatrixXd c = kmeans::update_step(pts, w, a, 2);
    CHECK(c(1, 0) == 50.0);  // stolen point becomes the empty cluster's centroid
    CHECK(c(1, 1) == 50.0);
    // cluster 0 still averages everything it was given
    CHECK(c(0, 0) == doctest::Approx(12.75));
}

TEST_CASE("several empty clusters take distinct points") {
    Eigen::MatrixXd pts = rows({{0.0, 0.0}, {10.0, 0.0}, {20.0, 0.0}});
    Eigen::VectorXd w = Eigen::VectorXd::Ones(3);
    Eigen::VectorXi a(3);
    a << 0, 0, 0;
    Eigen::MatrixXd c = kmeans::update_step(pts, w, a, 3);
    // centroid 0 = mean (10, 0); farthest are x=0 and x=20, both d2=100, the
    // lower point index wins the first empty cluster
    CHECK(c(1, 0) == 0.0);
    CHECK(c(2, 0) == 20.0);
}

TEST_CASE("the objective is the weighted sum of squared distances") {
    Eigen::MatrixXd pts = rows({{0.0, 0.0}, {3.0, 4.0}});
    Eigen::VectorXd w(2);
    w << 2.0, 1.0;
    Eigen::MatrixXd cents = rows({{3.0, 4.0}});
    Eigen::VectorXi a(2);
    a << 0, 0;
    CHECK(kmeans::objective(pts, w, cents, a) == doctest::Approx(50.0).epsilon(1e-15));
}

TEST_CASE("uniform init is deterministic and stays inside the bounding box") {
    Scenario s = random_scenario(3, 30, 3);
    kmeans::FeatureSet f = kmeans::build_features(s, Mode::TwoFeature, 1.0);
    SplitMix64 r1(99), r2(99);
    Eigen::MatrixXd c1 = kmeans::init_centroids(f.coords, f.weights, 4, Init::UniformRandom, r1);
    Eigen::MatrixXd c2 = kmeans::init_centroids(f.coords, f.weights, 4, Init::UniformRandom, r2);
    CHECK(c1 == c2);
    for (Eigen::Index i = 0; i < c1.rows(); ++i)
        for (Eigen::Index j = 0; j < c1.cols(); ++j) {
            CHECK(c1(i, j) >= f.coords.col(j).minCoeff());
            CHECK(c1(i, j) <= f.coords.col(j).maxCoeff());
        }
}

TEST_CASE("plusplus init picks distinct input points") {
    Scenario s = random_scenario(4, 12, 3);
    kmeans::FeatureSet f = kmeans::build_features(s, Mode::WeightedReplication, 1.0);
    SplitMix64 rng(7);
    Eigen::MatrixXd c = kmeans::init_centroids(f.coords, f.weights, 3, Init::PlusPlus, rng);
    int matched = 0;
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        bool found = false;
        for (Eigen::Index p = 0; p < f.coords.rows(); ++p)
            if (c.row(i) == f.coords.row(p)) found = true;
        matched += found ? 1 : 0;
        for (Eigen::Index j = i + 1; j < c.rows(); ++j) CHECK(c.row(i) != c.row(j));
    }
    CHECK(matched == 3);
}

TEST_CASE("plusplus with k equal to the distinct point count exhausts the input") {
    Eigen::MatrixXd pts = rows({{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {2.0, 2.0}});
    Eigen::VectorXd w = Eigen::VectorXd::Ones(5);
    SplitMix64 rng(5);
    Eigen::MatrixXd c = kmeans::init_centroids(pts, w, 4, Init::PlusPlus, rng);
    // all four distinct positions must be chosen, in some order
    std::vector<bool> used(4, false);
    Eigen::MatrixXd distinct = rows({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {2.0, 2.0}});
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j)
            if (c.row(i) == distinct.row(j)) used[static_cast<std::size_t>(j)] = true;
    for (bool u : used) CHECK(u);
}

TEST_CASE("asking for more centroids than distinct points fails upfront") {
    Eigen::MatrixXd pts = rows({{1.0, 1.0}, {1.0, 1.0}, {2.0, 2.0}});
    Eigen::VectorXd w = Eigen::VectorXd::Ones(3);
    SplitMix64 rng(1);
    CHECK_THROWS_AS(kmeans::init_centroids(pts, w, 3, Init::PlusPlus, rng),
                    TooFewDistinctPoints);
    SplitMix64 rng2(1);
    CHECK_THROWS_AS(kmeans::init_centroids(pts, w, 3, Init::UniformRandom, rng2),
                    TooFewDistinctPoints);
}

TEST_CASE("lloyd converges on a scenario and reports a non-increasing trace") {
    Scenario s = random_scenario(8, 50, 3);
    kmeans::FeatureSet f = kmeans::build_features(s, Mode::WeightedReplication, 1.0);
    SplitMix64 rng(11);
    Eigen::MatrixXd init = kmeans::init_centroids(f.coords, f.weights, 3, Init::PlusPlus, rng);
    kmeans::LloydResult res = kmeans::lloyd_run(f.coords, f.weights, init, {});
    CHECK(res.converged);
    CHECK(res.iterations >= 1);
    REQUIRE(res.objective_trace.size() == static_cast<std::size_t>(res.iterations) + 1);
    for (std::size_t t = 1; t < res.objective_trace.size(); ++t)
        CHECK(res.objective_trace[t] <= res.objective_trace[t - 1] + 1e-9);
    // the reported assignment is the one induced by the reported centroids
    Eigen::VectorXi induced = kmeans::assign_step(f.coords, res.centroids);
    CHECK(induced == res.assignment);
}

TEST_CASE("a k=1 solve lands on the closed-form mean in every mode") {
    Scenario s = random_scenario(15, 20, 1);
    long double sx = 0, sy = 0, swx = 0, swy = 0, sw = 0;
    for (const User& u : s.users) {
        sx += u.x;
        sy += u.y;
        swx += static_cast<long double>(u.load) * u.x;
        swy += static_cast<long double>(u.load) * u.y;
        sw += u.load;
    }
    const double mx = static_cast<double>(sx / s.users.size());
    const double my = static_cast<double>(sy / s.users.size());
    const double wx = static_cast<double>(swx / sw);
    const double wy = static_cast<double>(swy / sw);

    for (Mode m : {Mode::TwoFeature, Mode::ThreeFeature, Mode::WeightedReplication}) {
        SolveConfig cfg;
        cfg.mode = m;
        cfg.seed = 2;
        auto res = kmeans::solve(s, cfg);
        const double ex = m == Mode::WeightedReplication ? wx : mx;
        const double ey = m == Mode::WeightedReplication ? wy : my;
        CHECK(std::fabs(res.placement.centroids[0].x - ex) < 1e-12);
        CHECK(std::fabs(res.placement.centroids[0].y - ey) < 1e-12);
        CHECK(res.placement.converged);
    }
}

TEST_CASE("k equal to n drives the objective to zero") {
    Scenario s = random_scenario(16, 6, 6);
    SolveConfig cfg;
    cfg.mode = Mode::TwoFeature;
    cfg.restarts = 20;
    auto res = kmeans::solve(s, cfg);
    CHECK(res.report.objective <= 1e-18);
}

TEST_CASE("translating every input translates the solution") {
    Scenario s = random_scenario(17, 30, 3);
    SolveConfig cfg;
    cfg.mode = Mode::WeightedReplication;
    cfg.seed = 4;
    auto base = kmeans::solve(s, cfg);

    const double shift_x = 1000.0, shift_y = -250.0;
    Scenario moved = s;
    moved.area = {s.area.xmin + shift_x, s.area.xmax + shift_x, s.area.ymin + shift_y,
                  s.area.ymax + shift_y};
    for (User& u : moved.users) {
        u.x += shift_x;
        u.y += shift_y;
    }
    auto shifted = kmeans::solve(moved, cfg);

    CHECK(shifted.placement.assignment == base.placement.assignment);
    for (std::size_t c = 0; c < base.placement.centroids.size(); ++c) {
        CHECK(shifted.placement.centroids[c].x ==
              doctest::Approx(base.placement.centroids[c].x + shift_x).epsilon(1e-9));
        CHECK(shifted.placement.centroids[c].y ==
              doctest::Approx(base.placement.centroids[c].y + shift_y).epsilon(1e-9));
    }
}

TEST_CASE("storage order of users does not change the solution") {
    Scenario s = random_scenario(18, 25, 3);
    Scenario shuffled = s;
    // deterministic scramble
    SplitMix64 rng(31);
    for (std::size_t i = shuffled.users.size(); i > 1; --i)
        std::swap(shuffled.users[i - 1],
                  shuffled.users[static_cast<std::size_t>(rng.next_u64() % i)]);

    SolveConfig cfg;
    cfg.mode = Mode::ThreeFeature;
    cfg.seed = 12;
    auto a = kmeans::solve(s, cfg);
    auto b = kmeans::solve(shuffled, cfg);
    CHECK(a.placement.assignment == b.placement.assignment);
    // the placement is bit-identical; the report resums in storage order, so
    // only its last ulp may move
    CHECK(a.report.objective == doctest::Approx(b.report.objective).epsilon(1e-12));
    for (std::size_t c = 0; c < a.placement.centroids.size(); ++c) {
        CHECK(a.placement.centroids[c].x == b.placement.centroids[c].x);
        CHECK(a.placement.centroids[c].y == b.placement.centroids[c].y);
    }
}

TEST_CASE("three-feature mode with alpha 0 reproduces two-feature assignments") {
    Scenario s = random_scenario(19, 40, 3);
    for (Init init : {Init::UniformRandom, Init::PlusPlus}) {
        SolveConfig two;
        two.mode = Mode::TwoFeature;
        two.init = init;
        two.seed = 21;
        SolveConfig three = two;
        three.mode = Mode::ThreeFeature;
        three.load_scale = 0.0;
        auto a = kmeans::solve(s, two);
        auto b = kmeans::solve(s, three);
        CHECK(a.placement.assignment == b.placement.assignment);
    }
}

TEST_CASE("same seed, same solution; different seeds may differ") {
    Scenario s = random_scenario(20, 35, 3);
    SolveConfig cfg;
    cfg.mode = Mode::WeightedReplication;
    cfg.seed = 40;
    auto a = kmeans::solve(s, cfg);
    auto b = kmeans::solve(s, cfg);
    CHECK(a.placement.assignment == b.placement.assignment);
    CHECK(a.report.objective == b.report.objective);
    CHECK(a.report.objective_trace == b.report.objective_trace);
}

TEST_CASE("weighted lloyd and unweighted lloyd on the replica expansion move in lockstep") {
    Scenario s;
    s.area = {0.0, 100.0, 0.0, 100.0};
    s.k = 2;
    SplitMix64 gen(77);
    for (int i = 0; i < 12; ++i) {
        User u;
        u.id = "u" + std::to_string(100 + i);
        u.x = gen.next_in(0.0, 100.0);
        u.y = gen.next_in(0.0, 100.0);
        u.load = 1.0 + std::floor(gen.next_unit() * 5.0);
        s.users.push_back(u);
    }

    Eigen::MatrixXd pts(12, 2);
    Eigen::VectorXd w(12);
    for (int i = 0; i < 12; ++i) {
        pts(i, 0) = s.users[static_cast<std::size_t>(i)].x;
        pts(i, 1) = s.users[static_cast<std::size_t>(i)].y;
        w(i) = s.users[static_cast<std::size_t>(i)].load;
    }
    auto replicas = preprocess::split_users(s, 1.0);
    Eigen::MatrixXd rpts(static_cast<Eigen::Index>(replicas.replicas.size()), 2);
    for (std::size_t j = 0; j < replicas.replicas.size(); ++j) {
        rpts(static_cast<Eigen::Index>(j), 0) = replicas.replicas[j].x;
        rpts(static_cast<Eigen::Index>(j), 1) = replicas.replicas[j].y;
    }
    Eigen::VectorXd rw = Eigen::VectorXd::Ones(rpts.rows());

    Eigen::MatrixXd init(2, 2);
    init << 20.0, 20.0, 80.0, 80.0;

    kmeans::LloydOptions opt;
    opt.shift_tol = 0.0;
    opt.record_centroids = true;
    auto direct = kmeans::lloyd_run(pts, w, init, opt);
    auto split = kmeans::lloyd_run(rpts, rw, init, opt);

    REQUIRE(direct.iterations == split.iterations);
    REQUIRE(direct.centroid_trace.size() == split.centroid_trace.size());
    for (std::size_t t = 0; t < direct.centroid_trace.size(); ++t) {
        double gap = (direct.centroid_trace[t] - split.centroid_trace[t]).cwiseAbs().maxCoeff();
        CHECK(gap < 1e-12);
    }

    // and folding the replica assignment recovers the per-user assignment
    std::vector<int> replica_votes(replicas.replicas.size());
    for (std::size_t j = 0; j < replicas.replicas.size(); ++j)
        replica_votes[j] = split.assignment(static_cast<Eigen::Index>(j));
    auto folded = preprocess::fold_assignment(replicas, replica_votes);
    for (int i = 0; i < 12; ++i)
        CHECK(folded.at(s.users[static_cast<std::size_t>(i)].id) == direct.assignment(i));
}

TEST_CASE("a restarted solve matches the enumeration oracle on a tiny instance") {
    Scenario s = random_scenario(22, 8, 2);
    SolveConfig cfg;
    cfg.mode = Mode::WeightedReplication;
    cfg.restarts = 10;
    auto res = kmeans::solve(s, cfg);
    auto best = oracle::optimal_partition(s);
    CHECK(res.report.objective == doctest::Approx(best.objective).epsilon(1e-9));
    CHECK(res.report.objective >= best.objective - 1e-9);
}

TEST_CASE("invalid scenarios and configs are rejected before any work") {
    Scenario s = random_scenario(23, 10, 2);
    s.users[0].load = -2.0;
    SolveConfig cfg;
    CHECK_THROWS_AS(kmeans::solve(s, cfg), InvalidScenario);

    Scenario ok = random_scenario(23, 10, 2);
    cfg.restarts = 0;
    CHECK_THROWS_AS(kmeans::solve(ok, cfg), InvalidParams);
    cfg = SolveConfig{};
    cfg.load_scale = -1.0;
    CHECK_THROWS_AS(kmeans::solve(ok, cfg), InvalidParams);
    cfg = SolveConfig{};
    cfg.max_iters = 0;
    CHECK_THROWS_AS(kmeans::solve(ok, cfg), InvalidParams);
}

TEST_CASE("the restart loop keeps the best objective") {
    Scenario s = random_scenario(24, 30, 3);
    SolveConfig one;
    one.mode = Mode::TwoFeature;
    one.seed = 60;
    one.restarts = 1;
    SolveConfig many = one;
    many.restarts = 12;
    double single = kmeans::solve(s, one).report.objective_trace.back();
    double multi = kmeans::solve(s, many).report.objective_trace.back();
    CHECK(multi <= single);
}
