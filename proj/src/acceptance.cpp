#include "uavplace/acceptance.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>

#include "uavplace/commands.hpp"
#include "uavplace/io.hpp"
#include "uavplace/kmeans.hpp"
#include "uavplace/metrics.hpp"
#include "uavplace/model.hpp"
#include "uavplace/oracle.hpp"
#include "uavplace/preprocess.hpp"
#include "uavplace/rng.hpp"
#include "uavplace/scenario.hpp"

namespace uavplace::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rect default_area() { return Rect{0.0, 100.0, 0.0, 100.0}; }

std::string padded_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "u%04d", i);
    return buf;
}

}  // namespace

CriterionResult monotone_descent() {
    CriterionResult r;
    r.id = "monotone-descent";
    r.title = "objective trace never increases, any mode";
    const auto t0 = Clock::now();

    const Mode modes[] = {Mode::TwoFeature, Mode::ThreeFeature, Mode::WeightedReplication};
    int solves = 0;
    int rising_steps = 0;
    double worst_rise = 0.0;
    for (int i = 1; i <= 200; ++i) {
        Scenario s = scenario::generate(static_cast<std::uint64_t>(i), 60, default_area(), 1.0,
                                        8.0, 0.15, 3);
        for (Mode m : modes) {
            SolveConfig cfg;
            cfg.mode = m;
            cfg.seed = 1000 + static_cast<std::uint64_t>(i);
            auto res = kmeans::solve(s, cfg);
            ++solves;
            const auto& trace = res.report.objective_trace;
            for (std::size_t t = 1; t < trace.size(); ++t) {
                const double rise = trace[t] - trace[t - 1];
                worst_rise = std::max(worst_rise, rise);
                if (rise > 1e-9) ++rising_steps;
            }
        }
    }

    r.seconds = seconds_since(t0);
    r.passed = rising_steps == 0 && r.seconds < 10.0;
    r.detail = std::to_string(solves) + " solves, " + std::to_string(rising_steps) +
               " rising steps, worst rise " + io::format_number(worst_rise);
    return r;
}

CriterionResult border_user_relief() {
    CriterionResult r;
    r.id = "border-relief";
    r.title = "weighting pulls centroids toward high-load border users";
    const auto t0 = Clock::now();

    int wins_highload = 0;
    int wins_weighted = 0;
    for (int i = 1; i <= 100; ++i) {
        Scenario s = scenario::generate_border_stress(static_cast<std::uint64_t>(i), 60,
                                                      default_area(), 2, 3, 1.0, 8.0);
        SolveConfig two;
        two.mode = Mode::TwoFeature;
        two.seed = 500 + static_cast<std::uint64_t>(i);
        two.restarts = 10;
        SolveConfig weighted = two;
        weighted.mode = Mode::WeightedReplication;
        auto a = kmeans::solve(s, two);
        auto b = kmeans::solve(s, weighted);
        if (b.report.mean_dist_highload < a.report.mean_dist_highload) ++wins_highload;
        if (b.report.mean_dist_weighted < a.report.mean_dist_weighted) ++wins_weighted;
    }

    r.seconds = seconds_since(t0);
    r.passed = wins_highload >= 90 && wins_weighted >= 95 && r.seconds < 30.0;
    r.detail = "weighted mode wins mean_dist_highload " + std::to_string(wins_highload) +
               "/100 (need 90) and mean_dist_weighted " + std::to_string(wins_weighted) +
               "/100 (need 95)";
    return r;
}

CriterionResult replication_equivalence() {
    CriterionResult r;
    r.id = "replication-equivalence";
    r.title = "weighted Lloyd equals unweighted Lloyd on the replica expansion";
    const auto t0 = Clock::now();

    int mismatched_runs = 0;
    double worst_gap = 0.0;
    for (int i = 1; i <= 50; ++i) {
        SplitMix64 gen(4000 + static_cast<std::uint64_t>(i));
        Scenario s;
        s.area = default_area();
        s.k = 3;
        const int n = 40;
        for (int u = 0; u < n; ++u) {
            User user;
            user.id = padded_id(u);
            user.x = gen.next_in(0.0, 100.0);
            user.y = gen.next_in(0.0, 100.0);
            user.load = 1.0 + std::floor(gen.next_unit() * 8.0);
            s.users.push_back(std::move(user));
        }

        Eigen::MatrixXd pts(n, 2);
        Eigen::VectorXd w(n);
        for (int u = 0; u < n; ++u) {
            pts(u, 0) = s.users[static_cast<std::size_t>(u)].x;
            pts(u, 1) = s.users[static_cast<std::size_t>(u)].y;
            w(u) = s.users[static_cast<std::size_t>(u)].load;
        }
        const auto replicas = preprocess::split_users(s, 1.0);
        const auto m = static_cast<Eigen::Index>(replicas.replicas.size());
        Eigen::MatrixXd rpts(m, 2);
        for (Eigen::Index j = 0; j < m; ++j) {
            rpts(j, 0) = replicas.replicas[static_cast<std::size_t>(j)].x;
            rpts(j, 1) = replicas.replicas[static_cast<std::size_t>(j)].y;
        }
        const Eigen::VectorXd rw = Eigen::VectorXd::Ones(m);

        Eigen::MatrixXd init(3, 2);
        for (int c = 0; c < 3; ++c) {
            init(c, 0) = gen.next_in(0.0, 100.0);
            init(c, 1) = gen.next_in(0.0, 100.0);
        }

        kmeans::LloydOptions opt;
        opt.shift_tol = 0.0;
        opt.record_centroids = true;
        const auto direct = kmeans::lloyd_run(pts, w, init, opt);
        const auto split = kmeans::lloyd_run(rpts, rw, init, opt);
        if (direct.iterations != split.iterations ||
            direct.centroid_trace.size() != split.centroid_trace.size()) {
            ++mismatched_runs;
            continue;
        }
        for (std::size_t t = 0; t < direct.centroid_trace.size(); ++t) {
            const double gap =
                (direct.centroid_trace[t] - split.centroid_trace[t]).cwiseAbs().maxCoeff();
            worst_gap = std::max(worst_gap, gap);
        }
    }

    r.seconds = seconds_since(t0);
    r.passed = mismatched_runs == 0 && worst_gap < 1e-12 && r.seconds < 10.0;
    r.detail = "50 paired runs, " + std::to_string(mismatched_runs) +
               " iteration-count mismatches, worst per-coordinate gap " +
               io::format_number(worst_gap);
    return r;
}

CriterionResult oracle_gap() {
    CriterionResult r;
    r.id = "oracle-gap";
    r.title = "restarted weighted solve reaches the enumerated optimum";
    const auto t0 = Clock::now();

    int hits = 0;
    bool went_below = false;
    double worst_gap = 0.0;
    for (int i = 1; i <= 100; ++i) {
        SplitMix64 gen(9000 + static_cast<std::uint64_t>(i));
        const int n = 4 + static_cast<int>(gen.next_u64() % 5);
        Scenario s;
        s.area = default_area();
        s.k = 2;
        for (int u = 0; u < n; ++u) {
            User user;
            user.id = padded_id(u);
            user.x = gen.next_in(0.0, 100.0);
            user.y = gen.next_in(0.0, 100.0);
            user.load = 1.0 + 7.0 * gen.next_unit();
            s.users.push_back(std::move(user));
        }

        SolveConfig cfg;
        cfg.mode = Mode::WeightedReplication;
        cfg.restarts = 20;
        cfg.seed = 777 + static_cast<std::uint64_t>(i);
        const auto res = kmeans::solve(s, cfg);
        const auto best = oracle::optimal_partition(s);

        const double obj = res.report.objective;
        if (obj < best.objective - 1e-9) went_below = true;
        if (best.objective <= 1e-12) {
            if (obj <= 1e-9) ++hits;
        } else {
            const double gap = (obj - best.objective) / best.objective;
            worst_gap = std::max(worst_gap, gap);
            if (gap <= 1e-6) ++hits;
        }
    }

    r.seconds = seconds_since(t0);
    r.passed = hits >= 95 && !went_below && r.seconds < 20.0;
    r.detail = std::to_string(hits) + "/100 within 1e-6 relative (need 95), worst gap " +
               io::format_number(worst_gap) +
               (went_below ? ", went below the optimum" : ", never below the optimum");
    return r;
}

CriterionResult closed_forms() {
    CriterionResult r;
    r.id = "closed-forms";
    r.title = "k=1 means, equal-load no-op, alpha=0 degeneracy";
    const auto t0 = Clock::now();

    std::string failures;
    auto fail = [&failures](const std::string& what) {
        if (!failures.empty()) failures += "; ";
        failures += what;
    };

    {
        SplitMix64 gen(123);
        Scenario s;
        s.area = default_area();
        s.k = 1;
        const int n = 24;
        for (int u = 0; u < n; ++u) {
            User user;
            user.id = padded_id(u);
            user.x = gen.next_in(0.0, 100.0);
            user.y = gen.next_in(0.0, 100.0);
            user.load = 1.0 + 7.0 * gen.next_unit();
            s.users.push_back(std::move(user));
        }
        long double sx = 0, sy = 0, swx = 0, swy = 0, sw = 0;
        for (const User& u : s.users) {
            sx += u.x;
            sy += u.y;
            swx += static_cast<long double>(u.load) * u.x;
            swy += static_cast<long double>(u.load) * u.y;
            sw += u.load;
        }
        const double mean_x = static_cast<double>(sx / n);
        const double mean_y = static_cast<double>(sy / n);
        const double wmean_x = static_cast<double>(swx / sw);
        const double wmean_y = static_cast<double>(swy / sw);

        const Mode modes[] = {Mode::TwoFeature, Mode::ThreeFeature, Mode::WeightedReplication};
        for (Mode m : modes) {
            SolveConfig cfg;
            cfg.mode = m;
            cfg.seed = 5;
            const auto res = kmeans::solve(s, cfg);
            const Centroid& c = res.placement.centroids.at(0);
            const double ex = m == Mode::WeightedReplication ? wmean_x : mean_x;
            const double ey = m == Mode::WeightedReplication ? wmean_y : mean_y;
            if (std::fabs(c.x - ex) > 1e-12 || std::fabs(c.y - ey) > 1e-12)
                fail("k=1 centroid misses the mean in " + cli::mode_name(m) + " mode");
        }
    }

    for (double level : {1.0, 8.0}) {
        Scenario s = scenario::generate(21, 40, default_area(), level, level, 0.5, 3);
        SolveConfig two;
        two.mode = Mode::TwoFeature;
        two.seed = 9;
        SolveConfig weighted = two;
        weighted.mode = Mode::WeightedReplication;
        const auto a = kmeans::solve(s, two);
        const auto b = kmeans::solve(s, weighted);
        const auto cmp = metrics::compare(s, a.placement, b.placement, median_load(s));
        for (const auto& [name, d] : cmp.metrics)
            if (d.delta != 0.0 || d.winner != "tie")
                fail("nonzero " + name + " delta with all loads at " +
                     io::format_number(level));
    }

    {
        Scenario s = scenario::generate(31, 50, default_area(), 1.0, 8.0, 0.3, 3);
        for (Init init : {Init::UniformRandom, Init::PlusPlus}) {
            SolveConfig two;
            two.mode = Mode::TwoFeature;
            two.init = init;
            two.seed = 77;
            SolveConfig three = two;
            three.mode = Mode::ThreeFeature;
            three.load_scale = 0.0;
            const auto a = kmeans::solve(s, two);
            const auto b = kmeans::solve(s, three);
            if (a.placement.assignment != b.placement.assignment)
                fail("alpha=0 assignments differ under " + cli::init_name(init) + " init");
        }
    }

    r.seconds = seconds_since(t0);
    r.passed = failures.empty() && r.seconds < 1.0;
    r.detail = failures.empty()
                   ? "k=1 means, equal-load deltas, and alpha=0 assignments all exact"
                   : failures;
    return r;
}

namespace {

std::string read_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string drive_commands(const std::filesystem::path& dir) {
    std::ostringstream log;
    const std::string uniform = (dir / "uniform.scenario.json").string();
    const std::string border = (dir / "border.scenario.json").string();

    cli::GenerateOptions gen;
    gen.seed = 7;
    gen.n = 60;
    gen.k = 3;
    gen.out = uniform;
    cli::run_generate(gen, log);

    cli::GenerateOptions gen_border;
    gen_border.seed = 11;
    gen_border.n = 60;
    gen_border.k = 2;
    gen_border.border_highload = 3;
    gen_border.out = border;
    cli::run_generate(gen_border, log);

    const std::pair<Mode, const char*> runs[] = {{Mode::TwoFeature, "two"},
                                                 {Mode::ThreeFeature, "three"},
                                                 {Mode::WeightedReplication, "weighted"}};
    for (const auto& [mode, stem] : runs) {
        cli::PlaceOptions place;
        place.scenario_path = uniform;
        place.mode = mode;
        place.out_stem = (dir / stem).string();
        cli::run_place(place, log);
    }

    cli::CompareOptions cmp;
    cmp.scenario_path = border;
    cmp.out_stem = (dir / "cmp").string();
    cmp.plot_dir = (dir / "plots").string();
    cli::run_compare(cmp, log);

    cli::PlotOptions plot;
    plot.scenario_path = uniform;
    plot.placement_path = (dir / "two.placement.json").string();
    plot.out = (dir / "two.svg").string();
    cli::run_plot(plot, log);

    return log.str();
}

std::string scrub_dir(std::string text, const std::string& dir) {
    for (std::size_t pos = text.find(dir); pos != std::string::npos; pos = text.find(dir, pos))
        text.replace(pos, dir.size(), "<out>");
    return text;
}

}  // namespace

CriterionResult cli_determinism() {
    CriterionResult r;
    r.id = "cli-determinism";
    r.title = "repeated command runs emit byte-identical files";
    const auto t0 = Clock::now();

    namespace fs = std::filesystem;
    const fs::path base =
        fs::temp_directory_path() /
        ("uavplace-acceptance-" + std::to_string(Clock::now().time_since_epoch().count()));
    const fs::path d1 = base / "run1";
    const fs::path d2 = base / "run2";

    try {
        fs::create_directories(d1);
        fs::create_directories(d2);
        const std::string log1 = drive_commands(d1);
        const std::string log2 = drive_commands(d2);
        const bool logs_equal =
            scrub_dir(log1, d1.string()) == scrub_dir(log2, d2.string());

        int files = 0;
        int mismatches = 0;
        for (const auto& entry : fs::recursive_directory_iterator(d1)) {
            if (!entry.is_regular_file()) continue;
            ++files;
            const fs::path other = d2 / fs::relative(entry.path(), d1);
            if (!fs::exists(other) || read_bytes(entry.path()) != read_bytes(other))
                ++mismatches;
        }
        int files_second = 0;
        for (const auto& entry : fs::recursive_directory_iterator(d2))
            if (entry.is_regular_file()) ++files_second;

        r.seconds = seconds_since(t0);
        r.passed = mismatches == 0 && files == files_second && files >= 18 && logs_equal &&
                   r.seconds < 5.0;
        r.detail = std::to_string(files) + " files per run, " + std::to_string(mismatches) +
                   " byte mismatches, logs " + (logs_equal ? "identical" : "differ");
    } catch (const std::exception& e) {
        r.seconds = seconds_since(t0);
        r.passed = false;
        r.detail = std::string("command raised: ") + e.what();
    }

    std::error_code ec;
    fs::remove_all(base, ec);
    return r;
}

bool run_all(std::ostream& log) {
    using Criterion = CriterionResult (*)();
    const Criterion criteria[] = {monotone_descent, border_user_relief,
                                  replication_equivalence, oracle_gap,
                                  closed_forms,     cli_determinism};
    bool all_passed = true;
    int passed_count = 0;
    for (Criterion criterion : criteria) {
        const CriterionResult res = criterion();
        all_passed = all_passed && res.passed;
        passed_count += res.passed ? 1 : 0;
        char secs[32];
        std::snprintf(secs, sizeof(secs), "%.2f", res.seconds);
        log << (res.passed ? "PASS " : "FAIL ") << res.id << ": " << res.detail << " (" << secs
            << " s)\n";
    }
    log << passed_count << "/6 criteria passed\n";
    return all_passed;
}

}  // namespace uavplace::acceptance
