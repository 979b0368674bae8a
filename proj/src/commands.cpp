#include "uavplace/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <map>
#include <ostream>

#include "uavplace/errors.hpp"
#include "uavplace/io.hpp"
#include "uavplace/kmeans.hpp"
#include "uavplace/metrics.hpp"
#include "uavplace/scenario.hpp"

namespace uavplace::cli {

namespace {

std::string short_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

Mode parse_mode(const std::string& name) {
    if (name == "two-feature") return Mode::TwoFeature;
    if (name == "three-feature") return Mode::ThreeFeature;
    if (name == "weighted") return Mode::WeightedReplication;
    throw InvalidParams("unknown mode '" + name +
                        "' (expected two-feature, three-feature, or weighted)");
}

Init parse_init(const std::string& name) {
    if (name == "uniform") return Init::UniformRandom;
    if (name == "plusplus") return Init::PlusPlus;
    throw InvalidParams("unknown init '" + name + "' (expected uniform or plusplus)");
}

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::TwoFeature: return "two-feature";
        case Mode::ThreeFeature: return "three-feature";
        case Mode::WeightedReplication: return "weighted";
    }
    throw InvalidParams("unknown mode value");
}

std::string init_name(Init i) {
    switch (i) {
        case Init::UniformRandom: return "uniform";
        case Init::PlusPlus: return "plusplus";
    }
    throw InvalidParams("unknown init value");
}

void run_generate(const GenerateOptions& opt, std::ostream& log) {
    if (opt.out.empty()) throw InvalidParams("generate needs an output path");
    Scenario s = opt.border_highload > 0
                     ? scenario::generate_border_stress(opt.seed, opt.n, opt.area, opt.k,
                                                        opt.border_highload, opt.low_load,
                                                        opt.high_load)
                     : scenario::generate(opt.seed, opt.n, opt.area, opt.low_load,
                                          opt.high_load, opt.high_fraction, opt.k);
    io::write_scenario(opt.out, s);
    log << "wrote " << opt.out << ": " << s.users.size() << " users, k=" << s.k << "\n";
    std::map<double, int> histogram;
    for (const User& u : s.users) ++histogram[u.load];
    for (const auto& [load, count] : histogram)
        log << "  load " << short_number(load) << ": " << count << " users\n";
}

void run_place(const PlaceOptions& opt, std::ostream& log) {
    if (opt.out_stem.empty()) throw InvalidParams("place needs an output stem");
    Scenario s = io::read_scenario(opt.scenario_path);
    SolveConfig cfg;
    cfg.mode = opt.mode;
    cfg.load_scale = opt.alpha;
    cfg.init = opt.init;
    cfg.seed = opt.seed;
    cfg.restarts = opt.restarts;
    cfg.max_iters = opt.max_iters;
    cfg.shift_tol = opt.shift_tol;
    auto [placement, report] = kmeans::solve(s, cfg);
    io::write_placement(opt.out_stem + ".placement.json", placement);
    io::write_report(opt.out_stem + ".report.csv", opt.out_stem + ".report.json", report);
    log << mode_name(opt.mode) << ": objective " << io::format_number(report.objective) << ", "
        << placement.iterations << " iterations, "
        << (placement.converged ? "converged" : "not converged") << "\n";
    log << "wrote " << opt.out_stem << ".placement.json, " << opt.out_stem << ".report.csv, "
        << opt.out_stem << ".report.json\n";
}

void run_compare(const CompareOptions& opt, std::ostream& log) {
    if (opt.out_stem.empty()) throw InvalidParams("compare needs an output stem");
    Scenario s = io::read_scenario(opt.scenario_path);
    SolveConfig base;
    base.load_scale = opt.alpha;
    base.init = opt.init;
    base.seed = opt.seed;
    base.restarts = opt.restarts;
    base.max_iters = opt.max_iters;
    base.shift_tol = opt.shift_tol;
    SolveConfig cfg_a = base;
    cfg_a.mode = opt.mode_a;
    SolveConfig cfg_b = base;
    cfg_b.mode = opt.mode_b;
    auto a = kmeans::solve(s, cfg_a);
    auto b = kmeans::solve(s, cfg_b);
    metrics::ComparisonRecord cmp =
        metrics::compare(s, a.placement, b.placement, median_load(s));
    io::write_placement(opt.out_stem + ".a.placement.json", a.placement);
    io::write_placement(opt.out_stem + ".b.placement.json", b.placement);
    io::write_report(opt.out_stem + ".compare.csv", opt.out_stem + ".compare.json", a.report,
                     &cmp);
    if (!opt.plot_dir.empty()) {
        std::filesystem::create_directories(opt.plot_dir);
        const std::filesystem::path dir(opt.plot_dir);
        io::render_svg(s, a.placement, (dir / "placement_a.svg").string());
        io::render_svg(s, b.placement, (dir / "placement_b.svg").string());
    }
    log << "a = " << mode_name(opt.mode_a) << ", b = " << mode_name(opt.mode_b) << "\n";
    for (const auto& [name, d] : cmp.metrics)
        log << "  " << name << ": a " << io::format_number(d.a) << ", b "
            << io::format_number(d.b) << ", delta " << io::format_number(d.delta)
            << ", winner " << d.winner << "\n";
    log << "wrote " << opt.out_stem << ".{a,b}.placement.json, " << opt.out_stem
        << ".compare.csv, " << opt.out_stem << ".compare.json\n";
}

void run_plot(const PlotOptions& opt, std::ostream& log) {
    if (opt.out.empty()) throw InvalidParams("plot needs an output path");
    Scenario s = io::read_scenario(opt.scenario_path);
    Placement p = io::read_placement(opt.placement_path);
    io::render_svg(s, p, opt.out);
    log << "wrote " << opt.out << "\n";
}

}  // namespace uavplace::cli
