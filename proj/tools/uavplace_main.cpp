#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "uavplace/acceptance.hpp"
#include "uavplace/commands.hpp"
#include "uavplace/errors.hpp"

int main(int argc, char** argv) {
    using namespace uavplace;

    CLI::App app{"load-aware k-means placement of UAV-mounted mobile base stations"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read flag defaults from a config file (flags win)");

    cli::GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "write a seeded random scenario file");
    generate->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
    generate->add_option("--n", gen.n, "number of users")->capture_default_str();
    generate->add_option("--k", gen.k, "number of UAVs")->capture_default_str();
    generate->add_option("--xmin", gen.area.xmin, "area bound")->capture_default_str();
    generate->add_option("--xmax", gen.area.xmax, "area bound")->capture_default_str();
    generate->add_option("--ymin", gen.area.ymin, "area bound")->capture_default_str();
    generate->add_option("--ymax", gen.area.ymax, "area bound")->capture_default_str();
    generate->add_option("--low-load", gen.low_load, "load of regular users")
        ->capture_default_str();
    generate->add_option("--high-load", gen.high_load, "load of high-traffic users")
        ->capture_default_str();
    generate->add_option("--high-fraction", gen.high_fraction,
                         "probability a user draws the high load")
        ->capture_default_str();
    generate
        ->add_option("--border-highload", gen.border_highload,
                     "instead place this many high-load users between well-separated "
                     "user groups")
        ->capture_default_str();
    generate->add_option("--out", gen.out, "output scenario path")->required();

    cli::PlaceOptions place;
    std::string place_mode = "two-feature";
    std::string place_init = "plusplus";
    auto* place_cmd = app.add_subcommand("place", "solve one placement and write reports");
    place_cmd->add_option("--scenario", place.scenario_path, "input scenario path")->required();
    place_cmd->add_option("--mode", place_mode, "two-feature | three-feature | weighted")
        ->capture_default_str();
    place_cmd->add_option("--alpha", place.alpha, "load-coordinate scale in three-feature mode")
        ->capture_default_str();
    place_cmd->add_option("--init", place_init, "uniform | plusplus")->capture_default_str();
    place_cmd->add_option("--seed", place.seed, "PRNG seed")->capture_default_str();
    place_cmd->add_option("--restarts", place.restarts, "independent runs, best kept")
        ->capture_default_str();
    place_cmd->add_option("--max-iters", place.max_iters, "iteration cap per run")
        ->capture_default_str();
    place_cmd->add_option("--shift-tol", place.shift_tol, "centroid-shift stopping threshold")
        ->capture_default_str();
    place_cmd
        ->add_option("--out", place.out_stem,
                     "output stem; writes <stem>.placement.json and <stem>.report.{csv,json}")
        ->required();

    cli::CompareOptions compare;
    std::string compare_mode_a = "two-feature";
    std::string compare_mode_b = "weighted";
    std::string compare_init = "plusplus";
    auto* compare_cmd =
        app.add_subcommand("compare", "solve two modes on one scenario and diff the metrics");
    compare_cmd->add_option("--scenario", compare.scenario_path, "input scenario path")
        ->required();
    compare_cmd->add_option("--mode-a", compare_mode_a, "first mode")->capture_default_str();
    compare_cmd->add_option("--mode-b", compare_mode_b, "second mode")->capture_default_str();
    compare_cmd->add_option("--alpha", compare.alpha, "three-feature load scale")
        ->capture_default_str();
    compare_cmd->add_option("--init", compare_init, "uniform | plusplus")->capture_default_str();
    compare_cmd->add_option("--seed", compare.seed, "PRNG seed used for both modes")
        ->capture_default_str();
    compare_cmd->add_option("--restarts", compare.restarts, "independent runs per mode")
        ->capture_default_str();
    compare_cmd->add_option("--max-iters", compare.max_iters, "iteration cap per run")
        ->capture_default_str();
    compare_cmd->add_option("--shift-tol", compare.shift_tol, "centroid-shift threshold")
        ->capture_default_str();
    compare_cmd
        ->add_option("--out", compare.out_stem,
                     "output stem; writes <stem>.{a,b}.placement.json and "
                     "<stem>.compare.{csv,json}")
        ->required();
    compare_cmd->add_option("--plot-dir", compare.plot_dir,
                            "also render placement_a.svg / placement_b.svg here");

    cli::PlotOptions plot;
    auto* plot_cmd = app.add_subcommand("plot", "render a placement as an SVG scatter plot");
    plot_cmd->add_option("--scenario", plot.scenario_path, "input scenario path")->required();
    plot_cmd->add_option("--placement", plot.placement_path, "input placement path")->required();
    plot_cmd->add_option("--out", plot.out, "output SVG path")->required();

    auto* acceptance_cmd =
        app.add_subcommand("acceptance", "run the full acceptance suite and report per-criterion results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            cli::run_generate(gen, std::cout);
        } else if (place_cmd->parsed()) {
            place.mode = cli::parse_mode(place_mode);
            place.init = cli::parse_init(place_init);
            cli::run_place(place, std::cout);
        } else if (compare_cmd->parsed()) {
            compare.mode_a = cli::parse_mode(compare_mode_a);
            compare.mode_b = cli::parse_mode(compare_mode_b);
            compare.init = cli::parse_init(compare_init);
            cli::run_compare(compare, std::cout);
        } else if (plot_cmd->parsed()) {
            cli::run_plot(plot, std::cout);
        } else if (acceptance_cmd->parsed()) {
            if (!acceptance::run_all(std::cout)) return 4;
        }
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
