#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "uavplace/model.hpp"

namespace uavplace::cli {

// Option structs mirror the command-line flags one-to-one; the run_*
// functions do the actual work so both the binary and the test suites can
// drive commands in-process. All of them throw on invalid input and write
// human-readable progress to `log`.

struct GenerateOptions {
    std::uint64_t seed = 42;
    int n = 60;
    Rect area{0.0, 100.0, 0.0, 100.0};
    double low_load = 1.0;
    double high_load = 8.0;
    double high_fraction = 0.15;
    int k = 3;
    int border_highload = 0;  // > 0 switches to the border-stress generator
    std::string out;
};

struct PlaceOptions {
    std::string scenario_path;
    Mode mode = Mode::TwoFeature;
    double alpha = 1.0;
    Init init = Init::PlusPlus;
    std::uint64_t seed = 42;
    int restarts = 10;
    int max_iters = 300;
    double shift_tol = 1e-9;
    std::string out_stem;  // writes <stem>.placement.json, <stem>.report.{csv,json}
};

struct CompareOptions {
    std::string scenario_path;
    Mode mode_a = Mode::TwoFeature;
    Mode mode_b = Mode::WeightedReplication;
    double alpha = 1.0;
    Init init = Init::PlusPlus;
    std::uint64_t seed = 42;
    int restarts = 10;
    int max_iters = 300;
    double shift_tol = 1e-9;
    std::string out_stem;  // writes <stem>.{a,b}.placement.json, <stem>.compare.{csv,json}
    std::string plot_dir;  // non-empty: also writes placement_a.svg / placement_b.svg there
};

struct PlotOptions {
    std::string scenario_path;
    std::string placement_path;
    std::string out;
};

void run_generate(const GenerateOptions& opt, std::ostream& log);
void run_place(const PlaceOptions& opt, std::ostream& log);
void run_compare(const CompareOptions& opt, std::ostream& log);
void run_plot(const PlotOptions& opt, std::ostream& log);

// Flag spellings: modes are "two-feature", "three-feature", "weighted";
// inits are "uniform", "plusplus". Unknown names raise InvalidParams.
Mode parse_mode(const std::string& name);
Init parse_init(const std::string& name);
std::string mode_name(Mode m);
std::string init_name(Init i);

}  // namespace uavplace::cli
