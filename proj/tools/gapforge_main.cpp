// gapforge_main.cpp — Command-line front end: analyze a control system,
// run the standalone oracles, or trace orbit-reduced distances along a
// schedule. Exit codes: 0 success, 2 input error, 3 numerical failure.

#include "gapforge/report.hpp"
#include "gapforge/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

struct AnalyzeArgs {
    std::string system_path;
    std::string report_path;
    std::string cartan_path;
    std::vector<int> tensor;
    std::vector<int> wedge;
    gapforge::est::OptimizerConfig cfg;
    double tol = 1e-9;
    int trials = 4;
    bool skip_estimate = false;
    bool normalize = false;
};

int run_analyze(const AnalyzeArgs& args) {
    gapforge::LoadedSystem loaded = gapforge::load_system(args.system_path, args.normalize);

    gapforge::AnalyzeOptions options;
    options.normalize = args.normalize;
    options.skip_estimate = args.skip_estimate;
    options.trials = args.trials;
    options.tol = args.tol;
    options.load_notes = loaded.notes;
    if (!args.tensor.empty()) options.tensor = {args.tensor[0], args.tensor[1]};
    if (!args.wedge.empty()) options.wedge = {args.wedge[0], args.wedge[1]};
    if (!args.cartan_path.empty()) options.cartan = gapforge::load_cartan_weights(args.cartan_path);

    const gapforge::GapReport report = gapforge::analyze(loaded.system, args.cfg, options);
    gapforge::emit_report(report, args.report_path);
    return 0;
}

int run_det_sum(int k, long samples, int grid, std::uint64_t seed) {
    const gapforge::witness::DetSumStats stats =
        gapforge::witness::det_sum_oracle(k, samples, grid, seed);
    const std::vector<double> stationary(static_cast<size_t>(k), std::sqrt(0.5));
    ordered_json doc;
    doc["oracle"] = "det-sum";
    doc["k"] = k;
    doc["samples"] = samples;
    doc["grid"] = grid;
    doc["seed"] = seed;
    doc["sampled_max"] = round12(stats.sampled_max);
    doc["grid_max"] = round12(stats.grid_max);
    doc["stationary_value"] = round12(gapforge::witness::det_sum_profile(stationary));
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_tensor_bound(int p, int q, long samples, std::uint64_t seed) {
    const double best = gapforge::witness::tensor_overlap_oracle(p, q, samples, seed);
    ordered_json doc;
    doc["oracle"] = "tensor-bound";
    doc["p"] = p;
    doc["q"] = q;
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["max_overlap"] = round12(best);
    doc["cap"] = round12(1.0 / std::sqrt(2.0));
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int run_trace(const std::string& system_path, const std::string& schedule_path, double horizon,
              int samples, const gapforge::est::OptimizerConfig& cfg) {
    const gapforge::LoadedSystem loaded = gapforge::load_system(system_path);
    const gapforge::ControlSchedule schedule = gapforge::load_schedule(schedule_path);
    gapforge::Vector x0 = gapforge::Vector::Zero(loaded.system.n);
    x0(0) = 1.0;

    const std::vector<gapforge::est::TracePoint> points =
        gapforge::est::orbit_distance_trace(loaded.system, schedule, x0, horizon, samples, cfg);

    double max_violation = 0.0;
    ordered_json rows = ordered_json::array();
    for (const gapforge::est::TracePoint& p : points) {
        rows.push_back({{"t", round12(p.t)},
                        {"distance", round12(p.distance)},
                        {"bound", round12(p.bound)}});
        max_violation = std::max(max_violation, p.distance - p.bound);
    }
    ordered_json doc;
    doc["horizon"] = round12(horizon);
    doc["samples"] = samples;
    doc["seed"] = cfg.seed;
    doc["points"] = rows;
    doc["max_violation"] = round12(max_violation);
    std::cout << doc.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified and numerical gap analysis for bilinear control systems"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze = app.add_subcommand("analyze", "classify a system and bound its gap");
    analyze->add_option("system", analyze_args.system_path, "system JSON file")->required();
    analyze->add_option("--report", analyze_args.report_path, "report output path (default stdout)");
    analyze->add_option("--seed", analyze_args.cfg.seed, "random seed");
    analyze->add_option("--starts", analyze_args.cfg.starts, "multistart count");
    analyze->add_option("--max-iters", analyze_args.cfg.max_iters, "ascent iteration cap");
    analyze->add_option("--tol", analyze_args.tol, "closure and rank tolerance");
    analyze->add_option("--trials", analyze_args.trials, "transitivity sample points");
    analyze->add_flag("--skip-estimate", analyze_args.skip_estimate, "skip the numerical estimate");
    analyze->add_flag("--normalize", analyze_args.normalize, "rescale the drift to unit norm");
    analyze->add_option("--tensor", analyze_args.tensor, "tensor factors p q")->expected(2);
    analyze->add_option("--wedge", analyze_args.wedge, "wedge parameters n k")->expected(2);
    analyze->add_option("--cartan", analyze_args.cartan_path, "weight vector file");

    CLI::App* oracle = app.add_subcommand("oracle", "standalone bound oracles");
    oracle->require_subcommand(1);

    int ds_k = 2;
    long ds_samples = 100000;
    int ds_grid = 101;
    std::uint64_t ds_seed = 0;
    CLI::App* det_sum = oracle->add_subcommand("det-sum", "two-minor determinant sum scan");
    det_sum->add_option("--k", ds_k, "degree");
    det_sum->add_option("--samples", ds_samples, "random samples");
    det_sum->add_option("--grid", ds_grid, "lattice points per axis");
    det_sum->add_option("--seed", ds_seed, "random seed");

    int tb_p = 2, tb_q = 2;
    long tb_samples = 100000;
    std::uint64_t tb_seed = 0;
    CLI::App* tensor_bound =
        oracle->add_subcommand("tensor-bound", "decomposable-tensor overlap scan");
    tensor_bound->add_option("--samples", tb_samples, "random samples");
    tensor_bound->add_option("--p", tb_p, "left factor dimension");
    tensor_bound->add_option("--q", tb_q, "right factor dimension");
    tensor_bound->add_option("--seed", tb_seed, "random seed");

    std::string trace_system, trace_controls;
    double trace_horizon = 1.0;
    int trace_samples = 50;
    gapforge::est::OptimizerConfig trace_cfg;
    CLI::App* trace = app.add_subcommand("trace", "orbit-reduced distance along a schedule");
    trace->add_option("system", trace_system, "system JSON file")->required();
    trace->add_option("--controls", trace_controls, "schedule JSON file")->required();
    trace->add_option("--horizon", trace_horizon, "trace horizon")->required();
    trace->add_option("--samples", trace_samples, "sample count");
    trace->add_option("--seed", trace_cfg.seed, "random seed");
    trace->add_option("--starts", trace_cfg.starts, "multistart count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return run_analyze(analyze_args);
        if (*det_sum) return run_det_sum(ds_k, ds_samples, ds_grid, ds_seed);
        if (*tensor_bound) return run_tensor_bound(tb_p, tb_q, tb_samples, tb_seed);
        if (*trace) return run_trace(trace_system, trace_controls, trace_horizon, trace_samples,
                                     trace_cfg);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return 3;
    }
    return 2;
}
