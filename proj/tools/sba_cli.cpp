// Command-line front end: sample-set generation, fitting, cross-validation,
// baselines, and the seeded experiment harness.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"

#include "sba/baselines.hpp"
#include "sba/cluster.hpp"
#include "sba/distance.hpp"
#include "sba/experiment.hpp"
#include "sba/graphon.hpp"
#include "sba/io.hpp"
#include "sba/metrics.hpp"
#include "sba/model_selection.hpp"
#include "sba/rng.hpp"
#include "sba/sample.hpp"

namespace {

struct GenerateArgs {
    std::string graphon_path;
    int n = 0;
    int obs = 2;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string labels_out;
    bool undirected = false;
    double xi = 0.0;
};

struct EstimateArgs {
    std::string in_path;
    double delta = 0.0;
    bool crossval = false;
    double grid_min = 0.05;
    double grid_max = 1.0;
    int grid_count = 10;
    int subset = 0;
    std::uint64_t seed = 0;
    std::string blocking_out;
    std::string estimate_out;
    std::string matrix_out;
    std::string truth_path;
    std::string labels_path;
};

struct CrossvalArgs {
    std::string in_path;
    double grid_min = 0.05;
    double grid_max = 1.0;
    int grid_count = 10;
    int subset = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

struct BaselineArgs {
    std::string in_path;
    std::string method;
    double eta = 0.01;
    int k_blocks = 0;
    std::string out_path;
    std::string truth_path;
    std::string labels_path;
};

struct ExperimentArgs {
    std::string config_path;
    std::string out_path;
    bool has_seed = false;
    std::uint64_t seed = 0;
    int trials = 0;
    bool paper_scale = false;
    bool timing = false;
};

sba::NeighborhoodPolicy policy_from_subset(int subset) {
    return subset > 0 ? sba::NeighborhoodPolicy::random_subset(subset)
                      : sba::NeighborhoodPolicy::full();
}

void print_fit_metrics(const sba::Graphon& truth, const std::vector<double>& labels,
                       const sba::EstimatedGraphon& est) {
    std::cout << "mae=" << sba::format_double(sba::mae(truth, labels, est))
              << " mse=" << sba::format_double(sba::mse(truth, labels, est)) << '\n';
}

int run_generate(const GenerateArgs& args) {
    const sba::Graphon g = sba::load_graphon_json(args.graphon_path);
    sba::Rng rng(args.seed);
    const std::vector<double> labels = sba::sample_labels(args.n, rng);
    sba::GraphSampleSet set =
        sba::sample_graphs(g, labels, args.obs, !args.undirected, rng);
    if (args.xi > 0.0) set = sba::apply_mask(set, args.xi, rng);
    sba::save_sample_set(set, args.out_path);
    if (!args.labels_out.empty()) sba::save_labels(labels, args.labels_out);
    std::cout << "wrote " << args.out_path << " (n=" << set.n
              << " obs=" << set.num_observations() << ")\n";
    return 0;
}

int run_estimate(const EstimateArgs& args) {
    if (args.crossval == (args.delta > 0.0))
        throw std::invalid_argument("estimate: pass exactly one of --delta or --crossval");
    const sba::GraphSampleSet set = sba::load_sample_set(args.in_path);
    const sba::NeighborhoodPolicy policy = policy_from_subset(args.subset);
    sba::Rng rng(args.seed);

    sba::Blocking blocking;
    if (args.crossval) {
        const sba::DeltaGrid grid =
            sba::DeltaGrid::geometric(args.grid_min, args.grid_max, args.grid_count);
        sba::DeltaSelection sel = sba::select_delta(set, grid, policy, rng);
        blocking = std::move(sel.blocking);
    } else {
        blocking = sba::cluster(set, args.delta, policy, rng);
    }
    const sba::EstimatedGraphon est = sba::estimate_block_probabilities(set, blocking);

    std::cout << "delta=" << sba::format_double(blocking.delta)
              << " K=" << blocking.block_count() << '\n';
    if (!args.blocking_out.empty()) sba::save_blocking_json(blocking, args.blocking_out);
    if (!args.estimate_out.empty()) sba::save_estimate_json(est, args.estimate_out);
    if (!args.matrix_out.empty()) {
        sba::Matrix predicted(set.n, set.n);
        for (int i = 0; i < set.n; ++i)
            for (int j = 0; j < set.n; ++j) predicted(i, j) = sba::predict(est, i, j);
        sba::save_matrix_csv(predicted, args.matrix_out);
    }
    if (!args.truth_path.empty() || !args.labels_path.empty()) {
        if (args.truth_path.empty() || args.labels_path.empty())
            throw std::invalid_argument("estimate: --truth and --labels go together");
        const sba::Graphon truth = sba::load_graphon_json(args.truth_path);
        const std::vector<double> labels = sba::load_labels(args.labels_path);
        if (static_cast<int>(labels.size()) != set.n)
            throw std::invalid_argument("estimate: label count does not match sample set");
        print_fit_metrics(truth, labels, est);
    }
    return 0;
}

int run_crossval(const CrossvalArgs& args) {
    const sba::GraphSampleSet set = sba::load_sample_set(args.in_path);
    const sba::DeltaGrid grid =
        sba::DeltaGrid::geometric(args.grid_min, args.grid_max, args.grid_count);
    sba::Rng rng(args.seed);
    const sba::DeltaSelection sel =
        sba::select_delta(set, grid, policy_from_subset(args.subset), rng);
    sba::save_risk_csv(grid.values, sel.block_counts, sel.risks, args.out_path);
    std::cout << "selected delta=" << sba::format_double(sel.delta)
              << " K=" << sel.blocking.block_count() << '\n';
    return 0;
}

int run_baseline(const BaselineArgs& args) {
    const sba::GraphSampleSet set = sba::load_sample_set(args.in_path);
    sba::BaselineEstimate est;
    if (args.method == "usvt") {
        // USVT consumes the mean of every observation it is given.
        sba::Matrix mean(set.n, set.n);
        for (int i = 0; i < set.n; ++i)
            for (int j = 0; j < set.n; ++j) {
                double acc = 0.0;
                for (const sba::BinaryMatrix& obs : set.observations) acc += obs(i, j);
                mean(i, j) = acc / set.num_observations();
            }
        est = sba::usvt(mean, args.eta);
        std::cout << "usvt rank_retained=" << est.rank_retained << '\n';
    } else if (args.method == "lg") {
        if (args.k_blocks < 1)
            throw std::invalid_argument("baseline: lg requires --k >= 1");
        est = sba::largest_gap(set.observations[0], args.k_blocks);
        std::cout << "lg blocks=" << est.k_blocks << '\n';
    } else {
        throw std::invalid_argument("baseline: --method must be usvt or lg");
    }
    sba::save_matrix_csv(est.matrix, args.out_path);
    if (!args.truth_path.empty() && !args.labels_path.empty()) {
        const sba::Graphon truth = sba::load_graphon_json(args.truth_path);
        const std::vector<double> labels = sba::load_labels(args.labels_path);
        if (static_cast<int>(labels.size()) != set.n)
            throw std::invalid_argument("baseline: label count does not match sample set");
        std::cout << "mae=" << sba::format_double(sba::mae(truth, labels, est))
                  << " mse=" << sba::format_double(sba::mse(truth, labels, est)) << '\n';
    }
    return 0;
}

int run_experiment_cmd(const ExperimentArgs& args) {
    sba::ExperimentConfig config = sba::load_experiment_config(args.config_path);
    if (args.has_seed) config.base_seed = args.seed;
    if (args.paper_scale) config.trials = 100;
    if (args.trials > 0) config.trials = args.trials;
    const std::vector<sba::TrialResult> rows = sba::run_experiment(config, args.timing);
    sba::save_results_csv(rows, args.out_path);
    std::cout << "wrote " << rows.size() << " rows to " << args.out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic blockmodel approximation of graphons"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "Sample observations of an exchangeable random graph");
    generate->add_option("--graphon", gen.graphon_path, "graphon spec JSON")->required();
    generate->add_option("--n", gen.n, "vertex count")->required();
    generate->add_option("--obs", gen.obs, "number of observations (even)")->required();
    generate->add_option("--seed", gen.seed, "RNG seed")->required();
    generate->add_option("--out", gen.out_path, "sample-set output path")->required();
    generate->add_option("--labels-out", gen.labels_out, "write latent labels here");
    generate->add_flag("--undirected", gen.undirected, "sample symmetric graphs");
    generate->add_option("--xi", gen.xi, "missing-link probability (adds masks)");

    EstimateArgs est;
    CLI::App* estimate =
        app.add_subcommand("estimate", "Fit a piecewise-constant graphon estimate");
    estimate->add_option("--in", est.in_path, "sample-set file")->required();
    estimate->add_option("--delta", est.delta, "fixed clustering threshold");
    estimate->add_flag("--crossval", est.crossval, "cross-validate the threshold");
    estimate->add_option("--grid-min", est.grid_min, "smallest grid threshold");
    estimate->add_option("--grid-max", est.grid_max, "largest grid threshold");
    estimate->add_option("--grid-count", est.grid_count, "grid size");
    estimate->add_option("--subset", est.subset, "random probe subset size (0 = all)");
    estimate->add_option("--seed", est.seed, "RNG seed")->required();
    estimate->add_option("--blocking-out", est.blocking_out, "blocking JSON output");
    estimate->add_option("--estimate-out", est.estimate_out, "estimate JSON output");
    estimate->add_option("--matrix-out", est.matrix_out, "predicted n x n matrix CSV");
    estimate->add_option("--truth", est.truth_path, "true graphon JSON (for metrics)");
    estimate->add_option("--labels", est.labels_path, "true labels file (for metrics)");

    CrossvalArgs cv;
    CLI::App* crossval =
        app.add_subcommand("crossval", "Emit the cross-validation risk curve");
    crossval->add_option("--in", cv.in_path, "sample-set file")->required();
    crossval->add_option("--grid-min", cv.grid_min, "smallest grid threshold");
    crossval->add_option("--grid-max", cv.grid_max, "largest grid threshold");
    crossval->add_option("--grid-count", cv.grid_count, "grid size");
    crossval->add_option("--subset", cv.subset, "random probe subset size (0 = all)");
    crossval->add_option("--seed", cv.seed, "RNG seed")->required();
    crossval->add_option("--out", cv.out_path, "risk CSV output")->required();

    BaselineArgs base;
    CLI::App* baseline = app.add_subcommand("baseline", "Run a baseline estimator");
    baseline->add_option("--in", base.in_path, "sample-set file")->required();
    baseline->add_option("--method", base.method, "usvt or lg")->required();
    baseline->add_option("--eta", base.eta, "usvt threshold slack");
    baseline->add_option("--k", base.k_blocks, "lg block count");
    baseline->add_option("--out", base.out_path, "estimate matrix CSV")->required();
    baseline->add_option("--truth", base.truth_path, "true graphon JSON (for metrics)");
    baseline->add_option("--labels", base.labels_path, "true labels file (for metrics)");

    ExperimentArgs exp;
    CLI::App* experiment =
        app.add_subcommand("experiment", "Run a seeded experiment sweep");
    experiment->add_option("--config", exp.config_path, "experiment config JSON")->required();
    experiment->add_option("--out", exp.out_path, "results CSV output")->required();
    CLI::Option* seed_opt =
        experiment->add_option("--seed", exp.seed, "override the config base seed");
    experiment->add_option("--trials", exp.trials, "override the trial count");
    experiment->add_flag("--paper-scale", exp.paper_scale,
                         "run 100 trials per point instead of the config value");
    experiment->add_flag("--timing", exp.timing,
                         "record wall-clock fit times (breaks byte-reproducibility)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    exp.has_seed = seed_opt->count() > 0;

    if (threads > 0) omp_set_num_threads(threads);

    try {
        if (generate->parsed()) return run_generate(gen);
        if (estimate->parsed()) return run_estimate(est);
        if (crossval->parsed()) return run_crossval(cv);
        if (baseline->parsed()) return run_baseline(base);
        if (experiment->parsed()) return run_experiment_cmd(exp);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
