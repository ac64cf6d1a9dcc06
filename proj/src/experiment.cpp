#include "sba/experiment.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "sba/baselines.hpp"
#include "sba/cluster.hpp"
#include "sba/io.hpp"
#include "sba/metrics.hpp"
#include "sba/sample.hpp"

namespace sba {

namespace {

using nlohmann::json;

// Substream tags combined with the per-trial seed; each random ingredient of
// a trial gets its own generator so methods never perturb each other's draws.
enum SeedTag : std::uint64_t {
    kTagGraphon = 1,     // fresh blockmodel for the K sweep
    kTagSbaLabels = 2,   // latent labels for the half-size SBA graphs
    kTagSbaGraphs = 3,
    kTagSbaMask = 4,
    kTagSbaFit = 5,      // pivot draws / probe subsets / grid substreams
    kTagFullLabels = 6,  // latent labels for the n x n baseline graph
    kTagFullGraphs = 7,
    kTagFullMask = 8,
};

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

std::string experiment_kind_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::GrowN: return "grow_n";
        case ExperimentKind::GrowT: return "grow_t";
        case ExperimentKind::GrowK: return "grow_k";
        case ExperimentKind::MissingLinks: return "missing_links";
        case ExperimentKind::Continuous: return "continuous";
    }
    throw std::invalid_argument("unknown experiment kind");
}

ExperimentKind experiment_kind_from_name(const std::string& name) {
    if (name == "grow_n") return ExperimentKind::GrowN;
    if (name == "grow_t") return ExperimentKind::GrowT;
    if (name == "grow_k") return ExperimentKind::GrowK;
    if (name == "missing_links") return ExperimentKind::MissingLinks;
    if (name == "continuous") return ExperimentKind::Continuous;
    throw std::invalid_argument("experiment: unknown kind '" + name + "'");
}

std::string method_name(Method method) {
    switch (method) {
        case Method::SBA: return "sba";
        case Method::USVT: return "usvt";
        case Method::LG: return "lg";
    }
    throw std::invalid_argument("unknown method");
}

Method method_from_name(const std::string& name) {
    if (name == "sba") return Method::SBA;
    if (name == "usvt") return Method::USVT;
    if (name == "lg") return Method::LG;
    throw std::invalid_argument("methods: unknown method '" + name + "'");
}

void ExperimentConfig::validate() const {
    if (methods.empty()) throw std::invalid_argument("methods: at least one method required");
    if (trials < 1) throw std::invalid_argument("trials: must be >= 1");
    if (n_values.empty()) throw std::invalid_argument("n: at least one value required");
    if (t_values.empty()) throw std::invalid_argument("T: at least one value required");
    if (xi_values.empty()) throw std::invalid_argument("xi: at least one value required");

    bool want_sba = false, want_lg = false;
    for (Method m : methods) {
        want_sba = want_sba || m == Method::SBA;
        want_lg = want_lg || m == Method::LG;
    }

    int min_n = n_values.front();
    for (int n : n_values) {
        min_n = std::min(min_n, n);
        if (want_sba) {
            if (n < 6 || n % 2 != 0)
                throw std::invalid_argument(
                    "n: values must be even and >= 6 when sba runs (it fits half-size graphs "
                    "and the distance estimator needs 3+ vertices)");
        } else if (n < 2) {
            throw std::invalid_argument("n: values must be >= 2");
        }
    }
    for (int t : t_values)
        if (t < 1) throw std::invalid_argument("T: values must be >= 1");
    for (double xi : xi_values)
        if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("xi: values must lie in [0,1]");

    if (kind == ExperimentKind::GrowK) {
        if (k_values.empty())
            throw std::invalid_argument("K: at least one value required for grow_k");
        for (int k : k_values) {
            if (k < 1) throw std::invalid_argument("K: values must be >= 1");
            if (k > min_n)
                throw std::invalid_argument("K: values must not exceed the smallest n");
        }
    } else {
        if (!k_values.empty())
            throw std::invalid_argument("K: only valid for grow_k (other kinds take the "
                                        "block count from the graphon)");
        if (!graphon.has_value())
            throw std::invalid_argument("graphon: required for every kind except grow_k");
        if (want_lg && !graphon->is_block_model())
            throw std::invalid_argument(
                "methods: lg needs a blockmodel graphon to supply its block count");
    }

    if (delta.cross_validated) {
        delta.grid.validate();
    } else if (!(delta.fixed_value > 0.0)) {
        throw std::invalid_argument("delta: fixed value must be positive");
    }

    if (neighborhood.mode == NeighborhoodPolicy::Mode::RandomSubset) {
        if (neighborhood.subset_size < 1)
            throw std::invalid_argument("neighborhood: subset size must be >= 1");
        const bool sba_limited = want_sba && neighborhood.subset_size > min_n / 2 - 2;
        if (sba_limited)
            throw std::invalid_argument(
                "neighborhood: subset size exceeds n/2 - 2 for the smallest n");
    }
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }

    ExperimentConfig config;
    if (!j.contains("experiment"))
        throw std::invalid_argument("experiment: field required in config");
    config.kind = experiment_kind_from_name(j.at("experiment").get<std::string>());

    if (j.contains("graphon"))
        config.graphon = parse_graphon_json_text(j.at("graphon").dump());

    if (!j.contains("n")) throw std::invalid_argument("n: field required in config");
    config.n_values = j.at("n").get<std::vector<int>>();
    if (j.contains("T")) config.t_values = j.at("T").get<std::vector<int>>();
    if (j.contains("K")) config.k_values = j.at("K").get<std::vector<int>>();
    if (j.contains("xi")) config.xi_values = j.at("xi").get<std::vector<double>>();
    if (j.contains("trials")) config.trials = j.at("trials").get<int>();
    if (j.contains("base_seed")) config.base_seed = j.at("base_seed").get<std::uint64_t>();
    if (j.contains("directed")) config.directed = j.at("directed").get<bool>();

    if (!j.contains("methods")) throw std::invalid_argument("methods: field required in config");
    for (const auto& name : j.at("methods"))
        config.methods.push_back(method_from_name(name.get<std::string>()));

    if (j.contains("delta")) {
        const json& d = j.at("delta");
        const std::string type = d.at("type").get<std::string>();
        if (type == "fixed") {
            config.delta.cross_validated = false;
            config.delta.fixed_value = d.at("value").get<double>();
        } else if (type == "crossval") {
            config.delta.cross_validated = true;
            if (d.contains("grid")) {
                config.delta.grid.values = d.at("grid").get<std::vector<double>>();
            }
        } else {
            throw std::invalid_argument("delta: type must be 'fixed' or 'crossval'");
        }
    }

    if (j.contains("neighborhood")) {
        const json& p = j.at("neighborhood");
        const std::string type = p.at("type").get<std::string>();
        if (type == "full") {
            config.neighborhood = NeighborhoodPolicy::full();
        } else if (type == "subset") {
            config.neighborhood = NeighborhoodPolicy::random_subset(p.at("size").get<int>());
        } else {
            throw std::invalid_argument("neighborhood: type must be 'full' or 'subset'");
        }
    }

    config.validate();
    return config;
}

std::vector<ExperimentPoint> experiment_points(const ExperimentConfig& config) {
    std::vector<int> ks;
    if (config.kind == ExperimentKind::GrowK) {
        ks = config.k_values;
    } else if (config.graphon.has_value() && config.graphon->is_block_model()) {
        ks = {config.graphon->block_count()};
    } else {
        ks = {0};
    }

    std::vector<ExperimentPoint> points;
    for (int n : config.n_values)
        for (int t : config.t_values)
            for (int k : ks)
                for (double xi : config.xi_values) points.push_back({n, t, k, xi});
    return points;
}

std::vector<TrialResult> run_experiment(const ExperimentConfig& config, bool collect_timing) {
    config.validate();
    const std::vector<ExperimentPoint> points = experiment_points(config);
    const int n_methods = static_cast<int>(config.methods.size());
    const long long n_jobs = static_cast<long long>(points.size()) * config.trials;

    std::vector<TrialResult> rows(static_cast<std::size_t>(n_jobs) * n_methods);
    const std::string kind_name = experiment_kind_name(config.kind);

    bool want_sba = false, want_usvt = false, want_lg = false;
    for (Method m : config.methods) {
        want_sba = want_sba || m == Method::SBA;
        want_usvt = want_usvt || m == Method::USVT;
        want_lg = want_lg || m == Method::LG;
    }

    std::string first_error;

#pragma omp parallel for schedule(dynamic)
    for (long long job = 0; job < n_jobs; ++job) {
        try {
            const std::size_t point_idx = static_cast<std::size_t>(job) / config.trials;
            const int trial_idx = static_cast<int>(job % config.trials);
            const ExperimentPoint& pt = points[point_idx];
            const std::uint64_t trial_seed =
                mix64(mix64(config.base_seed, point_idx), static_cast<std::uint64_t>(trial_idx));

            std::optional<Graphon> fresh;
            if (config.kind == ExperimentKind::GrowK) {
                Rng graphon_rng(mix64(trial_seed, kTagGraphon));
                fresh = Graphon::random_block_model(pt.k_true, graphon_rng);
            }
            const Graphon& g = fresh.has_value() ? *fresh : *config.graphon;

            // Rows for this job, one per requested method, in config order.
            TrialResult* out = &rows[static_cast<std::size_t>(job) * n_methods];
            for (int m = 0; m < n_methods; ++m) {
                out[m].experiment = kind_name;
                out[m].method = config.methods[m];
                out[m].n = pt.n;
                out[m].t = pt.t;
                out[m].k_true = pt.k_true;
                out[m].xi = pt.xi;
                out[m].seed = trial_seed;
            }
            auto row_for = [&](Method method) -> TrialResult& {
                for (int m = 0; m < n_methods; ++m)
                    if (config.methods[m] == method) return out[m];
                throw std::logic_error("method row missing");
            };

            if (want_sba) {
                TrialResult& row = row_for(Method::SBA);
                Rng label_rng(mix64(trial_seed, kTagSbaLabels));
                const std::vector<double> labels = sample_labels(pt.n / 2, label_rng);
                Rng graph_rng(mix64(trial_seed, kTagSbaGraphs));
                GraphSampleSet set =
                    sample_graphs(g, labels, 2 * pt.t, config.directed, graph_rng);
                if (pt.xi > 0.0) {
                    Rng mask_rng(mix64(trial_seed, kTagSbaMask));
                    set = apply_mask(set, pt.xi, mask_rng);
                }

                const auto start = std::chrono::steady_clock::now();
                Rng fit_rng(mix64(trial_seed, kTagSbaFit));
                Blocking blocking;
                double delta_used = 0.0;
                if (config.delta.cross_validated) {
                    DeltaSelection sel =
                        select_delta(set, config.delta.grid, config.neighborhood, fit_rng);
                    blocking = std::move(sel.blocking);
                    delta_used = sel.delta;
                } else {
                    blocking = cluster(set, config.delta.fixed_value, config.neighborhood,
                                       fit_rng);
                    delta_used = config.delta.fixed_value;
                }
                const EstimatedGraphon est = estimate_block_probabilities(set, blocking);
                if (collect_timing) row.wall_time_ms = elapsed_ms(start);

                row.mae = mae(g, labels, est);
                row.mse = mse(g, labels, est);
                row.k_estimated = blocking.block_count();
                row.delta_used = delta_used;
            }

            if (want_usvt || want_lg) {
                Rng label_rng(mix64(trial_seed, kTagFullLabels));
                const std::vector<double> labels = sample_labels(pt.n, label_rng);
                Rng graph_rng(mix64(trial_seed, kTagFullGraphs));
                GraphSampleSet full = sample_graphs(g, labels, 2, config.directed, graph_rng);
                if (pt.xi > 0.0) {
                    Rng mask_rng(mix64(trial_seed, kTagFullMask));
                    full = apply_mask(full, pt.xi, mask_rng);
                }
                const BinaryMatrix& adjacency = full.observations[0];

                if (want_usvt) {
                    TrialResult& row = row_for(Method::USVT);
                    Matrix mean(pt.n, pt.n);
                    for (int i = 0; i < pt.n; ++i)
                        for (int j = 0; j < pt.n; ++j) mean(i, j) = adjacency(i, j);
                    const auto start = std::chrono::steady_clock::now();
                    const BaselineEstimate est = usvt(mean);
                    if (collect_timing) row.wall_time_ms = elapsed_ms(start);
                    row.mae = mae(g, labels, est);
                    row.mse = mse(g, labels, est);
                    row.k_estimated = est.rank_retained;
                }
                if (want_lg) {
                    TrialResult& row = row_for(Method::LG);
                    const auto start = std::chrono::steady_clock::now();
                    const BaselineEstimate est = largest_gap(adjacency, pt.k_true);
                    if (collect_timing) row.wall_time_ms = elapsed_ms(start);
                    row.mae = mae(g, labels, est);
                    row.mse = mse(g, labels, est);
                    row.k_estimated = est.k_blocks;
                }
            }
        } catch (const std::exception& e) {
#pragma omp critical
            if (first_error.empty()) first_error = e.what();
        }
    }

    if (!first_error.empty())
        throw std::runtime_error("experiment trial failed: " + first_error);
    return rows;
}

void save_results_csv(const std::vector<TrialResult>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "experiment,method,n,T,K_true,xi,seed,mae,mse,K_estimated,delta_used,wall_time_ms\n";
    for (const TrialResult& r : rows) {
        out << r.experiment << ',' << method_name(r.method) << ',' << r.n << ',' << r.t << ','
            << r.k_true << ',' << format_double(r.xi) << ',' << r.seed << ','
            << format_double(r.mae) << ',' << format_double(r.mse) << ',' << r.k_estimated
            << ',' << format_double(r.delta_used) << ',' << format_double(r.wall_time_ms)
            << '\n';
    }
}

}  // namespace sba
