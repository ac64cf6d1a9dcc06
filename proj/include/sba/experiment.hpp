#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sba/distance.hpp"
#include "sba/graphon.hpp"
#include "sba/model_selection.hpp"

namespace sba {

// The five experiment families: sweeps over graph size, observation count,
// true block count (with a fresh random blockmodel per trial), missing-link
// probability, and continuous (formula) graphons.
enum class ExperimentKind { GrowN, GrowT, GrowK, MissingLinks, Continuous };

enum class Method { SBA, USVT, LG };

std::string experiment_kind_name(ExperimentKind kind);
ExperimentKind experiment_kind_from_name(const std::string& name);
std::string method_name(Method method);
Method method_from_name(const std::string& name);

// How the clustering threshold is chosen per trial: a fixed value or
// cross-validation over a grid.
struct DeltaPolicy {
    bool cross_validated = true;
    double fixed_value = 0.0;
    DeltaGrid grid = DeltaGrid::default_grid();
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::GrowN;
    std::optional<Graphon> graphon;  // required except for GrowK
    std::vector<int> n_values;
    std::vector<int> t_values{1};      // T = half the observation count
    std::vector<int> k_values;         // true block counts (GrowK)
    std::vector<double> xi_values{0.0};
    int trials = 50;
    std::uint64_t base_seed = 0;
    std::vector<Method> methods;
    DeltaPolicy delta;
    NeighborhoodPolicy neighborhood;
    bool directed = true;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// One cell of the parameter sweep (cross product of n, T, K, xi lists).
struct ExperimentPoint {
    int n = 0;
    int t = 1;
    int k_true = 0;  // 0 when the graphon has no block structure
    double xi = 0.0;
};

// One CSV row: a single method evaluated on a single trial.
struct TrialResult {
    std::string experiment;
    Method method = Method::SBA;
    int n = 0;
    int t = 1;
    int k_true = 0;
    double xi = 0.0;
    std::uint64_t seed = 0;
    double mae = 0.0;
    double mse = 0.0;
    int k_estimated = 0;
    double delta_used = 0.0;
    double wall_time_ms = 0.0;
};

// Reads a JSON config: {"experiment": "grow_n", "graphon": {...},
// "n": [...], "T": [...], "K": [...], "xi": [...], "trials": N,
// "base_seed": S, "methods": ["sba","usvt","lg"],
// "delta": {"type":"crossval","grid":[...]} | {"type":"fixed","value":V},
// "neighborhood": {"type":"full"} | {"type":"subset","size":S},
// "directed": true}. Missing optional fields take the defaults above.
ExperimentConfig load_experiment_config(const std::string& path);

// The sweep cells in deterministic order (n outermost, then T, K, xi).
std::vector<ExperimentPoint> experiment_points(const ExperimentConfig& config);

// Runs every (point, trial, method) combination. Per-trial seeds are derived
// from base_seed, the point index, and the trial index, so results do not
// depend on scheduling. The data budget per trial: SBA fits 2T observations
// of an (n/2) x (n/2) graph; USVT and LG share one n x n observation. With
// collect_timing false (the default) the wall_time_ms column is written as 0
// so repeated runs are byte-identical.
std::vector<TrialResult> run_experiment(const ExperimentConfig& config,
                                        bool collect_timing = false);

void save_results_csv(const std::vector<TrialResult>& rows, const std::string& path);

}  // namespace sba
