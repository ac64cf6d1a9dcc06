#pragma once

#include <string>
#include <vector>

#include "sba/baselines.hpp"
#include "sba/cluster.hpp"
#include "sba/graphon.hpp"
#include "sba/matrix.hpp"
#include "sba/sample.hpp"

// File formats:
//  - Graphon spec: JSON {"type":"blockmodel","boundaries":[...],
//    "probabilities":[[...]]} or {"type":"formula","formula":"w1_logistic"}.
//  - Sample set: text header "n=<n> obs=<2T> directed=<0|1>" followed by 2T
//    blocks of n rows of n space-separated 0/1 digits; when masks are present
//    they are appended as another 2T blocks in the same layout.
//  - Blocking: JSON {"delta":..., "blocks":[[...]], "pivots":[...]}.
//  - Estimate: JSON {"block_probs":[[...]], "assignment":[...]}.
//  - Matrices and risk curves: CSV.
// Doubles are written in shortest round-trip form so outputs are
// byte-reproducible.

namespace sba {

// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

Graphon load_graphon_json(const std::string& path);
// Same format, parsed from an in-memory JSON string (used for specs embedded
// in experiment configs).
Graphon parse_graphon_json_text(const std::string& json_text);
void save_graphon_json(const Graphon& g, const std::string& path);

void save_sample_set(const GraphSampleSet& samples, const std::string& path);
GraphSampleSet load_sample_set(const std::string& path);

void save_labels(const std::vector<double>& labels, const std::string& path);
std::vector<double> load_labels(const std::string& path);

void save_blocking_json(const Blocking& blocking, const std::string& path);
Blocking load_blocking_json(const std::string& path);

void save_estimate_json(const EstimatedGraphon& est, const std::string& path);

void save_matrix_csv(const Matrix& m, const std::string& path);

// Risk curve rows (delta, K, risk) with a "delta,K,risk" header.
void save_risk_csv(const std::vector<double>& deltas, const std::vector<int>& block_counts,
                   const std::vector<double>& risks, const std::string& path);

}  // namespace sba
