#include "sba/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sba {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

json parse_json_file(const std::string& path) {
    std::ifstream in = open_input(path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& rows, const std::string& what) {
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument(what + " must be a nonempty array of rows");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument(what + " rows must all have the same length");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j].get<double>();
    }
    return m;
}

Graphon graphon_from_json(const json& j) {
    if (!j.contains("type")) throw std::invalid_argument("graphon spec: missing 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "blockmodel") {
        if (!j.contains("boundaries") || !j.contains("probabilities"))
            throw std::invalid_argument(
                "graphon spec: blockmodel needs 'boundaries' and 'probabilities'");
        const std::vector<double> bounds = j.at("boundaries").get<std::vector<double>>();
        const Matrix probs = matrix_from_json(j.at("probabilities"), "'probabilities'");
        return Graphon::block_model(bounds, probs);
    }
    if (type == "formula") {
        if (!j.contains("formula"))
            throw std::invalid_argument("graphon spec: formula type needs 'formula'");
        return Graphon::formula(formula_from_name(j.at("formula").get<std::string>()));
    }
    throw std::invalid_argument("graphon spec: unknown type '" + type + "'");
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

Graphon load_graphon_json(const std::string& path) {
    return graphon_from_json(parse_json_file(path));
}

Graphon parse_graphon_json_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid graphon JSON: ") + e.what());
    }
    return graphon_from_json(j);
}

void save_graphon_json(const Graphon& g, const std::string& path) {
    json j;
    if (g.is_block_model()) {
        j["type"] = "blockmodel";
        j["boundaries"] = g.boundaries();
        j["probabilities"] = matrix_to_json(g.probabilities());
    } else {
        j["type"] = "formula";
        j["formula"] = formula_name(g.formula_kind());
    }
    open_output(path) << j.dump(2) << '\n';
}

void save_sample_set(const GraphSampleSet& samples, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "n=" << samples.n << " obs=" << samples.num_observations()
        << " directed=" << (samples.directed ? 1 : 0) << '\n';
    auto write_block = [&](const BinaryMatrix& m) {
        for (int i = 0; i < samples.n; ++i) {
            for (int j = 0; j < samples.n; ++j) {
                if (j) out << ' ';
                out << static_cast<int>(m(i, j));
            }
            out << '\n';
        }
    };
    for (const BinaryMatrix& obs : samples.observations) write_block(obs);
    for (const BinaryMatrix& mask : samples.masks) write_block(mask);
}

GraphSampleSet load_sample_set(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string header;
    if (!std::getline(in, header))
        throw std::invalid_argument("sample set: empty file: " + path);
    int n = 0, obs = 0, directed = 0;
    if (std::sscanf(header.c_str(), "n=%d obs=%d directed=%d", &n, &obs, &directed) != 3)
        throw std::invalid_argument("sample set: bad header line: " + header);
    if (n < 1 || obs < 2 || obs % 2 != 0 || (directed != 0 && directed != 1))
        throw std::invalid_argument("sample set: invalid header values: " + header);

    GraphSampleSet set;
    set.n = n;
    set.directed = directed == 1;

    auto read_block = [&](BinaryMatrix& m, const char* what) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int v = 0;
                if (!(in >> v)) throw std::invalid_argument(std::string("sample set: truncated ") + what);
                if (v != 0 && v != 1)
                    throw std::invalid_argument(std::string("sample set: non-binary entry in ") + what);
                m.set(i, j, static_cast<std::uint8_t>(v));
            }
    };

    set.observations.assign(obs, BinaryMatrix(n));
    for (int t = 0; t < obs; ++t) read_block(set.observations[t], "observations");

    // Masks are optional; their presence is detected by more data following.
    int probe = 0;
    if (in >> probe) {
        set.masks.assign(obs, BinaryMatrix(n));
        if (probe != 0 && probe != 1)
            throw std::invalid_argument("sample set: non-binary entry in masks");
        set.masks[0].set(0, 0, static_cast<std::uint8_t>(probe));
        for (int t = 0; t < obs; ++t)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (t == 0 && i == 0 && j == 0) continue;
                    int v = 0;
                    if (!(in >> v)) throw std::invalid_argument("sample set: truncated masks");
                    if (v != 0 && v != 1)
                        throw std::invalid_argument("sample set: non-binary entry in masks");
                    set.masks[t].set(i, j, static_cast<std::uint8_t>(v));
                }
    }
    return set;
}

void save_labels(const std::vector<double>& labels, const std::string& path) {
    std::ofstream out = open_output(path);
    for (double u : labels) out << format_double(u) << '\n';
}

std::vector<double> load_labels(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<double> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        labels.push_back(std::stod(line));
    }
    if (labels.empty()) throw std::invalid_argument("labels file has no values: " + path);
    return labels;
}

void save_blocking_json(const Blocking& blocking, const std::string& path) {
    json j;
    j["delta"] = blocking.delta;
    j["blocks"] = blocking.blocks;
    j["pivots"] = blocking.pivots;
    open_output(path) << j.dump(2) << '\n';
}

Blocking load_blocking_json(const std::string& path) {
    const json j = parse_json_file(path);
    Blocking blocking;
    blocking.delta = j.at("delta").get<double>();
    blocking.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    blocking.pivots = j.at("pivots").get<std::vector<int>>();
    if (blocking.blocks.size() != blocking.pivots.size())
        throw std::invalid_argument("blocking file: blocks/pivots length mismatch");
    return blocking;
}

void save_estimate_json(const EstimatedGraphon& est, const std::string& path) {
    json j;
    j["block_probs"] = matrix_to_json(est.block_probs);
    j["assignment"] = est.assignment;
    open_output(path) << j.dump(2) << '\n';
}

void save_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out = open_output(path);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void save_risk_csv(const std::vector<double>& deltas, const std::vector<int>& block_counts,
                   const std::vector<double>& risks, const std::string& path) {
    if (deltas.size() != risks.size() || deltas.size() != block_counts.size())
        throw std::invalid_argument("risk curve: column length mismatch");
    std::ofstream out = open_output(path);
    out << "delta,K,risk\n";
    for (std::size_t i = 0; i < deltas.size(); ++i)
        out << format_double(deltas[i]) << ',' << block_counts[i] << ','
            << format_double(risks[i]) << '\n';
}

}  // namespace sba
