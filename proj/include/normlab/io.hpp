#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "normlab/step_function.hpp"
#include "normlab/weights.hpp"

namespace normlab {

/// Step-function text format: one `lo hi value` triple per line, `#` comments.
inline StepFunction parse_step_function(std::istream& in) {
    std::vector<std::tuple<double, double, double>> raw;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        double lo, hi, value;
        std::string trailing;
        if (!(ls >> lo >> hi >> value) || (ls >> trailing))
            throw std::invalid_argument("step function file: malformed line: " + line);
        raw.emplace_back(lo, hi, value);
    }
    return StepFunction::make(raw);
}

inline StepFunction load_step_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open step function file: " + path);
    return parse_step_function(in);
}

/// Sequence file: one value per line, `#` comments.
inline std::vector<double> parse_sequence(std::istream& in) {
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double v;
        if (ls >> v) values.push_back(v);
    }
    return values;
}

inline std::vector<double> load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return parse_sequence(in);
}

/// Weight spec `power:<alpha>` for W(t) = (t+1)^(-alpha).
inline WeightFunction parse_weight_spec(const std::string& spec) {
    if (spec.rfind("power:", 0) == 0) {
        double alpha = std::stod(spec.substr(6));
        return WeightFunction::power(alpha);
    }
    throw std::invalid_argument("unknown weight spec: " + spec);
}

/// Sequence-weight spec: `power:<alpha>` means w(k) = k^(-alpha);
/// `fromW:power:<alpha>` derives w from W(t) = (t+1)^(-alpha).
inline SequenceWeights parse_sequence_weight_spec(const std::string& spec, std::size_t n,
                                                  double p) {
    if (spec.rfind("fromW:", 0) == 0)
        return weights_from_W(parse_weight_spec(spec.substr(6)), std::max<std::size_t>(n, 1), p);
    if (spec.rfind("power:", 0) == 0) {
        double alpha = std::stod(spec.substr(6));
        return SequenceWeights::power(alpha, p, std::max<std::size_t>(n, 1));
    }
    throw std::invalid_argument("unknown sequence weight spec: " + spec);
}

}  // namespace normlab
