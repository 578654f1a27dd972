#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "normlab/weights.hpp"

namespace normlab {

using FiniteSequence = std::vector<double>;

/// Garling sequence norm: sup over increasing index subsequences (i_1<...<i_k)
/// of (sum_k |f(i_k)|^p w(k))^(1/p), by DP over (index, slot):
///   best[j][k] = max(best[j-1][k], best[j-1][k-1] + |f(j)|^p w(k)).
inline double gnorm(const FiniteSequence& f, const SequenceWeights& w) {
    const double p = w.p();
    // Zero entries never help (w is positive and occupying a slot only pushes
    // later entries onto smaller weights), so work on the nonzero values.
    std::vector<double> terms;
    for (double v : f)
        if (v != 0.0) terms.push_back(std::pow(std::fabs(v), p));
    const std::size_t n = terms.size();
    if (n == 0) return 0.0;
    // best[k] = optimal value using k slots among the entries seen so far.
    std::vector<double> best(n + 1, -1.0);
    best[0] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k >= 1; --k) {
            if (best[k - 1] < 0.0) continue;
            double cand = best[k - 1] + terms[j] * w.at(k);
            if (cand > best[k]) best[k] = cand;
        }
    }
    double m = 0.0;
    for (double v : best) m = std::max(m, v);
    return std::pow(m, 1.0 / p);
}

/// Exhaustive 2^n oracle for gnorm; n <= 20.
inline double gnorm_bruteforce(const FiniteSequence& f, const SequenceWeights& w) {
    if (f.size() > 20) throw std::length_error("gnorm_bruteforce: n > 20");
    const double p = w.p();
    std::vector<double> terms;
    for (double v : f)
        if (v != 0.0) terms.push_back(std::pow(std::fabs(v), p));
    const std::size_t n = terms.size();
    if (n == 0) return 0.0;
    double best = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        double sum = 0.0;
        std::size_t slot = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (1u << j)) {
                ++slot;
                sum += terms[j] * w.at(slot);
            }
        }
        best = std::max(best, sum);
    }
    return std::pow(best, 1.0 / p);
}

/// Support bijection m with g(m(i)) = f(i), built by sorting each support by
/// value (descending, ties broken by index) and matching positionally.
/// Indices are 0-based.  Throws if f and g are not equimeasurable as
/// counting-measure functions.
inline std::vector<std::pair<std::size_t, std::size_t>> ryff_matching(const FiniteSequence& f,
                                                                      const FiniteSequence& g) {
    auto support_sorted = [](const FiniteSequence& h) {
        std::vector<std::pair<double, std::size_t>> s;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] != 0.0) s.emplace_back(std::fabs(h[i]), i);
        std::stable_sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
            return a.first > b.first;
        });
        return s;
    };
    auto sf = support_sorted(f);
    auto sg = support_sorted(g);
    if (sf.size() != sg.size())
        throw std::invalid_argument("ryff_matching: supports differ in size");
    std::vector<std::pair<std::size_t, std::size_t>> m;
    m.reserve(sf.size());
    for (std::size_t i = 0; i < sf.size(); ++i) {
        if (std::fabs(sf[i].first - sg[i].first) > 1e-9)
            throw std::invalid_argument("ryff_matching: inputs are not equimeasurable");
        m.emplace_back(sf[i].second, sg[i].second);
    }
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace normlab
