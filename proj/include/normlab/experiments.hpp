#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "normlab/garling_seq.hpp"
#include "normlab/measure_map.hpp"
#include "normlab/norm_engines.hpp"
#include "normlab/sampling.hpp"
#include "normlab/step_function.hpp"
#include "normlab/weights.hpp"

namespace normlab {

/// Machine-readable experiment result: CSV rows plus an overall verdict.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool pass = true;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    void write_csv(std::ostream& out) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << "\n";
        }
    }
};

inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Y-space separation: for each b, with offset c = b^2, the shifted indicator
/// 1_{(c,c+b]} has rho_Y norm b while 1_{(0,b]} stays below sqrt(b); the shift
/// map t -> t+c carries one onto the other, so the ratio >= sqrt(b) defeats
/// any equivalent subrearrangement-invariant renorming.
struct YOptions {
    double required_ratio_factor = 1.0;  // test hook: scale the asserted bound
};

inline Table run_y_counterexample(const std::vector<double>& b_list, const YOptions& opt = {}) {
    Table t;
    t.header = {"b", "c", "norm_shifted", "norm_origin", "ratio", "row_ok"};
    for (double b : b_list) {
        if (!(b > 0.0)) throw std::invalid_argument("run_y_counterexample: b must be > 0");
        double c = b * b;  // makes the whole interval admissible: lambda = b <= sqrt(c)
        double norm_shifted = schreier_y_norm(StepFunction::indicator(c, c + b));
        double norm_origin = schreier_y_norm(StepFunction::indicator(0.0, b));
        double ratio = norm_shifted / norm_origin;
        bool ok = ratio >= opt.required_ratio_factor * std::sqrt(b) - 1e-9 &&
                  std::fabs(norm_shifted - b) <= 1e-9 && norm_origin <= std::sqrt(b) + 1e-9;
        t.pass = t.pass && ok;
        t.add_row({fmt(b), fmt(c), fmt(norm_shifted), fmt(norm_origin), fmt(ratio),
                   ok ? "1" : "0"});
    }
    return t;
}

/// Matched discretizations of the divergence pair: cells geometrically graded
/// so the per-cell relative oscillation is uniform.  `fstar` is the lower
/// approximant of t -> (t+1)^(-1/2) on (0,r]; `f` mirrors the same cell values
/// so the two are exactly equimeasurable.
struct DivergencePair {
    StepFunction fstar;
    StepFunction f;
    double rel_oscillation;  // max over cells of v_{i-1}/v_i - 1
};

inline DivergencePair make_divergence_pair(double r, std::size_t n_cells) {
    std::vector<double> x(n_cells + 1);
    for (std::size_t i = 0; i <= n_cells; ++i)
        x[i] = std::pow(r + 1.0, static_cast<double>(i) / static_cast<double>(n_cells)) - 1.0;
    x[0] = 0.0;
    x[n_cells] = r;
    std::vector<std::tuple<double, double, double>> raw_star, raw_f;
    double rel_osc = 0.0, prev_v = 1.0;
    for (std::size_t i = 1; i <= n_cells; ++i) {
        double v = 1.0 / std::sqrt(x[i] + 1.0);
        raw_star.emplace_back(x[i - 1], x[i], v);
        raw_f.emplace_back(r - x[i], r - x[i - 1], v);
        rel_osc = std::max(rel_osc, prev_v / v - 1.0);
        prev_v = v;
    }
    return {StepFunction::make(raw_star), StepFunction::make(raw_f), rel_osc};
}

/// RI/SRI separation: with W(t) = (t+1)^(-1/2), p = 1, the nonincreasing
/// profile has norm >= log(r+1) while its mirrored rearrangement stays below 4
/// for every r, so no rearrangement-invariant renorming can be equivalent.
inline Table run_garling_divergence(const std::vector<double>& r_list, std::size_t n_cells) {
    if (n_cells < 64) throw std::invalid_argument("run_garling_divergence: need n_cells >= 64");
    Table t;
    t.header = {"r",     "n_cells", "norm_fstar_lower", "log_r_plus_1", "norm_f_upper",
                "bound", "slack",   "ratio",            "equimeasurable", "row_ok"};
    WeightFunction W = WeightFunction::power(0.5);
    GNormParams params{1.0, W, 1.0 / 256.0, false};
    for (double r : r_list) {
        if (!(r > 0.0)) throw std::invalid_argument("run_garling_divergence: r must be > 0");
        DivergencePair pair = make_divergence_pair(r, n_cells);
        double norm_fstar = garling_function_norm(pair.fstar, params);  // exact: nonincreasing
        double norm_f = garling_norm_monotone_fastpath(pair.f, W, 1.0);
        double target = std::log1p(r);
        double slack = pair.rel_oscillation * norm_fstar;
        bool equim = equimeasurable(pair.fstar, pair.f, 1e-12);
        double ratio = norm_fstar / norm_f;
        bool ok = equim && norm_fstar >= target - slack && norm_f <= 4.0 + slack;
        t.pass = t.pass && ok;
        t.add_row({fmt(r), fmt(static_cast<double>(n_cells)), fmt(norm_fstar), fmt(target),
                   fmt(norm_f), "4", fmt(slack), fmt(ratio), equim ? "1" : "0", ok ? "1" : "0"});
    }
    return t;
}

/// Characteristic-basis identity: the G-norm of sum_{i<=N} 1_{(i-1,i]} equals
/// What(N)^(1/p), and K^(1/p) times the sequence norm of the all-ones vector.
inline Table run_char_basis_check(const std::vector<std::size_t>& N_list, const WeightFunction& W,
                                  double p, double h = 1.0 / 256.0) {
    Table t;
    t.header = {"N", "norm_grid", "predicted", "seq_bridge", "row_ok"};
    double K = W.normalizer();
    for (std::size_t N : N_list) {
        if (N < 1) throw std::invalid_argument("run_char_basis_check: need N >= 1");
        StepFunction f = StepFunction::indicator(0.0, static_cast<double>(N));
        GNormParams params{p, W, h, false};
        double norm_grid = garling_function_norm_grid(f, params);
        double predicted = std::pow(W.cumulative(static_cast<double>(N)), 1.0 / p);
        SequenceWeights w = weights_from_W(W, N, p);
        FiniteSequence ones(N, 1.0);
        double bridge = std::pow(K, 1.0 / p) * gnorm(ones, w);
        bool ok = std::fabs(norm_grid - predicted) <= 1e-3 * predicted &&
                  std::fabs(bridge - predicted) <= 1e-3 * predicted;
        t.pass = t.pass && ok;
        t.add_row({fmt(static_cast<double>(N)), fmt(norm_grid), fmt(predicted), fmt(bridge),
                   ok ? "1" : "0"});
    }
    return t;
}

namespace detail {

/// sum a_i x_i for normalized constant-coefficient blocks over the given
/// boundaries (1 = k_1 < k_2 < ...), as a step function.
inline StepFunction block_combination(const std::vector<std::size_t>& boundaries,
                                      const std::vector<double>& coeffs, const WeightFunction& W,
                                      double p) {
    std::vector<std::tuple<double, double, double>> raw;
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
        double lo = static_cast<double>(boundaries[i]) - 1.0;
        double hi = static_cast<double>(boundaries[i + 1]) - 1.0;
        double len = hi - lo;
        double block_norm = std::pow(W.cumulative(len), 1.0 / p);  // norm of one packed block
        raw.emplace_back(lo, hi, std::fabs(coeffs[i]) / block_norm);
    }
    return StepFunction::make(raw);
}

}  // namespace detail

/// ell_p domination of normalized constant-coefficient blocks, plus the
/// constant-coefficient lower ratio across length schedules with doubling
/// growth factor.
inline Table run_lp_block_check(const std::vector<std::size_t>& boundaries,
                                std::size_t coeff_trials, const WeightFunction& W, double p,
                                std::uint64_t seed) {
    for (std::size_t i = 0; i + 1 < boundaries.size(); ++i)
        if (boundaries[i] >= boundaries[i + 1])
            throw std::invalid_argument("run_lp_block_check: boundaries must increase");
    if (boundaries.size() < 2 || boundaries[0] != 1)
        throw std::invalid_argument("run_lp_block_check: boundaries must start at 1");

    Table t;
    t.header = {"kind", "trial_or_q", "norm_G", "lp_or_limit", "ratio", "row_ok"};
    const std::size_t m = boundaries.size() - 1;
    GNormParams params{p, W, 1.0 / 16.0, false};
    Rng rng(seed);
    for (std::size_t trial = 0; trial < coeff_trials; ++trial) {
        std::vector<double> a(m);
        for (double& v : a) v = rng.uniform(-1.0, 1.0);
        StepFunction f = detail::block_combination(boundaries, a, W, p);
        double norm_G = garling_function_norm(f, params);
        double lp = 0.0;
        for (double v : a) lp += std::pow(std::fabs(v), p);
        lp = std::pow(lp, 1.0 / p);
        bool ok = norm_G <= lp + 1e-3;
        t.pass = t.pass && ok;
        t.add_row({"trial", fmt(static_cast<double>(trial)), fmt(norm_G), fmt(lp),
                   fmt(lp > 0.0 ? norm_G / lp : 0.0), ok ? "1" : "0"});
    }

    // Constant coefficients: block lengths q^0, ..., q^(m-1); doubling the
    // growth factor q pushes the lower ratio monotonically toward 1.
    double prev_ratio = 0.0;
    for (std::size_t q = 2; q <= 16; q *= 2) {
        std::vector<std::size_t> ks{1};
        std::size_t len = 1;
        for (std::size_t i = 0; i < m; ++i) {
            ks.push_back(ks.back() + len);
            len *= q;
        }
        std::vector<double> ones(m, 1.0);
        StepFunction f = detail::block_combination(ks, ones, W, p);
        double norm_G = garling_function_norm(f, params);  // nonincreasing: exact
        double lp = std::pow(static_cast<double>(m), 1.0 / p);
        double ratio = norm_G / lp;
        bool ok = ratio >= prev_ratio - 1e-9 && ratio <= 1.0 + 1e-3;
        t.pass = t.pass && ok;
        t.add_row({"const", fmt(static_cast<double>(q)), fmt(norm_G), fmt(lp), fmt(ratio),
                   ok ? "1" : "0"});
        prev_ratio = ratio;
    }
    return t;
}

/// Default block boundaries: powers of 2.
inline std::vector<std::size_t> default_block_boundaries(std::size_t blocks) {
    std::vector<std::size_t> ks;
    for (std::size_t i = 0; i <= blocks; ++i) ks.push_back((1ull << i));
    return ks;
}

/// Quick oracle-equivalence and invariant sweep used by the CLI selftest.
inline Table run_selftest(std::uint64_t seed) {
    Table t;
    t.header = {"suite", "cases", "max_error", "row_ok"};
    Rng rng(seed);

    {  // sequence norm vs brute force
        double max_err = 0.0;
        const int cases = 120;
        for (int i = 0; i < cases; ++i) {
            auto f = random_sequence(rng, 10);
            double p = (i % 3 == 0) ? 1.0 : (i % 3 == 1 ? 1.5 : 2.0);
            SequenceWeights w = SequenceWeights::power(rng.uniform(0.2, 1.0), p, f.size() + 1);
            double a = gnorm(f, w), b = gnorm_bruteforce(f, w);
            max_err = std::max(max_err, std::fabs(a - b) / std::max(1.0, std::fabs(b)));
        }
        bool ok = max_err <= 1e-12;
        t.pass = t.pass && ok;
        t.add_row({"gnorm_oracle", fmt(cases), fmt(max_err), ok ? "1" : "0"});
    }

    {  // function norm vs cell oracle
        WeightFunction W = WeightFunction::power(0.5);
        double max_err = 0.0;
        const int cases = 20;
        const double h = 1.0 / 64.0;
        for (int i = 0; i < cases; ++i) {
            StepFunction f = random_step_function(rng, 4, h, 32);
            GNormParams params{1.0, W, h, false};
            double a = garling_function_norm(f, params);
            double b = cell_dp_oracle(f, W, 1.0, h);
            max_err = std::max(max_err, std::fabs(a - b) / std::max(1.0, b));
        }
        bool ok = max_err <= 1e-12;
        t.pass = t.pass && ok;
        t.add_row({"gfn_cell_oracle", fmt(cases), fmt(max_err), ok ? "1" : "0"});
    }

    {  // measure maps: inversion, t <= m(t), initial segments, pushforward
        double max_err = 0.0;
        const int cases = 60;
        for (int i = 0; i < cases; ++i) {
            IntervalSet F = random_interval_set(rng);
            PackingMap m = packing_map(F);
            double total = F.measure();
            for (int j = 0; j < 8; ++j) {
                double u = rng.uniform(0.0, total);
                if (u == 0.0) continue;
                double image = m(u);
                if (image + kTol < u) max_err = std::max(max_err, u - image);
                max_err = std::max(max_err, std::fabs(cumulative_measure(F, image) - u));
                max_err = std::max(max_err, std::fabs(initial_segment(F, u).measure() - u));
            }
            StepFunction f = random_step_function(rng, 4);
            StepFunction packed = pushforward_compose(f, m);
            if (!equimeasurable(packed, restrict_to(f, F), 1e-9)) max_err = std::max(max_err, 1.0);
        }
        bool ok = max_err <= 1e-9;
        t.pass = t.pass && ok;
        t.add_row({"measure_maps", fmt(cases), fmt(max_err), ok ? "1" : "0"});
    }

    {  // subrearrangement invariance of rho_G and Lp
        WeightFunction W = WeightFunction::power(0.5);
        GNormParams params{1.0, W, 1.0 / 64.0, false};
        double max_err = 0.0;
        const int cases = 40;
        for (int i = 0; i < cases; ++i) {
            StepFunction f = random_step_function(rng, 4);
            IntervalSet F = random_interval_set(rng);
            StepFunction restricted = restrict_to(f, F);
            StepFunction composed = pushforward_compose(f, packing_map(F));
            double ga = garling_function_norm(composed, params);
            double gb = garling_function_norm(restricted, params);
            max_err = std::max(max_err, std::fabs(ga - gb) / std::max(1.0, gb));
            double la = lp_norm(composed, 1.0), lb = lp_norm(restricted, 1.0);
            max_err = std::max(max_err, std::fabs(la - lb) / std::max(1.0, lb));
        }
        bool ok = max_err <= 1e-3;
        t.pass = t.pass && ok;
        t.add_row({"sri_invariance", fmt(cases), fmt(max_err), ok ? "1" : "0"});
    }

    return t;
}

}  // namespace normlab
