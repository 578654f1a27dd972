#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "normlab/step_function.hpp"
#include "normlab/weights.hpp"

namespace normlab {

/// Parameters for the Garling function-norm engine.
struct GNormParams {
    double p = 1.0;
    WeightFunction W = WeightFunction::power(0.5);
    double h = 1.0 / 1024.0;  // grid step for the packed-length DP
    bool refine = true;       // halve h until successive results settle
};

namespace detail {

struct PackedPiece {
    double length;
    double value;
};

/// Length/value layout of f with positions discarded: the packing reduction
/// makes the norm depend only on this.
inline std::vector<PackedPiece> packed_layout(const StepFunction& f) {
    std::vector<PackedPiece> out;
    out.reserve(f.pieces().size());
    for (const auto& pc : f.pieces()) out.push_back({pc.iv.length(), pc.value});
    return out;
}

/// Objective when every piece is kept in full and packed left.
inline double identity_packing_power(const std::vector<PackedPiece>& pieces,
                                     const WeightFunction& W, double p) {
    double total = 0.0, packed = 0.0, prev_cum = 0.0;
    for (const auto& pc : pieces) {
        packed += pc.length;
        double cum = W.cumulative(packed);
        total += std::pow(pc.value, p) * (cum - prev_cum);
        prev_cum = cum;
    }
    return total;
}

/// DP over grid-quantized packed length: state = kept measure so far as a
/// multiple of h, per-piece kept length a multiple of h up to the piece
/// length.  Returns the optimum of the p-th power objective.
inline double grid_dp_power(const std::vector<PackedPiece>& pieces, const WeightFunction& W,
                            double p, double h) {
    double total_len = 0.0;
    for (const auto& pc : pieces) total_len += pc.length;
    const std::size_t M = static_cast<std::size_t>(std::floor(total_len / h + 1e-9));
    std::vector<double> cum(M + 1);
    for (std::size_t v = 0; v <= M; ++v) cum[v] = W.cumulative(static_cast<double>(v) * h);

    std::vector<double> best(M + 1, -1.0), next(M + 1);
    best[0] = 0.0;
    std::size_t reach = 0;
    for (const auto& pc : pieces) {
        const std::size_t cap = static_cast<std::size_t>(std::floor(pc.length / h + 1e-9));
        const double vp = std::pow(pc.value, p);
        std::size_t new_reach = std::min(M, reach + cap);
        for (std::size_t v = 0; v <= new_reach; ++v) {
            double b = best[v];  // keep nothing from this piece
            std::size_t dmax = std::min(v, cap);
            for (std::size_t d = 1; d <= dmax; ++d) {
                double prev = best[v - d];
                if (prev < 0.0) continue;
                double cand = prev + vp * (cum[v] - cum[v - d]);
                if (cand > b) b = cand;
            }
            next[v] = b;
        }
        std::copy(next.begin(), next.begin() + new_reach + 1, best.begin());
        reach = new_reach;
    }
    double m = 0.0;
    for (std::size_t v = 0; v <= reach; ++v) m = std::max(m, best[v]);
    return m;
}

inline bool nonincreasing_values(const std::vector<PackedPiece>& pieces) {
    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (pieces[i].value > pieces[i - 1].value + 1e-15) return false;
    return true;
}

}  // namespace detail

/// Grid-DP route of the Garling function norm, without the monotone shortcut.
/// Reported value is a lower bound on the true supremum, converging as h -> 0.
inline double garling_function_norm_grid(const StepFunction& f, const GNormParams& params) {
    if (!(params.h > 0.0) || !(params.p >= 1.0))
        throw std::invalid_argument("garling_function_norm: need h > 0 and p >= 1");
    if (f.is_zero()) return 0.0;
    auto pieces = detail::packed_layout(f);
    double h = params.h;
    double value = detail::grid_dp_power(pieces, params.W, params.p, h);
    if (params.refine) {
        double total_len = f.support_measure();
        for (int iter = 0; iter < 12; ++iter) {
            if (total_len / (h * 0.5) > 4e6) break;  // state budget
            h *= 0.5;
            double refined = detail::grid_dp_power(pieces, params.W, params.p, h);
            double rel = std::fabs(refined - value) / std::max(refined, 1e-300);
            value = std::max(value, refined);
            if (rel < 1e-4) break;
        }
    }
    return std::pow(value, 1.0 / params.p);
}

/// Garling function norm rho_G(f) via the packing reduction:
///   rho_G(f)^p = sup over kept lengths l_j in [0, |I_j|] of
///                sum_j a_j^p (What(L_j) - What(L_{j-1})),  L_j = sum_{k<=j} l_k.
/// Nonincreasing step functions keep everything (identity packing), which is
/// exact; otherwise the grid DP lower bound is returned, never below the
/// identity-packing value.
inline double garling_function_norm(const StepFunction& f, const GNormParams& params) {
    if (!(params.h > 0.0) || !(params.p >= 1.0))
        throw std::invalid_argument("garling_function_norm: need h > 0 and p >= 1");
    if (f.is_zero()) return 0.0;
    auto pieces = detail::packed_layout(f);
    double identity = detail::identity_packing_power(pieces, params.W, params.p);
    if (detail::nonincreasing_values(pieces))
        return std::pow(identity, 1.0 / params.p);
    double grid = std::pow(garling_function_norm_grid(f, params), params.p);
    return std::pow(std::max(identity, grid), 1.0 / params.p);
}

/// Exact norm for f nondecreasing on its support (0, r]:
///   max over s in [0, r] of (int_0^s f(t+r-s)^p W(t) dt)^(1/p),
/// evaluated in closed form at piece-boundary alignments plus a dense scan,
/// with golden-section polish around the best candidate.
inline double garling_norm_monotone_fastpath(const StepFunction& f, const WeightFunction& W,
                                             double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("fastpath: need p >= 1");
    if (f.is_zero()) return 0.0;
    const auto& pieces = f.pieces();
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        if (pieces[i].value < pieces[i - 1].value - 1e-15)
            throw std::invalid_argument("fastpath: values must be nondecreasing");
        if (pieces[i].iv.lo > pieces[i - 1].iv.hi + kTol)
            throw std::invalid_argument("fastpath: support must be gap-free past its start");
    }
    const double r = f.sup_support();

    // int_0^s f(t + r - s)^p W(t) dt for step f, via What differences.
    auto objective = [&](double s) {
        double off = r - s;  // original coordinate = grid coordinate + off
        double total = 0.0;
        for (const auto& pc : pieces) {
            double a = std::max(0.0, pc.iv.lo - off);
            double b = std::min(s, pc.iv.hi - off);
            if (b > a) total += std::pow(pc.value, p) * (W.cumulative(b) - W.cumulative(a));
        }
        return total;
    };

    std::vector<double> candidates;
    candidates.push_back(0.0);
    candidates.push_back(r);
    for (const auto& pc : pieces) {
        for (double x : {pc.iv.lo, pc.iv.hi}) {
            double s = r - x;
            if (s > 0.0 && s < r) candidates.push_back(s);
        }
    }
    for (int i = 1; i < 1024; ++i) candidates.push_back(r * i / 1024.0);

    double best = 0.0, best_s = r;
    for (double s : candidates) {
        double v = objective(s);
        if (v > best) {
            best = v;
            best_s = s;
        }
    }
    // Golden-section polish in a bracket around the best candidate.
    double span = r / 1024.0;
    double lo = std::max(0.0, best_s - span), hi = std::min(r, best_s + span);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = objective(x1), f2 = objective(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-12 * std::max(1.0, r); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = objective(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = objective(x1);
        }
    }
    best = std::max(best, std::max(f1, f2));
    return std::pow(best, 1.0 / p);
}

/// Schreier-type norm rho_Y(f) = sup_{a >= 0} int_0^{sqrt(a)} (f 1_{[a,inf)})*(t) dt.
inline double schreier_y_norm(const StepFunction& f) {
    if (f.is_zero()) return 0.0;
    const double hi = f.sup_support();

    auto value_at = [&](double a) {
        if (a >= hi) return 0.0;
        StepFunction tail = a > 0.0 ? restrict_to(f, IntervalSet::single(a, hi)) : f;
        if (tail.is_zero()) return 0.0;
        double budget = std::sqrt(a);
        StepFunction dr = decreasing_rearrangement(tail);
        double total = 0.0;
        for (const auto& pc : dr.pieces()) {
            double b = std::min(budget, pc.iv.hi);
            if (b > pc.iv.lo) total += pc.value * (b - pc.iv.lo);
            if (pc.iv.hi >= budget) break;
        }
        return total;
    };

    std::vector<double> candidates{0.0};
    for (const auto& pc : f.pieces()) {
        candidates.push_back(pc.iv.lo);
        candidates.push_back(pc.iv.hi);
    }
    for (int i = 1; i < 1024; ++i) candidates.push_back(hi * i / 1024.0);

    double best = 0.0, best_a = 0.0;
    for (double a : candidates) {
        if (a < 0.0 || a > hi) continue;
        double v = value_at(a);
        if (v > best) {
            best = v;
            best_a = a;
        }
    }
    // One local golden-section refinement around the best candidate.
    double span = hi / 1024.0;
    double lo = std::max(0.0, best_a - span), up = std::min(hi, best_a + span);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = up - gr * (up - lo), x2 = lo + gr * (up - lo);
    double f1 = value_at(x1), f2 = value_at(x2);
    for (int it = 0; it < 80 && up - lo > 1e-12 * std::max(1.0, hi); ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (up - lo);
            f2 = value_at(x2);
        } else {
            up = x2;
            x2 = x1;
            f2 = f1;
            x1 = up - gr * (up - lo);
            f1 = value_at(x1);
        }
    }
    return std::max(best, std::max(f1, f2));
}

/// Reference rearrangement-invariant norm (sum a_j^p |I_j|)^(1/p).
inline double lp_norm(const StepFunction& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: need p >= 1");
    double total = 0.0;
    for (const auto& pc : f.pieces()) total += std::pow(pc.value, p) * pc.iv.length();
    return std::pow(total, 1.0 / p);
}

/// Independent oracle: split every piece into cells of length h, keep or drop
/// each cell, DP over the number of kept cells.  Piece lengths must be
/// h-multiples after snapping.
inline double cell_dp_oracle(const StepFunction& f, const WeightFunction& W, double p, double h) {
    if (!(h > 0.0) || !(p >= 1.0)) throw std::invalid_argument("cell_dp_oracle: bad parameters");
    if (f.is_zero()) return 0.0;
    std::vector<double> cell_vp;
    for (const auto& pc : f.pieces()) {
        double cells_exact = pc.iv.length() / h;
        std::size_t cells = static_cast<std::size_t>(std::llround(cells_exact));
        if (cells == 0 || std::fabs(cells_exact - static_cast<double>(cells)) > 1e-6)
            throw std::invalid_argument("cell_dp_oracle: piece length not an h-multiple");
        double vp = std::pow(pc.value, p);
        cell_vp.insert(cell_vp.end(), cells, vp);
    }
    const std::size_t n = cell_vp.size();
    if (static_cast<double>(n) * static_cast<double>(n) > 1e7)
        throw std::length_error("cell_dp_oracle: state count exceeds budget");
    std::vector<double> slot_weight(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        slot_weight[k] =
            W.cumulative(static_cast<double>(k) * h) - W.cumulative(static_cast<double>(k - 1) * h);
    std::vector<double> best(n + 1, -1.0);
    best[0] = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t k = c + 1; k >= 1; --k) {
            if (best[k - 1] < 0.0) continue;
            double cand = best[k - 1] + cell_vp[c] * slot_weight[k];
            if (cand > best[k]) best[k] = cand;
        }
    }
    double m = 0.0;
    for (double v : best) m = std::max(m, v);
    return std::pow(m, 1.0 / p);
}

}  // namespace normlab
