#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "normlab/interval_set.hpp"

namespace normlab {

/// Piecewise-constant distribution function s -> measure{|f| > s}.
/// Stored as breakpoints (threshold, measure-above), nonincreasing and
/// right-continuous in s.
class DistributionFunction {
public:
    struct Step {
        double threshold;
        double measure_above;
    };

    DistributionFunction() = default;
    explicit DistributionFunction(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const { return steps_; }

    double operator()(double s) const {
        if (s < 0.0) throw std::invalid_argument("distribution: s must be >= 0");
        double m = 0.0;
        for (const Step& st : steps_) {
            if (st.threshold <= s)
                m = st.measure_above;
            else
                break;
        }
        return m;
    }

private:
    std::vector<Step> steps_;  // thresholds strictly increasing, first is 0
};

/// Nonnegative compactly supported step function on (0, infinity).
/// Canonical form: pieces sorted, disjoint, positive values, adjacent
/// equal-valued pieces merged.
class StepFunction {
public:
    struct Piece {
        Interval iv;
        double value;
    };

    StepFunction() = default;

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_zero() const { return pieces_.empty(); }

    IntervalSet support() const {
        std::vector<Interval> parts;
        parts.reserve(pieces_.size());
        for (const Piece& pc : pieces_) parts.push_back(pc.iv);
        return IntervalSet(std::move(parts));
    }

    double support_measure() const {
        double m = 0.0;
        for (const Piece& pc : pieces_) m += pc.iv.length();
        return m;
    }

    double sup_support() const { return pieces_.empty() ? 0.0 : pieces_.back().iv.hi; }

    double max_value() const {
        double m = 0.0;
        for (const Piece& pc : pieces_) m = std::max(m, pc.value);
        return m;
    }

    /// Value at a point (0 off the support).
    double operator()(double x) const {
        for (const Piece& pc : pieces_)
            if (pc.iv.contains(x)) return pc.value;
        return 0.0;
    }

    double integral() const {
        double s = 0.0;
        for (const Piece& pc : pieces_) s += pc.value * pc.iv.length();
        return s;
    }

    StepFunction scaled(double c) const {
        if (c < 0.0) throw std::invalid_argument("scaled: factor must be >= 0");
        std::vector<std::tuple<double, double, double>> raw;
        for (const Piece& pc : pieces_) raw.emplace_back(pc.iv.lo, pc.iv.hi, c * pc.value);
        return make(raw);
    }

    /// Canonical construction from unsorted (lo, hi, value) triples.
    static StepFunction make(const std::vector<std::tuple<double, double, double>>& raw) {
        std::vector<Piece> pieces;
        for (const auto& [lo, hi, v] : raw) {
            if (v < 0.0) throw std::invalid_argument("make_step_function: negative value");
            if (v == 0.0) continue;
            pieces.push_back({Interval(lo, hi), v});
        }
        std::sort(pieces.begin(), pieces.end(),
                  [](const Piece& a, const Piece& b) { return a.iv.lo < b.iv.lo; });
        StepFunction f;
        for (const Piece& pc : pieces) {
            if (f.pieces_.empty()) {
                f.pieces_.push_back(pc);
                continue;
            }
            Piece& prev = f.pieces_.back();
            bool same_value = std::fabs(pc.value - prev.value) <= kTol;
            if (pc.iv.lo < prev.iv.hi - kTol) {
                if (!same_value)
                    throw std::invalid_argument(
                        "make_step_function: overlapping pieces with conflicting values");
                prev.iv.hi = std::max(prev.iv.hi, pc.iv.hi);
            } else if (same_value && pc.iv.lo <= prev.iv.hi + kTol) {
                prev.iv.hi = std::max(prev.iv.hi, pc.iv.hi);
            } else {
                Piece adj = pc;
                if (adj.iv.lo < prev.iv.hi) adj.iv.lo = prev.iv.hi;
                f.pieces_.push_back(adj);
            }
        }
        return f;
    }

    static StepFunction indicator(double lo, double hi) { return make({{lo, hi, 1.0}}); }

private:
    std::vector<Piece> pieces_;
};

/// f * 1_F in canonical form.
inline StepFunction restrict_to(const StepFunction& f, const IntervalSet& F) {
    std::vector<std::tuple<double, double, double>> raw;
    for (const auto& pc : f.pieces()) {
        IntervalSet cut = F.intersect(pc.iv);
        for (const Interval& iv : cut.parts()) raw.emplace_back(iv.lo, iv.hi, pc.value);
    }
    return StepFunction::make(raw);
}

/// Aggregated (value, total length) pairs, values strictly decreasing.
inline std::vector<std::pair<double, double>> value_length_profile(const StepFunction& f) {
    std::vector<std::pair<double, double>> items;
    for (const auto& pc : f.pieces()) items.emplace_back(pc.value, pc.iv.length());
    std::sort(items.begin(), items.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::pair<double, double>> out;
    for (const auto& [v, len] : items) {
        if (!out.empty() && std::fabs(out.back().first - v) <= kTol)
            out.back().second += len;
        else
            out.emplace_back(v, len);
    }
    return out;
}

inline DistributionFunction distribution(const StepFunction& f) {
    auto profile = value_length_profile(f);  // values decreasing
    std::vector<DistributionFunction::Step> steps;
    double above = 0.0;
    // Walk values from largest down, accumulating measure strictly above each.
    std::vector<DistributionFunction::Step> rev;
    for (const auto& [v, len] : profile) {
        rev.push_back({v, above});
        above += len;
    }
    steps.push_back({0.0, above});  // total support measure for s in [0, v_min)
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) steps.push_back(*it);
    // Deduplicate a possible 0-threshold collision (zero function).
    if (steps.size() >= 2 && steps[1].threshold <= 0.0) steps.erase(steps.begin());
    return DistributionFunction(std::move(steps));
}

/// Nonincreasing layout of f on (0, support measure], equimeasurable with f.
inline StepFunction decreasing_rearrangement(const StepFunction& f) {
    auto profile = value_length_profile(f);
    std::vector<std::tuple<double, double, double>> raw;
    double pos = 0.0;
    for (const auto& [v, len] : profile) {
        raw.emplace_back(pos, pos + len, v);
        pos += len;
    }
    return StepFunction::make(raw);
}

/// True iff f and g share the same (value, total length) profile within tol.
inline bool equimeasurable(const StepFunction& f, const StepFunction& g, double tol = kTol) {
    if (tol < 0.0) throw std::invalid_argument("equimeasurable: tol must be >= 0");
    auto pf = value_length_profile(f);
    auto pg = value_length_profile(g);
    if (pf.size() != pg.size()) return false;
    for (std::size_t i = 0; i < pf.size(); ++i) {
        if (std::fabs(pf[i].first - pg[i].first) > tol) return false;
        if (std::fabs(pf[i].second - pg[i].second) > tol) return false;
    }
    return true;
}

}  // namespace normlab
