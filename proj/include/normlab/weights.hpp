#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace normlab {

namespace detail {

/// Adaptive Simpson quadrature on [a, b] with absolute tolerance.
inline double simpson_rec(const std::function<double(double)>& g, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = g(lm), frm = g(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(g, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           simpson_rec(g, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& g, double a, double b,
                               double tol = 1e-10) {
    if (b <= a) return 0.0;
    double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(g, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace detail

/// Nonincreasing positive weight W on (0, infinity) with cumulative
/// What(x) = int_0^x W.  The built-in power family W(t) = (t+1)^(-alpha),
/// 0 < alpha <= 1, has a closed-form cumulative; arbitrary weights fall back
/// to adaptive Simpson quadrature.
class WeightFunction {
public:
    static WeightFunction power(double alpha) {
        if (!(alpha > 0.0) || alpha > 1.0)
            throw std::invalid_argument("WeightFunction::power: need 0 < alpha <= 1");
        WeightFunction w;
        w.alpha_ = alpha;
        return w;
    }

    /// Weight from a callable; cumulative is computed by quadrature.
    /// Membership in the weight class is spot-checked on a sample grid.
    static WeightFunction custom(std::function<double(double)> fn) {
        WeightFunction w;
        w.fn_ = std::move(fn);
        w.validate();
        return w;
    }

    double operator()(double t) const {
        if (fn_) return fn_(t);
        return std::pow(t + 1.0, -alpha_);
    }

    /// What(x) = int_0^x W(t) dt.
    double cumulative(double x) const {
        if (x < 0.0) throw std::out_of_range("weight_cumulative: x must be >= 0");
        if (x == 0.0) return 0.0;
        if (fn_) return detail::adaptive_simpson(fn_, 0.0, x);
        if (std::fabs(alpha_ - 1.0) < 1e-12) return std::log1p(x);
        return (std::pow(x + 1.0, 1.0 - alpha_) - 1.0) / (1.0 - alpha_);
    }

    /// K = What(1).
    double normalizer() const { return cumulative(1.0); }

private:
    void validate() const {
        const auto& W = *this;
        double prev = W(1.0 / 1024.0);
        if (!(prev > 0.0)) throw std::invalid_argument("weight: W must be positive");
        for (int i = -10; i <= 20; ++i) {
            double t = std::pow(2.0, i);
            double v = W(t);
            if (!(v > 0.0)) throw std::invalid_argument("weight: W must be positive");
            if (v > prev + kWeightSlack)
                throw std::invalid_argument("weight: W must be nonincreasing");
            prev = v;
        }
        if (W(1 << 20) > 0.25 * W(1.0))
            throw std::invalid_argument("weight: (W1) W(t) -> 0 fails on sample");
        if (cumulative(1 << 20) < 8.0 * cumulative(1.0))
            throw std::invalid_argument("weight: (W2) unbounded cumulative fails on sample");
        if (!std::isfinite(cumulative(1.0)))
            throw std::invalid_argument("weight: (W3) What(1) must be finite");
    }

    static constexpr double kWeightSlack = 1e-12;

    double alpha_ = 0.5;
    std::function<double(double)> fn_;
};

inline double weight_cumulative(const WeightFunction& W, double x) { return W.cumulative(x); }

/// Nonincreasing positive sequence weights w(1) >= w(2) >= ... > 0 together
/// with the exponent p; lazily extendable when built from a rule.
class SequenceWeights {
public:
    SequenceWeights(std::vector<double> w, double p) : w_(std::move(w)), p_(p) { check(); }

    SequenceWeights(std::function<double(std::size_t)> rule, std::size_t initial, double p)
        : rule_(std::move(rule)), p_(p) {
        for (std::size_t k = 1; k <= initial; ++k) w_.push_back(rule_(k));
        check();
    }

    /// w(k) = k^(-alpha); the classical Garling weight family.
    static SequenceWeights power(double alpha, double p, std::size_t initial = 32) {
        if (!(alpha > 0.0) || alpha > 1.0)
            throw std::invalid_argument("SequenceWeights::power: need 0 < alpha <= 1");
        return SequenceWeights(
            [alpha](std::size_t k) { return std::pow(static_cast<double>(k), -alpha); }, initial,
            p);
    }

    double p() const { return p_; }
    std::size_t available() const { return w_.size(); }

    /// 1-based access; extends from the rule when one is present.
    double at(std::size_t k) const {
        if (k == 0) throw std::out_of_range("SequenceWeights: indices are 1-based");
        while (k > w_.size()) {
            if (!rule_) throw std::out_of_range("SequenceWeights: not enough weights");
            w_.push_back(rule_(w_.size() + 1));
        }
        return w_[k - 1];
    }

private:
    void check() const {
        if (!(p_ >= 1.0)) throw std::invalid_argument("SequenceWeights: need p >= 1");
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (!(w_[i] > 0.0)) throw std::invalid_argument("SequenceWeights: weights must be positive");
            if (i > 0 && w_[i] > w_[i - 1] + 1e-12)
                throw std::invalid_argument("SequenceWeights: weights must be nonincreasing");
        }
    }

    mutable std::vector<double> w_;
    std::function<double(std::size_t)> rule_;
    double p_ = 1.0;
};

/// w(i) = (What(i) - What(i-1)) / What(1); w(1) = 1 and w nonincreasing.
inline SequenceWeights weights_from_W(const WeightFunction& W, std::size_t n, double p = 1.0) {
    if (n < 1) throw std::invalid_argument("weights_from_W: need n >= 1");
    double K = W.cumulative(1.0);
    std::vector<double> w(n);
    double prev = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        double cur = W.cumulative(static_cast<double>(i));
        w[i - 1] = (cur - prev) / K;
        prev = cur;
    }
    return SequenceWeights(std::move(w), p);
}

}  // namespace normlab
