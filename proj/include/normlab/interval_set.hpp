#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace normlab {

/// Absolute tolerance used for endpoint/value comparisons throughout.
inline constexpr double kTol = 1e-9;

/// Bounded half-open interval (lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo >= 0.0) || !std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
            throw std::invalid_argument("Interval: need 0 <= lo < hi, both finite");
    }

    double length() const { return hi - lo; }
    bool contains(double x) const { return x > lo && x <= hi; }
};

/// Finite union of disjoint half-open intervals, kept sorted and merged.
class IntervalSet {
public:
    IntervalSet() = default;

    explicit IntervalSet(std::vector<Interval> parts) {
        std::sort(parts.begin(), parts.end(),
                  [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
        for (const Interval& iv : parts) {
            if (!parts_.empty() && iv.lo <= parts_.back().hi + kTol) {
                parts_.back().hi = std::max(parts_.back().hi, iv.hi);
            } else {
                parts_.push_back(iv);
            }
        }
    }

    static IntervalSet single(double lo, double hi) {
        return IntervalSet(std::vector<Interval>{Interval(lo, hi)});
    }

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    double measure() const {
        double m = 0.0;
        for (const Interval& iv : parts_) m += iv.length();
        return m;
    }

    double sup() const { return parts_.empty() ? 0.0 : parts_.back().hi; }
    double inf() const { return parts_.empty() ? 0.0 : parts_.front().lo; }

    bool contains(double x) const {
        for (const Interval& iv : parts_)
            if (iv.contains(x)) return true;
        return false;
    }

    IntervalSet intersect(const Interval& window) const {
        std::vector<Interval> out;
        for (const Interval& iv : parts_) {
            double lo = std::max(iv.lo, window.lo);
            double hi = std::min(iv.hi, window.hi);
            if (lo < hi) out.emplace_back(lo, hi);
        }
        return IntervalSet(std::move(out));
    }

    IntervalSet intersect(const IntervalSet& other) const {
        std::vector<Interval> out;
        for (const Interval& w : other.parts_) {
            IntervalSet piece = intersect(w);
            out.insert(out.end(), piece.parts_.begin(), piece.parts_.end());
        }
        return IntervalSet(std::move(out));
    }

private:
    std::vector<Interval> parts_;
};

}  // namespace normlab
