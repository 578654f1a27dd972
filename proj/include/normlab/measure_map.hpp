#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "normlab/interval_set.hpp"
#include "normlab/step_function.hpp"

namespace normlab {

/// Piecewise-shift MO-isomorphism: each source interval maps t -> t + shift.
/// Segments partition the domain; images are pairwise disjoint and ascending.
class PackingMap {
public:
    struct Segment {
        Interval src;
        double shift;
    };

    PackingMap() = default;
    explicit PackingMap(std::vector<Segment> segments) : segments_(std::move(segments)) {
        std::sort(segments_.begin(), segments_.end(),
                  [](const Segment& a, const Segment& b) { return a.src.lo < b.src.lo; });
    }

    const std::vector<Segment>& segments() const { return segments_; }

    IntervalSet domain() const {
        std::vector<Interval> parts;
        for (const Segment& s : segments_) parts.push_back(s.src);
        return IntervalSet(std::move(parts));
    }

    IntervalSet image() const {
        std::vector<Interval> parts;
        for (const Segment& s : segments_)
            parts.emplace_back(s.src.lo + s.shift, s.src.hi + s.shift);
        return IntervalSet(std::move(parts));
    }

    double operator()(double t) const {
        for (const Segment& s : segments_)
            if (s.src.contains(t)) return t + s.shift;
        throw std::domain_error("PackingMap: point outside domain");
    }

    /// Debug dump, one `src_lo src_hi shift` line per segment.
    std::string dump() const {
        std::string out;
        char buf[128];
        for (const Segment& s : segments_) {
            std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", s.src.lo, s.src.hi, s.shift);
            out += buf;
        }
        return out;
    }

private:
    std::vector<Segment> segments_;
};

/// lambda((-inf, x] intersect E); nondecreasing and Lipschitz-1 in x.
inline double cumulative_measure(const IntervalSet& E, double x) {
    if (x < 0.0) throw std::invalid_argument("cumulative_measure: x must be >= 0");
    double m = 0.0;
    for (const Interval& iv : E.parts()) {
        if (x <= iv.lo) break;
        m += std::min(x, iv.hi) - iv.lo;
    }
    return m;
}

/// Initial segment E_t of E with measure exactly t (preimage of [0, t] under
/// the cumulative measure).
inline IntervalSet initial_segment(const IntervalSet& E, double t) {
    double total = E.measure();
    if (t < -kTol || t > total + kTol)
        throw std::out_of_range("initial_segment: t outside [0, measure(E)]");
    t = std::clamp(t, 0.0, total);
    std::vector<Interval> parts;
    double remaining = t;
    for (const Interval& iv : E.parts()) {
        if (remaining <= 0.0) break;
        double take = std::min(remaining, iv.length());
        parts.emplace_back(iv.lo, iv.lo + take);
        remaining -= take;
    }
    return IntervalSet(std::move(parts));
}

/// Canonical MO-isomorphism (0, lambda(F)] -> F, gluing left-to-right shifts.
/// Satisfies t <= m(t) on its whole domain.
inline PackingMap packing_map(const IntervalSet& F) {
    if (F.empty()) throw std::invalid_argument("packing_map: empty set");
    std::vector<PackingMap::Segment> segs;
    double packed = 0.0;
    for (const Interval& iv : F.parts()) {
        double len = iv.length();
        segs.push_back({Interval(packed, packed + len), iv.lo - packed});
        packed += len;
    }
    return PackingMap(std::move(segs));
}

/// f composed with m, piece by piece, on domain(m).
inline StepFunction pushforward_compose(const StepFunction& f, const PackingMap& m) {
    std::vector<std::tuple<double, double, double>> raw;
    for (const auto& seg : m.segments()) {
        Interval img(seg.src.lo + seg.shift, seg.src.hi + seg.shift);
        for (const auto& pc : f.pieces()) {
            double lo = std::max(pc.iv.lo, img.lo);
            double hi = std::min(pc.iv.hi, img.hi);
            if (lo < hi) raw.emplace_back(lo - seg.shift, hi - seg.shift, pc.value);
        }
    }
    return StepFunction::make(raw);
}

/// Check that m is strictly increasing across segment boundaries and that
/// preimages of the probe intervals preserve measure to 1e-9.
inline bool verify_mo(const PackingMap& m, const std::vector<Interval>& probes) {
    const auto& segs = m.segments();
    for (std::size_t i = 1; i < segs.size(); ++i) {
        if (segs[i - 1].src.hi > segs[i].src.lo + kTol) return false;  // domain overlap
        double prev_img_hi = segs[i - 1].src.hi + segs[i - 1].shift;
        double next_img_lo = segs[i].src.lo + segs[i].shift;
        if (prev_img_hi > next_img_lo + kTol) return false;
    }
    for (const Interval& probe : probes) {
        double preimage_len = 0.0;
        for (const auto& seg : segs) {
            double lo = std::max(seg.src.lo, probe.lo - seg.shift);
            double hi = std::min(seg.src.hi, probe.hi - seg.shift);
            if (lo < hi) preimage_len += hi - lo;
        }
        if (std::fabs(preimage_len - probe.length()) > kTol) return false;
    }
    return true;
}

}  // namespace normlab
