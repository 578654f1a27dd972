#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "normlab/interval_set.hpp"
#include "normlab/step_function.hpp"

namespace normlab {

/// Deterministic, platform-independent RNG (splitmix64).  Used so that CSV
/// output is byte-identical across runs with the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Random step function with endpoints on the dyadic grid `grid` (so that
/// lengths are exactly representable and h-aligned for the DP oracles).
inline StepFunction random_step_function(Rng& rng, int max_pieces = 6, double grid = 1.0 / 64.0,
                                         int max_cells_per_piece = 64) {
    int n = static_cast<int>(rng.uniform_int(1, max_pieces));
    std::vector<std::tuple<double, double, double>> raw;
    double cursor = grid * static_cast<double>(rng.uniform_int(0, 8));
    for (int i = 0; i < n; ++i) {
        double len = grid * static_cast<double>(rng.uniform_int(1, max_cells_per_piece));
        double value = rng.uniform(0.05, 10.0);
        raw.emplace_back(cursor, cursor + len, value);
        cursor += len + grid * static_cast<double>(rng.uniform_int(0, 8));
    }
    return StepFunction::make(raw);
}

inline IntervalSet random_interval_set(Rng& rng, int max_parts = 5, double grid = 1.0 / 64.0,
                                       int max_cells_per_part = 64) {
    int n = static_cast<int>(rng.uniform_int(1, max_parts));
    std::vector<Interval> parts;
    double cursor = grid * static_cast<double>(rng.uniform_int(0, 8));
    for (int i = 0; i < n; ++i) {
        double len = grid * static_cast<double>(rng.uniform_int(1, max_cells_per_part));
        parts.emplace_back(cursor, cursor + len);
        cursor += len + grid * static_cast<double>(rng.uniform_int(1, 8));
    }
    return IntervalSet(std::move(parts));
}

inline std::vector<double> random_sequence(Rng& rng, int max_len = 12, double zero_prob = 0.2) {
    int n = static_cast<int>(rng.uniform_int(1, max_len));
    std::vector<double> f(n);
    for (double& v : f) v = rng.uniform() < zero_prob ? 0.0 : rng.uniform(-5.0, 5.0);
    return f;
}

}  // namespace normlab
