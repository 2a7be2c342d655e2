#pragma once

#include <cstdint>
#include <random>

namespace coalg {

/// Seeded draws that are identical on every standard library: the engine
/// output is fixed by the standard, the reductions below are ours.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    /// Index in [0, n).
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
};

}  // namespace coalg
