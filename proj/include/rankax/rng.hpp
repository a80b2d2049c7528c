#ifndef RANKAX_RNG_HPP
#define RANKAX_RNG_HPP

#include <cstdint>
#include <vector>

namespace rankax {

// SplitMix64. Chosen over <random> engines because its output stream is fully
// specified by the seed, so sampled walks are bit-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive.
    std::uint64_t next_in(std::uint64_t lo, std::uint64_t hi) {
        return lo + next_u64() % (hi - lo + 1);
    }

    // Index into a nonnegative weight vector, proportional to weight.
    // Returns weights.size() when the total weight is zero.
    std::size_t next_weighted(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (total <= 0.0) return weights.size();
        double x = next_double() * total;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            x -= weights[i];
            if (x < 0.0) return i;
        }
        return weights.size() - 1;
    }

    // Derives an independent stream; used to split one seed across batches.
    SplitMix64 split() { return SplitMix64(next_u64() ^ 0x5851f42d4c957f2dULL); }

private:
    std::uint64_t state_;
};

}  // namespace rankax

#endif
