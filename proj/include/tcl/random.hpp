#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tcl {

// splitmix64 finalizer; derives independent per-trial / per-worker seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Seeded generator whose outputs are identical on every platform: std::mt19937_64
// is fully specified, and the helpers below avoid the implementation-defined
// std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace tcl
