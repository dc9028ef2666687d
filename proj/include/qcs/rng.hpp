#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qcs::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Pure function of (base, indices): sampling cells can run in any order, on
// any number of threads, without changing the draws of any other cell.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> indices) {
    std::uint64_t state = base;
    std::uint64_t h = splitmix64(state);
    for (std::uint64_t ix : indices) {
        state ^= h ^ (ix + 0x9e3779b97f4a7c15ull);
        h = splitmix64(state);
    }
    return h;
}

// mt19937_64 is fully specified by the standard; uniform doubles are built
// from the raw 64-bit output so no distribution object enters the picture.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace qcs::rng
