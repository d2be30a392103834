#pragma once

#include <cstdint>
#include <random>

namespace questa {

// Independent, reproducible RNG streams are derived from one master seed so that
// thread scheduling can never change results: every unit of work (an individual,
// a generation, an expressivity evaluation) owns a stream keyed by integers.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

enum class RngStream : std::uint64_t {
    Sample = 1,
    Expressivity = 2,
    FocusInit = 3,
    Evolve = 4,
    Ablation = 5,
    TaskData = 6,
};

inline std::uint64_t derive_seed(std::uint64_t master, RngStream stream,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t s = splitmix64(master ^ 0x6a09e667f3bcc908ULL);
    s = splitmix64(s ^ static_cast<std::uint64_t>(stream));
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    return s;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace questa
