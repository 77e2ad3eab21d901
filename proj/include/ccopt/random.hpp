#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ccopt {

/// Deterministic pseudo-random stream behind every stochastic operator.
/// The mt19937_64 sequence is fixed by the standard and all conversions
/// below are hand-rolled, so identical seeds produce identical streams on
/// every platform. One instance per run; never shared between runs.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double next_symmetric() { return 2.0 * next_double() - 1.0; }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t next_index(std::size_t n) {
        std::size_t i = static_cast<std::size_t>(next_double() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    std::mt19937_64 gen_;
};

/// FNV-1a over bytes; building block for seed derivation.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// splitmix64 finalizer; scrambles a hash into a well-mixed 64-bit value.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace ccopt
