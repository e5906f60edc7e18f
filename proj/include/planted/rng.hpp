#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace planted::rng {

// Stream derivation and sampling are pinned so that equal (seed, tag, index)
// produce identical draws on every platform:
//   * the engine is std::mt19937_64, whose output sequence is fixed by the
//     C++ standard,
//   * its seed is splitmix64(seed ^ fnv1a64(tag) ^ index * 0x9E3779B97F4A7C15),
//   * unit doubles are (x >> 11) * 2^-53,
//   * bounded integers use rejection sampling (never modulo bias),
//   * bernoulli(p) consumes exactly one unit double.
// gaussian() goes through libm (Box-Muller) and is deterministic per platform
// but not bit-portable across libms; nothing serialized depends on it.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z += kGoldenGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

class Stream {
public:
    explicit Stream(std::uint64_t seed, std::string_view tag = {}, std::uint64_t index = 0)
        : engine_(splitmix64(seed ^ fnv1a64(tag) ^ (index * kGoldenGamma))) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform in [0, m); m = 0 is invalid.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % m + 1) % m;
        std::uint64_t x = next_u64();
        while (x > limit) x = next_u64();
        return x % m;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace planted::rng
