#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace evac {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Seeded random stream. Distribution mappings are implemented here (not via
// std:: distributions) so that draw counts and values are reproducible:
// normal() always consumes exactly two raw draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(splitmix64(seed)), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Independent child stream identified by a tag, e.g. derive("fire").
    Rng derive(std::string_view tag) const
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (const char c : tag) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(splitmix64(seed_ ^ h));
    }

    Rng derive(std::uint64_t n) const { return Rng(splitmix64(seed_ + 0x51ED2701ULL * (n + 1))); }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in {0, ..., n-1}.
    int uniform_int(int n) { return static_cast<int>(uniform01() * n); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; consumes exactly two raw draws per call.
    double normal(double mean, double sd)
    {
        const double u1 = 1.0 - uniform01();
        const double u2 = uniform01();
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        return mean + sd * z;
    }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace evac
