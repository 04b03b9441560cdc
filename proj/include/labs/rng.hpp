#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace labs {

/// splitmix64 finalizer. Used to spread structured seed material over the
/// full 64-bit space before it reaches an engine.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Per-run seed for one experiment cell. Depends only on the master seed and
/// the cell coordinates, so runs reproduce regardless of execution order or
/// thread count.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view variant_id,
                                 std::string_view mode_id, std::uint64_t run_index) {
    std::uint64_t h = fnv1a64(variant_id);
    h = splitmix64(h ^ fnv1a64(mode_id));
    h = splitmix64(h ^ run_index);
    return splitmix64(h ^ splitmix64(master_seed));
}

/// mt19937_64 with hand-rolled draw helpers. The standard <random>
/// distributions are implementation-defined; these are not, so a seeded
/// stream reproduces bit-for-bit on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform integer in [0, n). Rejection sampling, bias-free.
    std::size_t below(std::size_t n) {
        assert(n > 0);
        const std::uint64_t bound = n;
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return static_cast<std::size_t>(x % bound);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace labs
