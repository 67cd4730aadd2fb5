#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>

namespace pseudochar::verify {

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seedable generator: std::mt19937_64 plus a portable bounded draw.
///
/// std::uniform_int_distribution is implementation-defined, so bounded
/// integers are drawn by rejection sampling on the raw 64-bit output. Given the
/// same seed the sequence is identical on every platform.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Stream for trial `trial` of a run seeded with `seed`; independent of
    /// how many values other trials consume.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(splitmix64(seed ^ splitmix64(trial + 0x51ed270b27a5d1ULL)));
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi]; requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == UINT64_MAX) return static_cast<std::int64_t>(next());
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t r;
        do r = next();
        while (r >= limit);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % range);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

    template <class It>
    void shuffle(It first, It last) {
        for (auto n = last - first; n > 1; --n) std::iter_swap(first + (n - 1), first + index(static_cast<std::size_t>(n)));
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace pseudochar::verify
