#ifndef HILBKX_RANDOM_HPP
#define HILBKX_RANDOM_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>

namespace hilbkx {

// splitmix64 finaliser; used to derive independent per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = mix64(seed);
    for (auto p : path) h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
    return h;
}

// Deterministic generator. mt19937_64 is fully specified by the standard;
// the range reductions below are hand-written so that draws do not depend on
// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % n;
    }

    // Uniform on [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw std::invalid_argument("empty range");
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // True with probability num/den.
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        if (num >= den) return true;
        if (num == 0) return false;
        return below(den) < num;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hilbkx

#endif  // HILBKX_RANDOM_HPP
