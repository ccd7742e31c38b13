#ifndef HILBKX_SAMPLING_HPP
#define HILBKX_SAMPLING_HPP

#include <hilbkx/random.hpp>
#include <hilbkx/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hilbkx {

// How generic points are sampled: `trials` integer vectors per stage, stage
// s drawing coordinates uniformly from [-bounds[s], bounds[s]]. The zero
// vector is never returned. Trial (s, n) is seeded from (seed, s, n) alone,
// so results do not depend on evaluation order.
struct SamplingPolicy {
    std::size_t trials = 8;
    std::vector<std::int64_t> bounds{1000};
    std::uint64_t seed = 0;

    // Generic-point default for the deformation complex.
    static SamplingPolicy single_box(std::size_t trials = 8, std::uint64_t seed = 0) {
        return {trials, {1000}, seed};
    }

    // Staged escalation used for the smooth-witness search.
    static SamplingPolicy staged(std::size_t trials = 8, std::uint64_t seed = 0) {
        return {trials, {10, 100, 1000}, seed};
    }

    void check() const {
        if (trials == 0) throw std::invalid_argument("sampling policy needs at least one trial");
        if (bounds.empty()) throw std::invalid_argument("sampling policy needs at least one stage");
        for (auto b : bounds)
            if (b < 1) throw std::invalid_argument("sampling bound must be positive");
    }

    std::size_t total() const { return trials * bounds.size(); }

    // Nonzero integer vector of length `dim` for trial `index` (stage-major).
    // Requires dim >= 1.
    RationalVector point(std::size_t dim, std::size_t index) const {
        const std::size_t stage = index / trials;
        const auto bound = bounds.at(stage);
        Rng rng(derive_seed(seed, {stage, index % trials, dim}));
        RationalVector v(dim);
        do {
            for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(-bound, bound)));
        } while (is_zero_vector(v));
        return v;
    }
};

// Metadata attached to every sampled result.
struct SampleMetadata {
    std::size_t trials_per_stage = 0;
    std::vector<std::int64_t> bounds;
    std::uint64_t seed = 0;
    std::size_t samples_drawn = 0;
};

inline SampleMetadata metadata_for(const SamplingPolicy& s, std::size_t drawn) {
    return {s.trials, s.bounds, s.seed, drawn};
}

}  // namespace hilbkx

#endif  // HILBKX_SAMPLING_HPP
