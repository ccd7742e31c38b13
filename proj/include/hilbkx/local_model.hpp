#ifndef HILBKX_LOCAL_MODEL_HPP
#define HILBKX_LOCAL_MODEL_HPP

#include <hilbkx/errors.hpp>
#include <hilbkx/matrix.hpp>
#include <hilbkx/pfaffian.hpp>
#include <hilbkx/sampling.hpp>
#include <hilbkx/surface_data.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hilbkx {

/*
 * Skew-symmetric pencil B(z) = sum_i z_i A^(i), A^(i)_{jk} = a_{ijk}.
 *
 * Near the canonical divisors the local model is
 *
 *     Gamma = { (z, t) in C^p x C^q : B(z) t = 0 },
 *
 * and the projection xi: Gamma -> C^p has fiber ker B(z) over z.
 */
class SkewPencil {
public:
    SkewPencil() = default;

    explicit SkewPencil(std::size_t q, std::vector<RationalMatrix> slices) : q_(q), slices_(std::move(slices)) {
        for (const auto& s : slices_) {
            if (s.rows() != q_ || s.cols() != q_) throw DimensionMismatch("pencil slice must be q x q");
            if (!s.is_skew_symmetric()) throw std::invalid_argument("pencil slice is not skew-symmetric");
        }
    }

    std::size_t p() const { return slices_.size(); }
    std::size_t q() const { return q_; }
    const std::vector<RationalMatrix>& slices() const { return slices_; }

    RationalMatrix evaluate(const RationalVector& z) const {
        if (z.size() != p())
            throw DimensionMismatch("expected z with p=" + std::to_string(p()) + " coordinates, got " +
                                    std::to_string(z.size()));
        RationalMatrix b(q_, q_);
        for (std::size_t i = 0; i < p(); ++i) {
            if (z[i] == 0) continue;
            for (std::size_t j = 0; j < q_; ++j)
                for (std::size_t k = j + 1; k < q_; ++k) {
                    const auto& a = slices_[i](j, k);
                    if (a != 0) {
                        b(j, k) += z[i] * a;
                        b(k, j) -= z[i] * a;
                    }
                }
        }
        return b;
    }

private:
    std::size_t q_ = 0;
    std::vector<RationalMatrix> slices_;
};

inline SkewPencil build_pencil(const CupTensor& tensor) {
    std::vector<RationalMatrix> slices;
    slices.reserve(tensor.p());
    for (std::size_t i = 0; i < tensor.p(); ++i) {
        RationalMatrix a(tensor.q(), tensor.q());
        for (std::size_t j = 0; j < tensor.q(); ++j)
            for (std::size_t k = 0; k < tensor.q(); ++k) a(j, k) = tensor.at(i, j, k);
        slices.push_back(std::move(a));
    }
    return SkewPencil(tensor.q(), std::move(slices));
}

inline RationalMatrix evaluate_pencil(const SkewPencil& pencil, const RationalVector& z) { return pencil.evaluate(z); }

// dim xi^{-1}(z) = q - rank B(z).
inline std::size_t fiber_dimension(const SkewPencil& pencil, const RationalVector& z) {
    return pencil.q() - rank(pencil.evaluate(z));
}

// Pfaffian-minor rank of B(z); independent of elimination.
inline std::size_t pencil_pfaffian_rank(const SkewPencil& pencil, const RationalVector& z) {
    return pfaffian_rank(pencil.evaluate(z));
}

struct GammaModel {
    SkewPencil pencil;

    std::size_t equation_count() const { return pencil.q(); }

    // j-th defining equation evaluated at (z, t): (B(z) t)_j.
    RationalVector equations(const RationalVector& z, const RationalVector& t) const {
        if (t.size() != pencil.q())
            throw DimensionMismatch("expected t with q=" + std::to_string(pencil.q()) + " coordinates, got " +
                                    std::to_string(t.size()));
        return pencil.evaluate(z).apply(t);
    }
};

inline bool gamma_membership(const GammaModel& model, const RationalVector& z, const RationalVector& t) {
    return is_zero_vector(model.equations(z, t));
}

struct GenericRank {
    std::size_t rank = 0;
    RationalVector witness_z;
    SampleMetadata trials;
    // Sampling over a finite box proves only that the generic rank is at
    // least this value.
    static constexpr const char* semantics = "certified lower bound on generic rank";
};

namespace detail {

inline std::size_t checked_even_rank(const RationalMatrix& b) {
    const auto r = rank(b);
    if (r % 2) throw ParityFailure("skew-symmetric matrix with odd rank " + std::to_string(r));
    return r;
}

}  // namespace detail

// Maximum of rank B(z) over the sampled z, with the first sample attaining
// it. Every sampled rank is checked to be even. Sampling stops early once
// the largest possible even rank 2*floor(q/2) is reached, which cannot
// change the first maximiser.
inline GenericRank generic_rank(const SkewPencil& pencil,
                                const SamplingPolicy& sampler = SamplingPolicy::staged()) {
    sampler.check();
    if (pencil.p() == 0) throw HypothesisViolated("generic rank needs p >= 1: there is no nonzero z");
    const std::size_t ceiling = 2 * (pencil.q() / 2);
    GenericRank out;
    bool first = true;
    std::size_t drawn = 0;
    for (std::size_t s = 0; s < sampler.total(); ++s) {
        auto z = sampler.point(pencil.p(), s);
        ++drawn;
        const auto r = detail::checked_even_rank(pencil.evaluate(z));
        if (first || r > out.rank) {
            out.rank = r;
            out.witness_z = std::move(z);
            first = false;
        }
        if (out.rank == ceiling) break;
    }
    out.trials = metadata_for(sampler, drawn);
    return out;
}

// Smooth point of M = Hilb^{k_X} found at a generic z: the fiber of xi
// there is a vector space of minimal dimension q - rank, so the pair space
// has dimension p + fiber_dim at the witness and M (a free C* quotient) one
// less.
struct WitnessReport {
    RationalVector witness_z;
    long long rank = 0;
    long long fiber_dim = 0;
    long long dim_M_tilde = 0;
    long long dim_M = 0;
    long long chi = 0;
    bool parity_ok = false;
    SampleMetadata trials;
};

inline WitnessReport find_smooth_witness(const SkewPencil& pencil,
                                         const SamplingPolicy& sampler = SamplingPolicy::staged()) {
    auto g = generic_rank(pencil, sampler);
    const auto p = static_cast<long long>(pencil.p()), q = static_cast<long long>(pencil.q());
    WitnessReport w;
    w.witness_z = std::move(g.witness_z);
    w.rank = static_cast<long long>(g.rank);
    w.fiber_dim = q - w.rank;
    w.dim_M_tilde = p + w.fiber_dim;
    w.dim_M = w.dim_M_tilde - 1;
    w.chi = 1 - q + p;
    w.parity_ok = ((w.dim_M - w.chi) % 2) == 0;
    w.trials = g.trials;
    return w;
}

}  // namespace hilbkx

#endif  // HILBKX_LOCAL_MODEL_HPP
