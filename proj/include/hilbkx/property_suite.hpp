#ifndef HILBKX_PROPERTY_SUITE_HPP
#define HILBKX_PROPERTY_SUITE_HPP

#include <hilbkx/gl_complex.hpp>
#include <hilbkx/local_model.hpp>
#include <hilbkx/pfaffian.hpp>
#include <hilbkx/random.hpp>
#include <hilbkx/sampling.hpp>
#include <hilbkx/surface_data.hpp>
#include <hilbkx/virtual_degree.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace hilbkx {

// Random-instance driver for the invariants of every module. Instances are
// generated from (seed, instance-index) alone and checked in index order;
// the run stops at the first failing instance, which is therefore the
// smallest reproducing index.
struct RandomCheckConfig {
    std::size_t p_max = 6;
    std::size_t q_max = 8;
    std::size_t instances = 100;
    std::uint64_t seed = 0;
    std::size_t samples = 100;  // random z and random t per instance
    Rational density{1, 2};
    // Test hook: rewrites each generated tensor before checking.
    std::function<CupTensor(const CupTensor&)> corrupt;
};

struct RandomInstance {
    std::size_t index = 0;
    std::uint64_t tensor_seed = 0;
    CupTensor tensor;
};

inline RandomInstance random_instance(const RandomCheckConfig& cfg, std::size_t index) {
    Rng rng(derive_seed(cfg.seed, {index}));
    const std::size_t p = 1 + rng.below(cfg.p_max);
    const std::size_t q = rng.below(cfg.q_max + 1);
    const std::uint64_t ts = rng.next();
    return {index, ts, random_tensor(p, q, ts, cfg.density)};
}

struct CheckFailure {
    std::size_t instance = 0;
    std::uint64_t seed = 0;
    std::string invariant;
    std::string detail;
};

struct RandomCheckResult {
    std::size_t instances_run = 0;
    std::size_t checks = 0;
    std::optional<CheckFailure> failure;
    bool passed() const { return !failure.has_value(); }
};

namespace detail {

inline RationalVector random_point(Rng& rng, std::size_t dim, std::int64_t bound) {
    RationalVector v(dim);
    for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    return v;
}

class InstanceChecker {
public:
    InstanceChecker(const RandomCheckConfig& cfg, std::size_t& checks) : cfg_(cfg), checks_(checks) {}

    // Returns the name and detail of the first violated invariant.
    std::optional<std::pair<std::string, std::string>> run(const CupTensor& tensor, std::uint64_t instance_seed) {
        try {
            return run_unguarded(tensor, instance_seed);
        } catch (const std::exception& e) {
            return std::make_pair(std::string("exception"), std::string(e.what()));
        }
    }

private:
    std::optional<std::pair<std::string, std::string>> run_unguarded(const CupTensor& tensor,
                                                                     std::uint64_t instance_seed) {
        using Failure = std::pair<std::string, std::string>;
        const std::size_t p = tensor.p(), q = tensor.q();

        auto report = validate(tensor);
        ++checks_;
        if (!report.ok()) return Failure{"antisymmetry", report.violations.front().message};

        const auto cx = build_complex(tensor);
        ++checks_;
        if (!verify_complex(cx)) return Failure{"complex", "A1*A0 is not identically zero"};

        const auto dual = dualize(cx);
        const auto generic = generic_cohomology_dims(cx);
        const long long chi = 1 - static_cast<long long>(q) + static_cast<long long>(p);
        Rng rng(instance_seed);
        for (std::size_t s = 0; s < cfg_.samples; ++s) {
            auto t = random_point(rng, q, 10);
            const auto d = cohomology_dims(cx, t);
            checks_ += 4;
            if (d.h0 - d.h1 + d.h2 != chi)
                return Failure{"euler", "h0-h1+h2 != 1-q+p at t=(" + to_string(t) + ")"};
            if (d.h0 != (is_zero_vector(t) ? 1 : 0)) return Failure{"h0", "h0 wrong at t=(" + to_string(t) + ")"};
            if (d.h0 < generic.dims.h0 || d.h1 < generic.dims.h1 || d.h2 < generic.dims.h2)
                return Failure{"cohomology-semicontinuity", "h_i below generic at t=(" + to_string(t) + ")"};
            if (rank(dual.first.evaluate(t)) != rank(cx.a1.evaluate(t)) ||
                rank(dual.second.evaluate(t)) != rank(cx.a0.evaluate(t)))
                return Failure{"dual-rank", "transposed differential changed rank at t=(" + to_string(t) + ")"};
        }

        const auto pencil = build_pencil(tensor);
        const GammaModel gamma{pencil};
        const auto witness = find_smooth_witness(pencil);
        checks_ += 2;
        if (witness.rank % 2) return Failure{"rank-parity", "generic rank is odd"};
        if (!witness.parity_ok || witness.dim_M != witness.dim_M_tilde - 1 || (witness.dim_M - chi) % 2)
            return Failure{"dim-parity", "dim M = " + std::to_string(witness.dim_M) + " vs chi = " + std::to_string(chi)};

        for (std::size_t s = 0; s < cfg_.samples; ++s) {
            auto z = random_point(rng, p, 10);
            const auto b = pencil.evaluate(z);
            const auto r = rank(b);
            checks_ += 3;
            if (!b.is_skew_symmetric()) return Failure{"skew", "B(z) not skew at z=(" + to_string(z) + ")"};
            if (r % 2) return Failure{"rank-parity", "odd rank at z=(" + to_string(z) + ")"};
            if (q - r < q - static_cast<std::size_t>(witness.rank))
                return Failure{"fiber-semicontinuity", "fiber below generic at z=(" + to_string(z) + ")"};
            if (q <= 8) {
                ++checks_;
                if (pfaffian_rank(b) != r)
                    return Failure{"pfaffian", "Pfaffian-minor rank disagrees at z=(" + to_string(z) + ")"};
            }
            RationalVector scaled = z;
            for (auto& x : scaled) x *= -3;
            ++checks_;
            if (fiber_dimension(pencil, scaled) != q - r)
                return Failure{"scaling", "fiber dimension not scale invariant at z=(" + to_string(z) + ")"};
            if (s % 10 == 0) {
                if (auto f = check_gamma(gamma, z, b, rng)) return f;
            }
        }

        SurfaceSpec spec{"random", tensor, std::nullopt};
        const auto deg = poincare_degree(spec);
        ++checks_;
        if (!deg.paths_agree || deg.degree != (chi % 2 == 0 ? 1 : -1))
            return Failure{"degree", "degree " + std::to_string(deg.degree) + " with chi " + std::to_string(chi)};
        return std::nullopt;
    }

    std::optional<std::pair<std::string, std::string>> check_gamma(const GammaModel& gamma, const RationalVector& z,
                                                                  const RationalMatrix& b, Rng& rng) {
        using Failure = std::pair<std::string, std::string>;
        const std::size_t q = gamma.pencil.q();
        const auto kernel = kernel_basis(b);
        RationalVector sum(q, Rational(0));
        for (const auto& v : kernel) {
            const Rational c(static_cast<long>(rng.uniform(-5, 5)));
            for (std::size_t j = 0; j < q; ++j) sum[j] += c * v[j];
        }
        RationalVector scaled = z;
        for (auto& x : scaled) x *= 7;
        const auto t = random_point(rng, q, 10);
        checks_ += 3;
        for (const auto& v : kernel)
            if (!gamma_membership(gamma, z, v)) return Failure{"gamma", "kernel vector not in Gamma"};
        if (!gamma_membership(gamma, z, sum)) return Failure{"gamma-bilinear", "sum of fiber points not in Gamma"};
        if (gamma_membership(gamma, z, t) != gamma_membership(gamma, scaled, t))
            return Failure{"gamma-scaling", "membership changed under z -> 7z"};
        return std::nullopt;
    }

    const RandomCheckConfig& cfg_;
    std::size_t& checks_;
};

}  // namespace detail

inline RandomCheckResult run_random_check(const RandomCheckConfig& cfg) {
    if (cfg.p_max == 0) throw std::invalid_argument("p-max must be positive");
    RandomCheckResult result;
    detail::InstanceChecker checker(cfg, result.checks);
    for (std::size_t n = 0; n < cfg.instances; ++n) {
        auto inst = random_instance(cfg, n);
        if (cfg.corrupt) inst.tensor = cfg.corrupt(inst.tensor);
        ++result.instances_run;
        if (auto f = checker.run(inst.tensor, derive_seed(cfg.seed, {n, 1}))) {
            result.failure = CheckFailure{n, cfg.seed, f->first, f->second};
            break;
        }
    }
    return result;
}

}  // namespace hilbkx

#endif  // HILBKX_PROPERTY_SUITE_HPP
