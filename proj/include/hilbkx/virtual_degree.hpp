#ifndef HILBKX_VIRTUAL_DEGREE_HPP
#define HILBKX_VIRTUAL_DEGREE_HPP

#include <hilbkx/errors.hpp>
#include <hilbkx/local_model.hpp>
#include <hilbkx/matrix.hpp>
#include <hilbkx/polynomial.hpp>
#include <hilbkx/random.hpp>
#include <hilbkx/sampling.hpp>
#include <hilbkx/surface_data.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

namespace hilbkx {

/*
 * Cosection-localized degree.
 *
 * Model situation: M smooth of dimension n, obstruction bundle E of rank n,
 * obstruction theory the zero map T_M -> E, and a cosection sigma: E -> O_M
 * whose zero locus is a single simple point. The localized virtual class
 * is then (-1)^n times that point.
 *
 * For Hilb^{k_X} of a minimal surface of general type with p_g > 0 the
 * cosection vanishes exactly at a simple point Z, Hilb^{k_X} is smooth at
 * Z, and the virtual dimension is 0. The obstruction bundle then has rank
 * dim_Z M, so the degree is (-1)^{dim_Z M} = (-1)^{chi(O_X)}.
 */

class NotAZero : public std::runtime_error {
public:
    NotAZero(std::size_t index, const Rational& value)
        : std::runtime_error("component " + std::to_string(index + 1) + " does not vanish at the candidate (value " +
                             to_string(value) + ")"),
          index_(index),
          value_(value) {}

    std::size_t index() const { return index_; }
    const Rational& value() const { return value_; }

private:
    std::size_t index_;
    Rational value_;
};

class DegenerateZero : public std::runtime_error {
public:
    DegenerateZero() : std::runtime_error("Jacobian of the cosection is singular at the candidate: zero is not simple") {}
};

// A smooth n-dimensional chart with an n-component cosection (in a fixed
// trivialization) and a candidate zero.
struct ToyCosectionModel {
    std::size_t n = 0;
    std::vector<Polynomial> components;
    RationalVector candidate;

    ToyCosectionModel() = default;
    ToyCosectionModel(std::size_t n_, std::vector<Polynomial> comps, RationalVector point)
        : n(n_), components(std::move(comps)), candidate(std::move(point)) {
        if (components.size() != n) throw DimensionMismatch("cosection needs exactly n components");
        if (candidate.size() != n) throw DimensionMismatch("candidate point must have n coordinates");
        for (const auto& f : components)
            if (f.nvars() != n) throw DimensionMismatch("cosection components must be polynomials in n variables");
    }
};

struct SimpleZeroCertificate {
    RationalVector point;
    Rational jacobian_det;
    bool verified = false;
};

inline RationalMatrix jacobian_at(const ToyCosectionModel& model, const RationalVector& x) {
    RationalMatrix jac(model.n, model.n);
    for (std::size_t i = 0; i < model.n; ++i)
        for (std::size_t j = 0; j < model.n; ++j) jac(i, j) = model.components[i].derivative(j).evaluate(x);
    return jac;
}

inline SimpleZeroCertificate certify_simple_zero(const ToyCosectionModel& model) {
    for (std::size_t i = 0; i < model.n; ++i) {
        auto v = model.components[i].evaluate(model.candidate);
        if (v != 0) throw NotAZero(i, v);
    }
    auto det = determinant(jacobian_at(model, model.candidate));
    if (det == 0) throw DegenerateZero();
    return {model.candidate, det, true};
}

// (-1)^n once the candidate is certified as a simple zero.
inline int localized_degree_simple_point(const ToyCosectionModel& model) {
    certify_simple_zero(model);
    return model.n % 2 ? -1 : 1;
}

struct DegreeReport {
    int degree = 0;
    long long chi = 0;
    long long dim_M = 0;
    bool paths_agree = false;
    WitnessReport witness;
};

namespace detail {

inline void require_positive_genus(const SurfaceSpec& spec) {
    if (spec.p() == 0)
        throw HypothesisViolated("hypothesis violated: localization requires p_g(X) > 0, got p = 0");
}

inline int sign_of_parity(long long n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace detail

// deg [Hilb^{k_X}]^vir = (-1)^{chi(O_X)}, cross-checked against
// (-1)^{dim M} at a sampled smooth witness.
inline DegreeReport poincare_degree(const SurfaceSpec& spec, const SamplingPolicy& sampler = SamplingPolicy::staged()) {
    detail::require_positive_genus(spec);
    DegreeReport out;
    out.chi = euler_characteristic(spec);
    out.witness = find_smooth_witness(build_pencil(spec.tensor), sampler);
    out.dim_M = out.witness.dim_M;
    if (!out.witness.parity_ok || (out.dim_M - out.chi) % 2 != 0)
        throw ParityFailure("dim M = " + std::to_string(out.dim_M) + " and chi = " + std::to_string(out.chi) +
                            " have different parity");
    out.degree = detail::sign_of_parity(out.chi);
    out.paths_agree = detail::sign_of_parity(out.dim_M) == out.degree;
    return out;
}

struct SupportDescriptor {
    std::string support = "single point";
    // Virtual dimension of Hilb^{k_X}; unknown without intersection data.
    std::optional<long long> virtual_dimension;

    std::string virtual_dimension_text() const {
        return virtual_dimension ? std::to_string(*virtual_dimension) : "unknown (no intersection data)";
    }
};

inline SupportDescriptor localization_support(const SurfaceSpec& spec) {
    detail::require_positive_genus(spec);
    SupportDescriptor d;
    if (spec.intersection) d.virtual_dimension = virtual_dimension(spec.intersection->kx_kx, spec.intersection->kx_kx);
    return d;
}

// ---------------------------------------------------------------------------
// Random toy models. Components are f_i(x) = sum_j L_ij u_j + h_i(u) with
// u = x - c, c a random rational point and h_i random quadratic and cubic
// terms in u, so c is always a zero and the Jacobian at c is L.

namespace detail {

inline Rational small_rational(Rng& rng) {
    return make_rational(static_cast<long>(rng.uniform(-5, 5)), static_cast<long>(rng.uniform(1, 4)));
}

inline ToyCosectionModel toy_model_from_linear_part(std::size_t n, const RationalMatrix& linear, Rng& rng) {
    RationalVector c(n);
    for (auto& x : c) x = small_rational(rng);
    std::vector<Polynomial> u;
    for (std::size_t v = 0; v < n; ++v) u.push_back(Polynomial::variable(n, v) - Polynomial::constant(n, c[v]));
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial f(n);
        for (std::size_t j = 0; j < n; ++j) f += linear(i, j) * u[j];
        const auto extra = rng.below(4);
        for (std::uint64_t t = 0; t < extra; ++t) {
            Polynomial mono = Polynomial::constant(n, small_rational(rng));
            const auto degree = 2 + rng.below(2);
            for (std::uint64_t d = 0; d < degree; ++d) mono = mono * u[rng.below(n)];
            f += mono;
        }
        comps.push_back(std::move(f));
    }
    return ToyCosectionModel(n, std::move(comps), std::move(c));
}

}  // namespace detail

// Model with a certified simple zero at its candidate point.
inline ToyCosectionModel random_simple_zero_model(std::size_t n, std::uint64_t seed) {
    Rng rng(mix64(seed));
    RationalMatrix linear(n, n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) linear(i, j) = Rational(static_cast<long>(rng.uniform(-3, 3)));
    } while (determinant(linear) == 0);
    return detail::toy_model_from_linear_part(n, linear, rng);
}

// Model whose candidate is a zero with singular Jacobian (n >= 1): the last
// row of the linear part is a combination of the others.
inline ToyCosectionModel random_degenerate_model(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("a zero-dimensional model has no degenerate zero");
    Rng rng(mix64(seed));
    RationalMatrix linear(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) linear(i, j) = Rational(static_cast<long>(rng.uniform(-3, 3)));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Rational w(static_cast<long>(rng.uniform(-2, 2)));
        for (std::size_t j = 0; j < n; ++j) linear(n - 1, j) += w * linear(i, j);
    }
    return detail::toy_model_from_linear_part(n, linear, rng);
}

}  // namespace hilbkx

#endif  // HILBKX_VIRTUAL_DEGREE_HPP
