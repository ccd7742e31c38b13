#ifndef HILBKX_GL_COMPLEX_HPP
#define HILBKX_GL_COMPLEX_HPP

#include <hilbkx/errors.hpp>
#include <hilbkx/matrix.hpp>
#include <hilbkx/sampling.hpp>
#include <hilbkx/surface_data.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace hilbkx {

// c_1 t_1 + ... + c_n t_n, no constant term.
struct LinearForm {
    RationalVector coeffs;

    LinearForm() = default;
    explicit LinearForm(std::size_t nvars) : coeffs(nvars, Rational(0)) {}

    static LinearForm variable(std::size_t nvars, std::size_t index) {
        LinearForm f(nvars);
        f.coeffs.at(index) = 1;
        return f;
    }

    std::size_t nvars() const { return coeffs.size(); }

    bool is_zero() const { return is_zero_vector(coeffs); }

    Rational evaluate(const RationalVector& t) const {
        if (t.size() != coeffs.size()) throw DimensionMismatch("linear form evaluated at a point of wrong length");
        Rational acc(0);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) acc += coeffs[k] * t[k];
        return acc;
    }

    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const auto& c = coeffs[k];
            if (c == 0) continue;
            std::string var = "t" + std::to_string(k + 1);
            if (out.empty()) out = c == 1 ? var : c == -1 ? "-" + var : to_string(c) + "*" + var;
            else if (c == 1) out += "+" + var;
            else if (c == -1) out += "-" + var;
            else if (c > 0) out += "+" + to_string(c) + "*" + var;
            else out += to_string(c) + "*" + var;
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Matrix whose entries are linear forms in t_1..t_nvars.
class LinearFormMatrix {
public:
    LinearFormMatrix() = default;
    LinearFormMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, LinearForm(nvars)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    const LinearForm& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

    void set(std::size_t i, std::size_t j, LinearForm f) {
        if (f.nvars() != nvars_) throw DimensionMismatch("linear form has the wrong number of variables");
        entries_.at(i * cols_ + j) = std::move(f);
    }

    LinearFormMatrix transpose() const {
        LinearFormMatrix t(cols_, rows_, nvars_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
        return t;
    }

    RationalMatrix evaluate(const RationalVector& t) const {
        if (t.size() != nvars_)
            throw DimensionMismatch("expected a point with " + std::to_string(nvars_) + " coordinates, got " +
                                    std::to_string(t.size()));
        RationalMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).evaluate(t);
        return m;
    }

    friend bool operator==(const LinearFormMatrix&, const LinearFormMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t nvars_ = 0;
    std::vector<LinearForm> entries_;
};

namespace detail {

// Product of two linear-form matrices as a matrix of quadratic forms; true
// iff every coefficient of every entry vanishes. The coefficient of
// t_k t_l (k < l) collects both orderings, the square terms stand alone.
inline bool product_is_identically_zero(const LinearFormMatrix& a, const LinearFormMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("linear-form matrix product shape mismatch");
    const std::size_t n = a.nvars();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RationalMatrix quad(n, n);
            for (std::size_t m = 0; m < a.cols(); ++m) {
                const auto& f = a(i, m);
                const auto& g = b(m, j);
                if (f.is_zero() || g.is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (f.coeffs[k] == 0) continue;
                    for (std::size_t l = 0; l < n; ++l)
                        if (g.coeffs[l] != 0) quad(std::min(k, l), std::max(k, l)) += f.coeffs[k] * g.coeffs[l];
                }
            }
            if (!quad.is_zero()) return false;
        }
    return true;
}

}  // namespace detail

/*
 * The three-term deformation complex
 *
 *     0 -> O_T --A0--> O_T^q --A1--> O_T^p -> 0
 *
 * in degrees 0, 1, 2, with A0 = (t_1, ..., t_q)^t and
 * A1(i, j) = sum_k a_{ijk} t_k, i.e. the wedge with sum_k t_k phi_k.
 */
struct DeformationComplex {
    std::size_t q = 0;
    std::size_t p = 0;
    LinearFormMatrix a0;  // q x 1
    LinearFormMatrix a1;  // p x q

    DeformationComplex() = default;
    DeformationComplex(std::size_t q_, std::size_t p_, LinearFormMatrix a0_, LinearFormMatrix a1_)
        : q(q_), p(p_), a0(std::move(a0_)), a1(std::move(a1_)) {
        if (a0.rows() != q || a0.cols() != 1 || a0.nvars() != q)
            throw DimensionMismatch("A0 must be q x 1 in q variables");
        if (a1.rows() != p || a1.cols() != q || a1.nvars() != q)
            throw DimensionMismatch("A1 must be p x q in q variables");
    }

    friend bool operator==(const DeformationComplex&, const DeformationComplex&) = default;
};

// Dual complex 0 -> O_T^p --A1^t--> O_T^q --A0^t--> O_T -> 0.
struct DualDeformationComplex {
    std::size_t q = 0;
    std::size_t p = 0;
    LinearFormMatrix first;   // A1^t, q x p
    LinearFormMatrix second;  // A0^t, 1 x q

    friend bool operator==(const DualDeformationComplex&, const DualDeformationComplex&) = default;
};

inline DeformationComplex build_complex(const CupTensor& tensor) {
    const std::size_t q = tensor.q(), p = tensor.p();
    LinearFormMatrix a0(q, 1, q);
    for (std::size_t j = 0; j < q; ++j) a0.set(j, 0, LinearForm::variable(q, j));
    LinearFormMatrix a1(p, q, q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            LinearForm f(q);
            for (std::size_t k = 0; k < q; ++k) f.coeffs[k] = tensor.at(i, j, k);
            a1.set(i, j, std::move(f));
        }
    return DeformationComplex(q, p, std::move(a0), std::move(a1));
}

// True iff A1 * A0 vanishes as a polynomial matrix.
inline bool verify_complex(const DeformationComplex& cx) { return detail::product_is_identically_zero(cx.a1, cx.a0); }

inline DualDeformationComplex dualize(const DeformationComplex& cx) {
    return {cx.q, cx.p, cx.a1.transpose(), cx.a0.transpose()};
}

inline DeformationComplex dualize(const DualDeformationComplex& dual) {
    return DeformationComplex(dual.q, dual.p, dual.second.transpose(), dual.first.transpose());
}

struct CohomologyDims {
    long long h0 = 0;
    long long h1 = 0;
    long long h2 = 0;

    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

// Fiberwise cohomology of the complex at the point t (dimensions of the
// cohomology of the evaluated numeric complex).
inline CohomologyDims cohomology_dims(const DeformationComplex& cx, const RationalVector& t) {
    if (t.size() != cx.q)
        throw DimensionMismatch("expected a point with q=" + std::to_string(cx.q) + " coordinates, got " +
                                std::to_string(t.size()));
    const auto r0 = static_cast<long long>(rank(cx.a0.evaluate(t)));
    const auto r1 = static_cast<long long>(rank(cx.a1.evaluate(t)));
    const auto q = static_cast<long long>(cx.q), p = static_cast<long long>(cx.p);
    return {1 - r0, q - r1 - r0, p - r1};
}

struct GenericCohomology {
    CohomologyDims dims;
    RationalVector witness_t;  // empty when q = 0
    SampleMetadata trials;
};

// Component-wise minimum of cohomology_dims over the sampled t != 0: an
// upper bound for the generic fiber dimensions. The witness is the first
// sample attaining the minimum of h2 (all three minima coincide there).
inline GenericCohomology generic_cohomology_dims(const DeformationComplex& cx,
                                                 const SamplingPolicy& sampler = SamplingPolicy::single_box()) {
    sampler.check();
    if (cx.q == 0) return {{1, 0, static_cast<long long>(cx.p)}, {}, metadata_for(sampler, 0)};
    GenericCohomology best;
    bool first = true;
    const std::size_t n = sampler.total();
    for (std::size_t s = 0; s < n; ++s) {
        auto t = sampler.point(cx.q, s);
        auto d = cohomology_dims(cx, t);
        if (first) {
            best.dims = d;
            best.witness_t = std::move(t);
            first = false;
            continue;
        }
        if (d.h2 < best.dims.h2) best.witness_t = std::move(t);
        best.dims.h0 = std::min(best.dims.h0, d.h0);
        best.dims.h1 = std::min(best.dims.h1, d.h1);
        best.dims.h2 = std::min(best.dims.h2, d.h2);
    }
    best.trials = metadata_for(sampler, n);
    return best;
}

}  // namespace hilbkx

#endif  // HILBKX_GL_COMPLEX_HPP
