#ifndef HILBKX_POLYNOMIAL_HPP
#define HILBKX_POLYNOMIAL_HPP

#include <hilbkx/errors.hpp>
#include <hilbkx/rational.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hilbkx {

// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c) {
        Polynomial f(nvars);
        f.add_term(Exponents(nvars, 0), c);
        return f;
    }

    static Polynomial variable(std::size_t nvars, std::size_t index) {
        Polynomial f(nvars);
        Exponents e(nvars, 0);
        e.at(index) = 1;
        f.add_term(e, Rational(1));
        return f;
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (e.size() != nvars_) throw DimensionMismatch("monomial has the wrong number of variables");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational evaluate(const RationalVector& x) const {
        if (x.size() != nvars_) throw DimensionMismatch("polynomial evaluated at a point of wrong length");
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (std::size_t v = 0; v < nvars_; ++v)
                for (unsigned d = 0; d < e[v]; ++d) m *= x[v];
            acc += m;
        }
        return acc;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= nvars_) throw DimensionMismatch("derivative variable out of range");
        Polynomial d(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents e2 = e;
            --e2[var];
            d.add_term(e2, c * e[var]);
        }
        return d;
    }

    Polynomial& operator+=(const Polynomial& g) {
        check_same(g);
        for (const auto& [e, c] : g.terms_) add_term(e, c);
        return *this;
    }

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
        Polynomial out = f;
        out.check_same(g);
        for (const auto& [e, c] : g.terms_) out.add_term(e, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_same(g);
        Polynomial out(f.nvars_);
        for (const auto& [e1, c1] : f.terms_)
            for (const auto& [e2, c2] : g.terms_) {
                Exponents e(f.nvars_);
                for (std::size_t v = 0; v < f.nvars_; ++v) e[v] = e1[v] + e2[v];
                out.add_term(e, c1 * c2);
            }
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& f) {
        Polynomial out(f.nvars_);
        for (const auto& [e, v] : f.terms_) out.add_term(e, c * v);
        return out;
    }

    // Composition with an affine map: x_v -> (image[v]).
    Polynomial substitute(const std::vector<Polynomial>& image) const {
        if (image.size() != nvars_) throw DimensionMismatch("substitution needs one image per variable");
        const std::size_t m = image.empty() ? 0 : image.front().nvars();
        Polynomial out(m);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(m, c);
            for (std::size_t v = 0; v < nvars_; ++v)
                for (unsigned d = 0; d < e[v]; ++d) term = term * image[v];
            out += term;
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t v = 0; v < nvars_; ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(v + 1);
                if (e[v] > 1) mono += "^" + std::to_string(e[v]);
            }
            std::string coef = to_string(c);
            std::string piece = mono.empty() ? coef : c == 1 ? mono : c == -1 ? "-" + mono : coef + "*" + mono;
            if (!out.empty() && piece.front() != '-') out += "+";
            out += piece;
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void check_same(const Polynomial& g) const {
        if (g.nvars_ != nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
    }

    std::size_t nvars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace hilbkx

#endif  // HILBKX_POLYNOMIAL_HPP
