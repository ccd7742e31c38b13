// Independent reference computations used only by the tests. Nothing here
// calls into the library's elimination, pencil or Kuenneth code.
#ifndef HILBKX_TESTS_ORACLES_HPP
#define HILBKX_TESTS_ORACLES_HPP

#include <hilbkx/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using hilbkx::Rational;
using RationalRows = std::vector<std::vector<Rational>>;

// Textbook Gaussian elimination with division over Q.
inline std::size_t gauss_rank(RationalRows m) {
    std::size_t r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Leibniz-free cofactor determinant (small n only).
inline Rational cofactor_det(const RationalRows& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        RationalRows minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[i][j]);
            minor.push_back(row);
        }
        Rational term = m[0][c] * cofactor_det(minor);
        if (c % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

// Exterior algebra monomial: sorted generator list with a sign.
struct Monomial {
    int sign = 0;  // 0 means the product vanished
    std::vector<std::size_t> gens;
};

inline Monomial wedge(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> w = a;
    w.insert(w.end(), b.begin(), b.end());
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
            if (w[j] == w[j + 1]) return {0, {}};
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] == w[j + 1]) return {0, {}};
    return {sign, w};
}

// Cup-product tensor of C1 x C2 from the exterior algebra on
// alpha_1..alpha_g1, beta_1..beta_g2 modulo alpha^alpha' = beta^beta' = 0,
// with alpha_a ^ beta_b identified with psi_(a,b). Returns the full
// (completed) tensor, zero-based (i, j, k) -> value, nonzero entries only.
inline std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> kunneth_tensor(std::size_t g1,
                                                                                          std::size_t g2) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> out;
    const std::size_t q = g1 + g2;
    auto is_alpha = [&](std::size_t g) { return g < g1; };
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t k = 0; k < q; ++k) {
            auto m = wedge({j}, {k});
            if (m.sign == 0) continue;
            const auto x = m.gens[0], y = m.gens[1];
            if (is_alpha(x) == is_alpha(y)) continue;  // relation
            const std::size_t a = x, b = y - g1;  // x < y, so x is the alpha
            out[{a * g2 + b, j, k}] = Rational(m.sign);
        }
    return out;
}

}  // namespace oracle

#endif  // HILBKX_TESTS_ORACLES_HPP
