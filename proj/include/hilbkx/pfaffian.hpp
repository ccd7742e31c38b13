#ifndef HILBKX_PFAFFIAN_HPP
#define HILBKX_PFAFFIAN_HPP

#include <hilbkx/matrix.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hilbkx {

/*
 * Principal Pfaffian minors of a skew-symmetric matrix.
 *
 * Pf(S) for every even-size index subset S is computed by expansion along
 * the smallest index of S,
 *
 *     Pf(S) = sum_{m >= 1} (-1)^(m-1) a(s_0, s_m) Pf(S \ {s_0, s_m}),
 *
 * memoised over bitmasks. The cost is O(2^n * n), so this is intended for
 * small n (n <= 20 is enforced). No elimination is involved, which makes it
 * an independent route to the rank of a skew matrix: the rank equals the
 * largest |S| with Pf(S) != 0.
 */
template <typename T>
class PrincipalPfaffians {
public:
    static constexpr std::size_t max_order = 20;

    explicit PrincipalPfaffians(const Matrix<T>& a) : n_(a.rows()) {
        if (!a.is_skew_symmetric()) throw std::invalid_argument("Pfaffian of a non-skew-symmetric matrix");
        if (n_ > max_order) throw std::invalid_argument("Pfaffian minor table limited to order 20");
        const std::uint32_t full = (1u << n_);
        values_.assign(full, T(0));
        values_[0] = T(1);
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            if (std::popcount(mask) % 2) continue;
            const unsigned first = static_cast<unsigned>(std::countr_zero(mask));
            std::uint32_t rest = mask & ~(1u << first);
            T acc(0);
            int sign = 1;
            for (std::uint32_t r = rest; r; r &= r - 1) {
                const unsigned j = static_cast<unsigned>(std::countr_zero(r));
                const T& aij = a(first, j);
                if (aij != 0) {
                    const T& sub = values_[rest & ~(1u << j)];
                    if (sub != 0) {
                        if (sign > 0) acc += aij * sub;
                        else acc -= aij * sub;
                    }
                }
                sign = -sign;
            }
            values_[mask] = std::move(acc);
        }
    }

    std::size_t order() const { return n_; }

    const T& operator[](std::uint32_t mask) const { return values_.at(mask); }

    // Pfaffian of the whole matrix; zero for odd order.
    T full() const {
        if (n_ % 2) return T(0);
        return values_[(1u << n_) - 1];
    }

    // Largest size of a principal submatrix with nonzero Pfaffian.
    std::size_t rank() const {
        std::size_t best = 0;
        for (std::uint32_t mask = 0; mask < values_.size(); ++mask)
            if (values_[mask] != 0) best = std::max<std::size_t>(best, std::popcount(mask));
        return best;
    }

private:
    std::size_t n_;
    std::vector<T> values_;
};

template <typename T>
T pfaffian(const Matrix<T>& a) {
    return PrincipalPfaffians<T>(a).full();
}

template <typename T>
std::size_t pfaffian_rank(const Matrix<T>& a) {
    return PrincipalPfaffians<T>(a).rank();
}

}  // namespace hilbkx

#endif  // HILBKX_PFAFFIAN_HPP
