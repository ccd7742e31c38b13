#include <hilbkx/matrix.hpp>
#include <hilbkx/pfaffian.hpp>
#include <hilbkx/random.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace hilbkx;

namespace {

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool with_fractions) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            // Sparse-ish so that rank deficiency actually occurs.
            if (rng.below(3) == 0) continue;
            const long num = static_cast<long>(rng.uniform(-4, 4));
            const long den = with_fractions ? static_cast<long>(rng.uniform(1, 5)) : 1;
            m(i, j) = make_rational(num, den);
        }
    return m;
}

RationalMatrix random_skew(Rng& rng, std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.below(2) == 0) continue;
            m(i, j) = Rational(static_cast<long>(rng.uniform(-5, 5)));
            m(j, i) = -m(i, j);
        }
    return m;
}

oracle::RationalRows rows_of(const RationalMatrix& m) {
    oracle::RationalRows r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

}  // namespace

TEST(Rational, ParsesCanonicalForm) {
    EXPECT_EQ(*parse_rational("6/4"), make_rational(3, 2));
    EXPECT_EQ(*parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(*parse_rational("-10/4")), "-5/2");
    EXPECT_FALSE(parse_rational("1/0"));
    EXPECT_FALSE(parse_rational("1/-2"));
    EXPECT_FALSE(parse_rational("1.5"));
    EXPECT_FALSE(parse_rational(""));
    EXPECT_EQ(parse_rational_list("1, -2,3/4").size(), 3u);
    EXPECT_THROW(parse_rational_list("1,,2"), std::invalid_argument);
}

TEST(Matrix, RankOfSmallCases) {
    EXPECT_EQ(rank(RationalMatrix(0, 0)), 0u);
    EXPECT_EQ(rank(RationalMatrix(3, 2)), 0u);
    auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(determinant(m), 0);
    auto f = RationalMatrix::from_rows({{make_rational(1, 2), make_rational(1, 3)}, {make_rational(1, 4), make_rational(1, 5)}});
    EXPECT_EQ(determinant(f), make_rational(1, 10) - make_rational(1, 12));
}

TEST(Matrix, BareissAgreesWithGaussianEliminationOracle) {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        auto m = random_matrix(rng, r, c, trial % 2 == 0);
        ASSERT_EQ(rank(m), oracle::gauss_rank(rows_of(m))) << "trial " << trial;
        ASSERT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(Matrix, DeterminantAgreesWithCofactorOracle) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = rng.below(6);
        auto m = random_matrix(rng, n, n, true);
        ASSERT_EQ(determinant(m), oracle::cofactor_det(rows_of(m))) << "trial " << trial;
    }
}

TEST(Matrix, KernelBasisSpansTheKernel) {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(6);
        auto m = random_matrix(rng, r, c, true);
        auto basis = kernel_basis(m);
        ASSERT_EQ(basis.size(), c - rank(m));
        for (const auto& v : basis) ASSERT_TRUE(is_zero_vector(m.apply(v)));
    }
}

TEST(Pfaffian, KnownValues) {
    EXPECT_EQ(pfaffian(RationalMatrix(0, 0)), 1);
    auto a = RationalMatrix::from_rows({{0, 5}, {-5, 0}});
    EXPECT_EQ(pfaffian(a), 5);
    // Pf of the 4x4 skew matrix = a12 a34 - a13 a24 + a14 a23.
    auto b = RationalMatrix::from_rows({{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}});
    EXPECT_EQ(pfaffian(b), 1 * 6 - 2 * 5 + 3 * 4);
    EXPECT_EQ(pfaffian(RationalMatrix(3, 3)), 0);
    EXPECT_THROW(pfaffian(RationalMatrix::from_rows({{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST(Pfaffian, SquareIsDeterminantAndRankMatchesElimination) {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng.below(9);
        auto m = random_skew(rng, n);
        const auto pf = pfaffian(m);
        ASSERT_EQ(pf * pf, oracle::cofactor_det(rows_of(m)));
        const auto pr = pfaffian_rank(m);
        ASSERT_EQ(pr % 2, 0u);
        ASSERT_EQ(pr, rank(m)) << "trial " << trial;
    }
}
