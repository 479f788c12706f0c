#include "lefdet/matrix.hpp"
#include "lefdet/mpoly.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using lefdet::Matrix;
using lefdet::MultiPoly;
using lefdet::Rational;

namespace {

Matrix<Rational> q(std::initializer_list<std::initializer_list<Rational>> rows) { return Matrix<Rational>(rows); }

} // namespace

TEST(Det, SmallExamples)
{
    EXPECT_EQ(lefdet::det(q({{1, 2}, {3, 4}})), -2);
    EXPECT_EQ(oracle::leibniz_det(q({{1, 2}, {3, 4}})), -2);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(lefdet::det(Matrix<Rational>::identity(n)), 1);
    // x(2x+3y) : R_1 -> R_2 for d=2, q=1
    EXPECT_EQ(lefdet::det(q({{2, 3}, {0, 2}})), 4);
    EXPECT_EQ(lefdet::det(q({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(lefdet::det(q({{0, 0}, {1, 0}})), 0);
    EXPECT_EQ(lefdet::det(q({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}})), Rational(1, 60));
}

TEST(Det, NonSquareThrows)
{
    EXPECT_THROW(lefdet::det(Matrix<Rational>(2, 3)), std::invalid_argument);
    EXPECT_THROW(lefdet::det_laplace(Matrix<Rational>(3, 2)), std::invalid_argument);
}

TEST(Det, BareissAgreesWithLaplaceAndLeibnizOnRandomMatrices)
{
    for (int trial = 0; trial < 300; ++trial) {
        lefdet::CellRng rng(3, {trial});
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto m = oracle::random_matrix(rng, n, n);
        // sprinkle rank deficiency now and then
        if (trial % 7 == 0 && n > 1)
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) * 2;
        const Rational ref = oracle::leibniz_det(m);
        ASSERT_EQ(lefdet::det_bareiss(m), ref);
        ASSERT_EQ(lefdet::det_laplace(m), ref);
    }
}

TEST(Det, IsMultiplicative)
{
    for (int trial = 0; trial < 100; ++trial) {
        lefdet::CellRng rng(4, {trial});
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        auto a = oracle::random_matrix(rng, n, n), b = oracle::random_matrix(rng, n, n);
        ASSERT_EQ(lefdet::det(a * b), lefdet::det(a) * lefdet::det(b));
    }
}

TEST(Det, LaplaceOverPolynomials)
{
    MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
    Matrix<MultiPoly> m{{x, y}, {y, x}};
    EXPECT_EQ(lefdet::det(m), x * x - y * y);
    EXPECT_EQ(lefdet::det(m), oracle::leibniz_det(m));
}

TEST(MinorDet, Examples)
{
    auto m = q({{2, 0}, {1, 2}, {0, 1}});
    std::vector<std::size_t> r01{0, 1}, r12{1, 2}, c01{0, 1}, none{};
    EXPECT_EQ(lefdet::minor_det(m, r01, c01), 4);
    EXPECT_EQ(lefdet::minor_det(m, r12, c01), 1);
    EXPECT_EQ(lefdet::minor_det(m, none, none), 1);

    std::vector<std::size_t> bad{0, 3}, unsorted{1, 0}, one{0};
    EXPECT_THROW(lefdet::minor_det(m, bad, c01), std::out_of_range);
    EXPECT_THROW(lefdet::minor_det(m, unsorted, c01), std::invalid_argument);
    EXPECT_THROW(lefdet::minor_det(m, one, c01), std::invalid_argument);
}

TEST(IndexSubsets, CountsAndOrder)
{
    auto s = lefdet::index_subsets(4, 2);
    ASSERT_EQ(s.size(), 6U);
    EXPECT_EQ(s.front(), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(s.back(), (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(lefdet::index_subsets(3, 0).size(), 1U);
    EXPECT_TRUE(lefdet::index_subsets(2, 3).empty());
}

TEST(CauchyBinet, Examples)
{
    auto r1 = lefdet::cauchy_binet_check(q({{1, 2, 3}}), q({{1}, {1}, {1}}));
    EXPECT_EQ(r1.lhs, 6);
    EXPECT_EQ(r1.rhs, 6);
    EXPECT_TRUE(r1.equal);

    auto r2 = lefdet::cauchy_binet_check(Matrix<Rational>::identity(3), Matrix<Rational>::identity(3));
    EXPECT_EQ(r2.lhs, 1);
    EXPECT_TRUE(r2.equal);

    // d = q = 2, k = 1, forms (2,1) then (1,3)
    auto r3 = lefdet::cauchy_binet_check(q({{3, 1, 0}, {0, 3, 1}}), q({{2, 0}, {1, 2}, {0, 1}}));
    EXPECT_EQ(r3.lhs, 43);
    EXPECT_EQ(r3.rhs, 43);
    EXPECT_TRUE(r3.equal);

    EXPECT_THROW(lefdet::cauchy_binet_check(q({{1, 2}}), q({{1, 2}})), std::invalid_argument);
    EXPECT_THROW(lefdet::cauchy_binet_check(q({{1}, {2}}), q({{1, 2}})), std::invalid_argument);
}
