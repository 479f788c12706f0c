#include "lefdet/mpoly.hpp"
#include "lefdet/symfunc.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using lefdet::MultiPoly;
using lefdet::Rational;

namespace {

MultiPoly var(std::size_t arity, std::size_t i) { return MultiPoly::variable(arity, i); }
MultiPoly c(long v, std::size_t arity = 0) { return MultiPoly::constant(Rational(v), arity); }

} // namespace

TEST(MultiPoly, Add)
{
    MultiPoly x = var(2, 0), y = var(2, 1);
    EXPECT_EQ((x + y) + (x - y), c(2) * x);
    EXPECT_EQ(x + MultiPoly(), x);
    MultiPoly two_xy = c(2) * x * y;
    EXPECT_TRUE((two_xy + (-two_xy)).is_zero());
    EXPECT_TRUE((two_xy + (-two_xy)).terms().empty());
}

TEST(MultiPoly, MulExpandsProductOfTwoForms)
{
    // variables a1 a2 b1 b2 x y
    MultiPoly a1 = var(6, 0), a2 = var(6, 1), b1 = var(6, 2), b2 = var(6, 3), x = var(6, 4), y = var(6, 5);
    MultiPoly prod = (a1 * x + b1 * y) * (a2 * x + b2 * y);
    MultiPoly expected = a1 * a2 * x * x + (a1 * b2 + a2 * b1) * x * y + b1 * b2 * y * y;
    EXPECT_EQ(prod, expected);
    EXPECT_EQ(prod.terms().size(), 4U);
    EXPECT_EQ(prod * c(1), prod);
    EXPECT_TRUE((prod * MultiPoly()).is_zero());
}

TEST(MultiPoly, ArityMismatchThrows)
{
    EXPECT_THROW(var(2, 0) + var(3, 0), std::invalid_argument);
    EXPECT_THROW(var(2, 0) * var(3, 0), std::invalid_argument);
    EXPECT_THROW(var(2, 0).eval(std::vector<Rational>{1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(MultiPoly::variable(2, 2), std::out_of_range);
}

TEST(MultiPoly, Eval)
{
    MultiPoly x = var(2, 0), y = var(2, 1);
    EXPECT_EQ((x * x + y).eval(std::vector<Rational>{2, 3}), 7);
    EXPECT_EQ(MultiPoly().eval(std::vector<Rational>{5, 6}), 0);

    // E_1 over (a1, a2; b1, b2) at (1, 3; 2, 1)
    lefdet::HomogPair<MultiPoly> hp({var(4, 0), var(4, 1)}, {var(4, 2), var(4, 3)});
    MultiPoly e1 = lefdet::elementary_homog(1, hp);
    EXPECT_EQ(e1.eval(std::vector<Rational>{1, 3, 2, 1}), 7);
}

TEST(MultiPoly, ConstantsAdoptArityAndCompareStructurally)
{
    MultiPoly one3 = MultiPoly::constant(Rational(1), 3);
    EXPECT_EQ(one3, lefdet::ring_one<MultiPoly>());
    EXPECT_EQ((one3 + c(1)).arity(), 3U);
    EXPECT_NE(var(3, 0), var(3, 1));
}

TEST(MultiPoly, Rendering)
{
    auto names = lefdet::form_variable_names(2);
    MultiPoly a1 = var(4, 0), b2 = var(4, 3);
    EXPECT_EQ((a1 * a1 * a1 * b2 * b2 * b2).to_string(names), "a1^3*b2^3");
    EXPECT_EQ((c(3) * a1 - b2 + MultiPoly::constant(Rational(1, 2))).to_string(names), "3*a1 - b2 + 1/2");
    EXPECT_EQ(MultiPoly().to_string(names), "0");
}

TEST(MultiPoly, RingAxiomsAndEvalHomomorphismOnRandomPolynomials)
{
    for (int trial = 0; trial < 200; ++trial) {
        lefdet::CellRng rng(11, {trial});
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        MultiPoly p = oracle::random_poly(rng, n, 8), q = oracle::random_poly(rng, n, 8),
                  r = oracle::random_poly(rng, n, 8);
        ASSERT_EQ(p + q, q + p);
        ASSERT_EQ(p * q, q * p);
        ASSERT_EQ((p + q) + r, p + (q + r));
        ASSERT_EQ((p * q) * r, p * (q * r));
        ASSERT_EQ(p * (q + r), p * q + p * r);
        ASSERT_TRUE((p - p).is_zero());

        std::vector<Rational> pt;
        for (std::size_t i = 0; i < n; ++i) pt.push_back(rng.rational(true));
        ASSERT_EQ((p * q).eval(pt), p.eval(pt) * q.eval(pt));
        ASSERT_EQ((p + q).eval(pt), p.eval(pt) + q.eval(pt));
        const MultiPoly pq = p * q;
        for (const auto& [e, coeff] : pq.terms()) {
            ASSERT_NE(sgn(coeff), 0);
            ASSERT_EQ(e.size(), n);
        }
    }
}
