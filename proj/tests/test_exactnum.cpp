#include <gtest/gtest.h>

#include <random>

#include "dunkl/rext.hpp"

using namespace dunkl;

namespace {

Poly x(int i) { return Poly::var(i - 1); }

Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms, bool with_param) {
    std::uniform_int_distribution<int> coef(-5, 5), var(0, nvars - 1), deg(0, max_deg);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Poly m(make_rational(coef(rng), 1 + (rng() % 3)));
        const int d = deg(rng);
        for (int k = 0; k < d; ++k) m = m * Poly::var(var(rng));
        if (with_param && rng() % 3 == 0) m = m * Poly::var(vars::g(0));
        p += m;
    }
    return p;
}

Poly random_den(std::mt19937_64& rng, int nvars) {
    const Poly forms[] = {x(1), x(1) - x(2), x(1) + x(2), x(2) - Rational(2) * x(3), RExt::q_poly(nvars)};
    Poly d(1);
    const int k = rng() % 3;
    for (int i = 0; i < k; ++i) d = d * forms[rng() % 5];
    return d;
}

// Denominators built as products of known factors, the shape operator code produces.
RatFunc random_ratfunc(std::mt19937_64& rng, int terms, bool with_param) {
    const Poly forms[] = {x(1), x(1) - x(2), x(1) + x(2), x(2) - Rational(2) * x(3), RExt::q_poly(3)};
    RatFunc f(random_poly(rng, 3, 2, terms, with_param));
    const int k = rng() % 3;
    for (int i = 0; i < k; ++i) f = f * RatFunc::fraction(Poly(1), forms[rng() % 5]);
    return f;
}

RExt random_rext(std::mt19937_64& rng, bool with_param = true) {
    RatFunc a = random_ratfunc(rng, 3, with_param);
    RatFunc b = rng() % 2 ? random_ratfunc(rng, 2, with_param) : RatFunc();
    return RExt(a, b, 3);
}

}  // namespace

TEST(Poly, ArithmeticBasics) {
    const Poly p = x(1) + x(2);
    EXPECT_EQ(p * p, x(1).pow(2) + Rational(2) * x(1) * x(2) + x(2).pow(2));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p * p).divide_exact(p).value(), p);
    EXPECT_FALSE((p * p + 1).divide_exact(p).has_value());
    EXPECT_EQ(x(1).derivative(0), Poly(1));
}

TEST(Poly, GcdAgreesWithConstruction) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        const Poly a = random_poly(rng, 3, 2, 3, false);
        const Poly b = random_poly(rng, 3, 2, 3, false);
        const Poly c = random_poly(rng, 3, 2, 2, false);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const Poly g = Poly::gcd(a * c, b * c);
        // c divides the gcd, and the gcd divides both products.
        EXPECT_TRUE(g.divide_exact(c.monic()).has_value());
        EXPECT_TRUE((a * c).divide_exact(g).has_value());
        EXPECT_TRUE((b * c).divide_exact(g).has_value());
    }
}

TEST(Poly, GcdWithParametersAndHigherDegree) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 20; ++it) {
        const Poly a = random_poly(rng, 3, 4, 5, true);
        const Poly b = random_poly(rng, 3, 4, 5, true);
        const Poly c = random_poly(rng, 3, 3, 3, true);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const Poly g = Poly::gcd(a * c, b * c);
        EXPECT_TRUE(g.divide_exact(c.monic()).has_value());
        EXPECT_TRUE((a * c).divide_exact(g).has_value());
        EXPECT_TRUE((b * c).divide_exact(g).has_value());
        // The cofactors are coprime.
        EXPECT_TRUE(Poly::gcd(*(a * c).divide_exact(g), *(b * c).divide_exact(g)).is_constant());
    }
}

TEST(RatFunc, NormalizeCancelsCommonFactor) {
    const RatFunc f = RatFunc::fraction(Rational(2) * x(1).pow(2) - 2, Rational(4) * x(1) - 4);
    EXPECT_EQ(f.num(), (x(1) + 1) * make_rational(1, 2));
    EXPECT_EQ(f.den(), Poly(1));
}

TEST(RatFunc, NormalizeZeroNumerator) {
    const RatFunc f = RatFunc::fraction(Poly(), x(1) * x(2));
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.den(), Poly(1));
}

TEST(RatFunc, NormalizeMonomialCancellation) {
    const RatFunc f = RatFunc::fraction(x(1) * x(2), x(2));
    EXPECT_EQ(f.num(), x(1));
    EXPECT_EQ(f.den(), Poly(1));
}

TEST(RatFunc, ZeroDenominatorRejected) {
    try {
        RatFunc::fraction(x(1), Poly());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroDenominator);
    }
}

TEST(RatFunc, DenominatorMonicAndCoprime) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 60; ++it) {
        const Poly c = random_poly(rng, 3, 1, 2, false);
        if (c.is_zero()) continue;
        const Poly n = random_poly(rng, 3, 2, 3, true) * c;
        const Poly d = random_den(rng, 3) * c * Rational(-3);
        const RatFunc f = RatFunc::fraction(n, d);
        if (f.is_zero()) continue;
        EXPECT_EQ(f.den().leading().coeff, 1);
        EXPECT_TRUE(Poly::gcd(f.num(), f.den()).is_constant());
        // Same value: n * den(f) == num(f) * d
        EXPECT_EQ(n * f.den(), f.num() * d);
    }
}

TEST(RatFunc, GenericDenominatorsCombine) {
    const RatFunc a = RatFunc::fraction(Poly(1), x(1).pow(2) - x(2).pow(2));
    const RatFunc b = RatFunc::fraction(Poly(1), x(1) - x(2));
    const RatFunc s = a + b;
    // 1/((x1-x2)(x1+x2)) + 1/(x1-x2) = (1 + x1 + x2)/(x1^2 - x2^2)
    EXPECT_EQ(s, RatFunc::fraction(x(1) + x(2) + 1, x(1).pow(2) - x(2).pow(2)));
    EXPECT_EQ(a * RatFunc(x(1) + x(2)), b);
}

TEST(RExt, PartialExamples) {
    EXPECT_EQ(RExt(x(1).pow(2)).partial(0), RExt(Rational(2) * x(1)));
    const RExt inv_x = RExt(RatFunc::fraction(Poly(1), x(1)));
    EXPECT_EQ(inv_x.partial(0), RExt(RatFunc::fraction(Poly(-1), x(1).pow(2))));
    const RExt dr = RExt::r(2).partial(0);
    EXPECT_TRUE(dr.a().is_zero());
    EXPECT_EQ(dr.b(), RatFunc::fraction(x(1), RExt::q_poly(2)));
}

TEST(RExt, ActLinearSwap) {
    const std::vector<Rational> swap = {0, 1, 1, 0};
    EXPECT_EQ(RExt(x(1)).act_linear(2, swap), RExt(x(2)));
    EXPECT_EQ(RExt::r(2).act_linear(2, swap), RExt::r(2));
    const RExt f(RatFunc::fraction(x(1) * x(2), x(1) - x(2)));
    // Oracle: substitute x1 <-> x2 into numerator and denominator independently.
    const Poly img[2] = {x(2), x(1)};
    const RatFunc oracle = RatFunc::fraction((x(1) * x(2)).substitute(img), (x(1) - x(2)).substitute(img));
    EXPECT_EQ(f.act_linear(2, swap), RExt(oracle));
    EXPECT_EQ(oracle, -RatFunc::fraction(x(1) * x(2), x(1) - x(2)));
}

TEST(RExt, ActLinearRejectsNonOrthogonal) {
    const std::vector<Rational> m = {1, 1, 0, 1};
    try {
        RExt(x(1)).act_linear(2, m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotOrthogonal);
    }
}

TEST(RExt, InvertExamples) {
    const RExt r = RExt::r(2);
    const RExt ir = r.inverse();
    EXPECT_TRUE(ir.a().is_zero());
    EXPECT_EQ(ir.b(), RatFunc::fraction(Poly(1), RExt::q_poly(2)));
    EXPECT_EQ(r * ir, RExt(1));

    const RExt f = RExt(x(1)) + r;
    const RExt fi = f.inverse();
    EXPECT_EQ(fi.a(), RatFunc::fraction(x(1), -x(2).pow(2)));
    EXPECT_EQ(fi.b(), RatFunc::fraction(Poly(-1), -x(2).pow(2)));
    EXPECT_EQ(f * fi, RExt(1));
    try {
        RExt().inverse();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroElement);
    }
}

TEST(RExt, RingAxiomsOnRandomElements) {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 25; ++it) {
        const RExt a = random_rext(rng), b = random_rext(rng), c = random_rext(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(RExt, MixedPartialsCommute) {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 25; ++it) {
        const RExt f = random_rext(rng);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < i; ++j) EXPECT_EQ(f.partial(i).partial(j), f.partial(j).partial(i));
    }
}

TEST(RExt, PartialIsADerivation) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        const RExt f = random_rext(rng), g = random_rext(rng);
        EXPECT_EQ((f * g).partial(1), f.partial(1) * g + f * g.partial(1));
    }
}

TEST(RExt, ActLinearComposes) {
    // Two orthogonal maps of R^3: a coordinate swap and a sign flip with a
    // rational rotation by the 3-4-5 angle.
    const std::vector<Rational> m1 = {0, 1, 0, 1, 0, 0, 0, 0, -1};
    const std::vector<Rational> m2 = {make_rational(3, 5), make_rational(-4, 5), 0, make_rational(4, 5), make_rational(3, 5), 0, 0, 0, 1};
    std::vector<Rational> m21(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) m21[i * 3 + j] += m2[i * 3 + k] * m1[k * 3 + j];
    std::mt19937_64 rng(17);
    for (int it = 0; it < 20; ++it) {
        const RExt f = random_rext(rng);
        EXPECT_EQ(f.act_linear(3, m1).act_linear(3, m2), f.act_linear(3, m21));
    }
}

TEST(RExt, InverseOnRandomElements) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 20; ++it) {
        const RExt f = random_rext(rng, false);
        if (f.is_zero()) continue;
        EXPECT_EQ(f * f.inverse(), RExt(1));
    }
}

TEST(RatFunc, ExpandedDenominatorsHonourFieldAxioms) {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 15; ++it) {
        const RatFunc a = RatFunc::fraction(random_poly(rng, 3, 2, 3, true), random_den(rng, 3));
        const RatFunc b = RatFunc::fraction(random_poly(rng, 3, 2, 3, true), random_den(rng, 3));
        const RatFunc c = RatFunc::fraction(random_poly(rng, 3, 2, 2, false), random_den(rng, 3));
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a.derivative(0).derivative(1), a.derivative(1).derivative(0));
        if (!c.is_zero()) EXPECT_EQ((a / c) * c, a);
    }
}
