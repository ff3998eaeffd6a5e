#include <gtest/gtest.h>

#include <random>

#include "dunkl/classical.hpp"

using namespace dunkl;
using namespace dunkl::classical;

namespace {

Poly X(int i) { return Poly::var(xv(i)); }
Poly P(int i) { return Poly::var(pv(i)); }

MMonomial random_monomial(int points, int max_degree, std::mt19937_64& rng) {
    MMonomial m(points);
    std::uniform_int_distribution<int> deg(0, max_degree), pt(0, points - 1);
    for (int d = deg(rng); d > 0; --d) {
        int i = pt(rng), j = pt(rng);
        while (j == i) j = pt(rng);
        ++m.at(i, j);
    }
    return m;
}

}  // namespace

TEST(Classical, Definitions) {
    EXPECT_EQ(m_poly(0, 1, 2), X(0) * P(1) - X(1) * P(0));
    EXPECT_EQ(m_poly(1, 0, 2), -m_poly(0, 1, 2));
    EXPECT_EQ(msq_poly(2), m_poly(0, 1, 2).pow(2));
    EXPECT_EQ(acl_poly(0, 2), P(1) * (X(1) * P(0) - X(0) * P(1)));
    EXPECT_THROW(m_poly(0, 2, 2), Error);
    EXPECT_THROW(m_poly(1, 1, 3), Error);
    // Lagrange: M^2 is the sum of squares of the M_ij
    for (int m = 2; m <= 5; ++m) {
        Poly s;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) s += m_poly(i, j, m).pow(2);
        EXPECT_EQ(msq_poly(m), s);
    }
    // A^cl_i = p_i (x.p) - x_i p^2 up to the diagonal term, which cancels
    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i < n; ++i) {
            Poly xp, pp;
            for (int k = 0; k < n; ++k) {
                xp += X(k) * P(k);
                pp += P(k) * P(k);
            }
            EXPECT_EQ(acl_poly(i, n), P(i) * xp - X(i) * pp);
        }
}

TEST(Classical, Plucker) {
    const Poly lhs = m_poly(0, 1, 4) * m_poly(2, 3, 4) - m_poly(0, 2, 4) * m_poly(1, 3, 4) + m_poly(0, 3, 4) * m_poly(1, 2, 4);
    EXPECT_TRUE(lhs.is_zero());
    const auto r = rewrite_noncrossing(MMonomial::of(4, {{0, 2}, {1, 3}}));
    const MCombination want = {{MMonomial::of(4, {{0, 1}, {2, 3}}), Rational(1)}, {MMonomial::of(4, {{0, 3}, {1, 2}}), Rational(1)}};
    EXPECT_EQ(r, want);
    const MMonomial nested = MMonomial::of(4, {{0, 3}, {1, 2}});
    EXPECT_EQ(rewrite_noncrossing(nested), (MCombination{{nested, Rational(1)}}));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const MMonomial m = random_monomial(3, 6, rng);
        EXPECT_EQ(rewrite_noncrossing(m), (MCombination{{m, Rational(1)}}));
    }
}

TEST(Classical, RewriteByExpansion) {
    std::mt19937_64 rng(11);
    for (int points = 2; points <= 5; ++points)
        for (int t = 0; t < 40; ++t) {
            const MMonomial m = random_monomial(points, 6, rng);
            const MCombination c = rewrite_noncrossing(m);
            for (const auto& [mono, k] : c) {
                EXPECT_FALSE(mono.crossing()) << mono.to_string();
                EXPECT_EQ(mono.degree(), m.degree());
            }
            EXPECT_EQ(expand(c), m.expand()) << m.to_string();
        }
}

TEST(Classical, QuotientBasis) {
    const auto b2 = quotient_basis(2, 2);
    ASSERT_EQ(b2.size(), 2u);
    EXPECT_EQ(b2[0].degree(), 0);
    EXPECT_EQ(b2[1], MMonomial::of(2, {{0, 1}}));
    const auto b3 = quotient_basis(3, 2);
    EXPECT_EQ(b3.size(), 9u);
    for (const auto& m : b3) EXPECT_NE(m, MMonomial::of(3, {{1, 2}, {1, 2}}));
    for (const auto& m : quotient_basis(5, 3)) {
        EXPECT_FALSE(m.crossing());
        EXPECT_LE(m.at(3, 4), 1);
    }
}

TEST(Classical, QuotientIndependenceOnNullVariety) {
    for (auto [points, degree] : {std::pair{3, 2}, {3, 4}, {4, 2}, {4, 3}, {5, 2}}) {
        const auto basis = quotient_basis(points, degree);
        EXPECT_EQ(null_variety_rank(basis, 20, 5), basis.size()) << points << " points, degree " << degree;
        // the square of the last pair is a combination of the basis there
        auto extended = basis;
        MMonomial sq(points);
        sq.at(points - 2, points - 1) = 2;
        extended.push_back(sq);
        EXPECT_EQ(null_variety_rank(extended, 20, 5), basis.size());
    }
}

TEST(Classical, NormalizeNullPair) {
    const auto a = normalize_null_pair({Rational(1), Rational(2)}, {Rational(2), Rational(4)});
    EXPECT_EQ(a.lambda, 1);
    EXPECT_EQ(a.mu, -2);
    EXPECT_EQ(a.phat, (Vec{Rational(0), Rational(0)}));
    EXPECT_THROW(normalize_null_pair({Rational(0), Rational(0)}, {Rational(1), Rational(3)}), Error);
    EXPECT_THROW(normalize_null_pair({Rational(1), Rational(0)}, {Rational(0), Rational(1)}), Error);
    try {
        normalize_null_pair({Rational(0), Rational(0)}, {Rational(0), Rational(0)});
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
    }
    try {
        normalize_null_pair({Rational(1), Rational(0)}, {Rational(0), Rational(1)});
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotNull);
    }
}

TEST(Classical, NullPairsPreserveM) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
    for (int t = 0; t < 100; ++t) {
        const int points = 3 + t % 3;
        // real null pairs are parallel
        Vec x(points), p(points);
        const Rational c = make_rational(num(rng), den(rng));
        do
            for (auto& v : x) v = make_rational(num(rng), den(rng));
        while (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; }));
        for (int k = 0; k < points; ++k) p[k] = c * x[k];
        const auto nn = normalize_null_pair(x, p);
        Rational xp(0), pp(0);
        for (int k = 0; k < points; ++k) {
            xp += nn.xhat[k] * nn.phat[k];
            pp += nn.phat[k] * nn.phat[k];
            for (int j = 0; j < points; ++j) EXPECT_EQ(nn.xhat[k] * nn.phat[j] - nn.xhat[j] * nn.phat[k], x[k] * p[j] - x[j] * p[k]);
        }
        EXPECT_EQ(xp, 0);
        EXPECT_EQ(pp, 0);

        auto [gx, gp] = sample_null_pair(points, rng);
        const auto gn = normalize_null_pair(gx, gp);
        Gauss gxp, gpp, xx;
        for (int k = 0; k < points; ++k) {
            gxp = gxp + gn.xhat[k] * gn.phat[k];
            gpp = gpp + gn.phat[k] * gn.phat[k];
            xx = xx + gx[k] * gx[k];
            for (int j = 0; j < points; ++j)
                EXPECT_EQ(gn.xhat[k] * gn.phat[j] - gn.xhat[j] * gn.phat[k], gx[k] * gp[j] - gx[j] * gp[k]);
        }
        EXPECT_TRUE(gxp.is_zero());
        EXPECT_TRUE(gpp.is_zero());
        EXPECT_FALSE(xx.is_zero());
    }
}

TEST(Classical, HighestSymbol) {
    NormalMonomial m;
    m.l_exp = {1, 0, 0};
    m.k = {0, 0, 0};
    EXPECT_EQ(highest_symbol(m, 3), X(0) * P(1) - X(1) * P(0));
    m.k = {1, 0, 0};
    EXPECT_EQ(highest_symbol(m, 3), m_poly(0, 1, 3) * acl_poly(0, 3));
    m.l_exp = {0, 0, 0};
    m.k = {0, 0, 0};
    m.h = 1;
    EXPECT_EQ(highest_symbol(m, 3), P(0) * P(0) + P(1) * P(1) + P(2) * P(2));
    m.w = 1;
    try {
        highest_symbol(m, 3);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::GroupPartNotIdentity);
    }
}
