#include <gtest/gtest.h>

#include "dunkl/coxeter.hpp"
#include "dunkl/linalg.hpp"

using namespace dunkl;

namespace {

Rational dot(const Vec& a, const Vec& b) {
    Rational s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

}  // namespace

TEST(Linalg, RankOfSmallMatrices) {
    EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1u);
    EXPECT_EQ(rank({{make_rational(1, 2), 1, 0}, {0, 1, make_rational(1, 3)}, {1, 3, make_rational(1, 3)}}), 2u);
    EXPECT_EQ(rank({{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3u);
}

TEST(Linalg, RankMatchesGaussianElimination) {
    // Bareiss against plain rational elimination on a dependent 5x6 matrix.
    std::vector<Vec> rows;
    for (int i = 0; i < 4; ++i) {
        Vec r;
        for (int j = 0; j < 6; ++j) r.push_back(make_rational((i * 7 + j * 3) % 11 - 5, 1 + (i + j) % 4));
        rows.push_back(r);
    }
    Vec combo(6);
    for (int j = 0; j < 6; ++j) combo[j] = rows[0][j] * 3 - rows[2][j] / 2;
    rows.push_back(combo);
    const auto gauss = field_rank(rows, [](const Rational& q) { return q == 0; });
    EXPECT_EQ(rank(rows), gauss);
    EXPECT_EQ(gauss, 4u);
}

TEST(Linalg, RowBasisDetectsDependence) {
    RowBasis b(3);
    EXPECT_TRUE(b.add({1, 1, 0}));
    EXPECT_TRUE(b.add({0, 1, 1}));
    EXPECT_FALSE(b.add({1, 2, 1}));
    EXPECT_TRUE(b.contains({2, 3, 1}));
    EXPECT_TRUE(b.add({0, 0, 5}));
    EXPECT_EQ(b.size(), 3u);
}

TEST(Coxeter, StandardModels) {
    const auto a2 = build_root_system("A", 2, 3);
    ASSERT_EQ(a2.roots.size(), 3u);
    EXPECT_EQ(a2.roots[0], (Vec{1, -1, 0}));
    EXPECT_EQ(a2.roots[1], (Vec{1, 0, -1}));
    EXPECT_EQ(a2.roots[2], (Vec{0, 1, -1}));
    EXPECT_EQ(a2.num_orbits, 1);

    const auto b2 = build_root_system("B", 2, 2);
    ASSERT_EQ(b2.roots.size(), 4u);
    EXPECT_EQ(b2.roots[0], (Vec{1, 0}));
    EXPECT_EQ(b2.roots[1], (Vec{0, 1}));
    EXPECT_EQ(b2.roots[2], (Vec{1, -1}));
    EXPECT_EQ(b2.roots[3], (Vec{1, 1}));
    EXPECT_EQ(b2.num_orbits, 2);
    EXPECT_EQ(b2.orbit[0], b2.orbit[1]);
    EXPECT_NE(b2.orbit[0], b2.orbit[2]);

    EXPECT_EQ(build_root_system("G", 2).num_orbits, 2);
    EXPECT_EQ(build_root_system("F", 4).num_orbits, 2);
    EXPECT_EQ(build_root_system("D", 4).num_orbits, 1);
    EXPECT_EQ(parse_root_system("A1xA1").num_orbits, 2);
}

TEST(Coxeter, UnsupportedAndBadSpecs) {
    auto kind = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Overflow;
    };
    EXPECT_EQ(kind([] { build_root_system("I", 5, 2); }), ErrorKind::UnsupportedField);
    EXPECT_EQ(kind([] { parse_root_system("I2_7"); }), ErrorKind::UnsupportedField);
    EXPECT_EQ(kind([] { parse_root_system("H3"); }), ErrorKind::UnsupportedField);
    EXPECT_EQ(kind([] { parse_root_system("H4"); }), ErrorKind::UnsupportedField);
    EXPECT_EQ(kind([] { parse_root_system("A2@2"); }), ErrorKind::BadDimension);
    EXPECT_EQ(kind([] { parse_root_system("Q3"); }), ErrorKind::BadSpec);
    EXPECT_EQ(kind([] { parse_root_system("A"); }), ErrorKind::BadSpec);
    EXPECT_EQ(parse_root_system("I2_6").roots.size(), 6u);
    EXPECT_EQ(parse_root_system("G2@4").ambient, 4);
    EXPECT_EQ(parse_root_system("G2@4").label, "G2@4");
}

TEST(Coxeter, GroupOrders) {
    const std::pair<const char*, std::size_t> cases[] = {
        {"A1", 2}, {"B1", 2}, {"A1xA1", 4}, {"A2", 6}, {"B2", 8}, {"G2", 12},
        {"A3", 24}, {"B3", 48}, {"D4", 192}, {"F4", 1152}, {"A1xB2", 16}};
    for (const auto& [spec, order] : cases) EXPECT_EQ(make_system(spec)->group.order(), order) << spec;
}

TEST(Coxeter, CapExceeded) {
    try {
        make_system("A2", 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    }
}

TEST(Coxeter, TableIsAGroupAndConjugatesReflections) {
    const auto sys = make_system("B3");
    const auto& g = sys->group;
    const int n = static_cast<int>(g.order());
    for (int a = 0; a < n; ++a) {
        EXPECT_EQ(g.mul(a, g.inverse(a)), 0);
        EXPECT_EQ(g.mul(0, a), a);
    }
    const auto& roots = sys->roots.roots;
    for (int w = 0; w < n; w += 5)
        for (std::size_t k = 0; k < roots.size(); ++k) {
            // w s_a w^{-1} = s_{w(a)}
            const auto [img, sign] = g.root_image(w, static_cast<int>(k));
            EXPECT_EQ(g.mul(g.mul(w, g.reflection(k)), g.inverse(w)), g.reflection(img));
            Vec wa = g.apply(w, roots[k]);
            for (auto& c : wa) c *= sign;
            EXPECT_EQ(wa, roots[img]);
        }
    // matrices compose like the table
    for (int a = 0; a < n; a += 7)
        for (int b = 0; b < n; b += 3) {
            Vec m(9, Rational(0));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k) m[i * 3 + j] += g.entry(a, i, k) * g.entry(b, k, j);
            EXPECT_EQ(g.find(m), g.mul(a, b));
        }
}

TEST(Coxeter, LongestElement) {
    EXPECT_TRUE(make_system("B2")->group.minus_identity().has_value());
    EXPECT_TRUE(make_system("B1")->group.minus_identity().has_value());
    EXPECT_FALSE(make_system("A2")->group.minus_identity().has_value());
}

TEST(Coxeter, ExchangeElements) {
    const auto sys = make_system("B2");
    const auto S = s_element(*sys);
    // sum_i S_ii = N - 2S
    GroupAlgebra trace;
    for (int i = 0; i < 2; ++i) trace = ga_add(trace, exchange_element(*sys, i, i));
    EXPECT_EQ(trace, ga_add(ga_scale(ga_unit(), Poly(2)), ga_scale(S, Poly(-2))));
    // S commutes with every reflection
    for (std::size_t k = 0; k < sys->roots.roots.size(); ++k) {
        const auto s = ga_unit(sys->group.reflection(k));
        EXPECT_EQ(ga_mul(sys->group, S, s), ga_mul(sys->group, s, S));
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(exchange_element(*sys, i, j), exchange_element(*sys, j, i));
}

TEST(Coxeter, RankOneExchange) {
    // {+-a} in R^1: S_11 = 1 + 2 g s regardless of the length of a
    const auto sys = make_system("B1");
    const auto s11 = exchange_element(*sys, 0, 0);
    ASSERT_EQ(s11.size(), 2u);
    EXPECT_EQ(s11.at(0), Poly(1));
    EXPECT_EQ(s11.at(sys->group.reflection(0)), Poly::var(vars::g(0)) * Rational(2));
    RootSystem scaled = sys->roots;
    scaled.roots[0] = Vec{make_rational(-7, 3)};
    EXPECT_EQ(exchange_element(*make_system(scaled), 0, 0), s11);
}

TEST(Coxeter, ZeroCouplingAndProducts) {
    const auto sys = make_system("A1xA1");
    const auto zero = with_multiplicity(*sys, {Poly(0), Poly(0)});
    EXPECT_TRUE(s_element(*zero).empty());
    EXPECT_EQ(exchange_element(*zero, 0, 0), ga_unit());
    EXPECT_TRUE(exchange_element(*zero, 0, 1).empty());
    const auto S = s_element(*sys);
    GroupAlgebra expect{{sys->group.reflection(0), -Poly::var(vars::g(0))}, {sys->group.reflection(1), -Poly::var(vars::g(1))}};
    EXPECT_EQ(S, expect);
}

TEST(Coxeter, TrailingCoordinateIsInert) {
    const auto sys = make_system("B2@3");
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(exchange_element(*sys, i, 2), i == 2 ? ga_unit() : GroupAlgebra{});
    }
    for (std::size_t w = 0; w < sys->group.order(); ++w) EXPECT_EQ(sys->group.entry(w, 2, 2), 1);
}

TEST(Coxeter, RootsPermutedAndOrthogonalMatrices) {
    const auto sys = make_system("F4");
    for (std::size_t w = 0; w < sys->group.order(); w += 37) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rational s(0);
                for (int k = 0; k < 4; ++k) s += sys->group.entry(w, k, i) * sys->group.entry(w, k, j);
                EXPECT_EQ(s, i == j ? 1 : 0);
            }
        for (const auto& r : sys->roots.roots) EXPECT_EQ(dot(r, r), dot(sys->group.apply(w, r), sys->group.apply(w, r)));
    }
}
