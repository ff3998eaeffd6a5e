#include <gtest/gtest.h>

#include "dunkl/superint.hpp"

using namespace dunkl;
using namespace dunkl::superint;

namespace {

Poly Gamma() { return Poly::var(vars::kGamma); }
Poly X(int i) { return Poly::var(classical::xv(i)); }
Poly P(int i) { return Poly::var(classical::pv(i)); }

}  // namespace

TEST(Superint, Reynolds) {
    // B1xB1 contains the reflections of both axes; A1 in R^2 swaps them
    auto swap = make_system("A1");
    const Symbols sy(2);
    EXPECT_TRUE(reynolds(sy.M(0, 1), *swap).is_zero());
    EXPECT_EQ(reynolds(sy.P2(), *swap), sy.P2());
    EXPECT_EQ(reynolds(sy.M(0, 1).pow(2), *swap), sy.M(0, 1).pow(2));
    EXPECT_EQ(reynolds(sy.A(0), *swap), (sy.A(0) + sy.A(1)) * Rational(1, 2));
    auto b2 = make_system("B2");
    for (std::size_t w = 0; w < b2->group.order(); ++w) {
        const Poly r = reynolds(sy.A(0) * sy.A(0) * sy.M(0, 1) + sy.A(1) * sy.A(1) * sy.A(0), *b2);
        EXPECT_EQ(act(r, *b2, static_cast<int>(w)), r);
    }
}

TEST(Superint, ActionMatchesPhaseSpace) {
    // expanding commutes with the action x -> Mx, p -> Mp
    auto sys = make_system("B3");
    const Symbols sy(3);
    const Poly s = sy.M(0, 2) * sy.A(1) + sy.A(2) * sy.P2() + sy.M(1, 2).pow(2);
    for (std::size_t w = 0; w < sys->group.order(); w += 5) {
        std::vector<Poly> image(Monomial::kMaxVars);
        for (int v = 0; v < Monomial::kMaxVars; ++v) image[v] = Poly::var(v);
        for (int i = 0; i < 3; ++i) {
            Poly xi, pi;
            for (int k = 0; k < 3; ++k) {
                xi += X(k) * sys->group.entry(static_cast<int>(w), i, k);
                pi += P(k) * sys->group.entry(static_cast<int>(w), i, k);
            }
            image[classical::xv(i)] = xi;
            image[classical::pv(i)] = pi;
        }
        EXPECT_EQ(expand(act(s, *sys, static_cast<int>(w)), sy), expand(s, sy).substitute(image));
    }
}

TEST(Superint, InvariantGenerators) {
    auto b2 = make_system("B2");
    const Symbols sy(2);
    const auto zero = invariant_generators(*b2, 0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0], Poly(1));
    const auto two = invariant_generators(*b2, 2);
    auto has = [&](const Poly& p) { return std::find(two.begin(), two.end(), p) != two.end(); };
    EXPECT_TRUE(has(sy.P2()));
    EXPECT_TRUE(has(sy.M(0, 1).pow(2)));
    EXPECT_TRUE(has(sy.A(0).pow(2) + sy.A(1).pow(2)));
    for (const auto& g : invariant_generators(*b2, 4))
        for (std::size_t w = 0; w < b2->group.order(); ++w) EXPECT_EQ(act(g, *b2, static_cast<int>(w)), g);
}

TEST(Superint, JacobianRank) {
    const Symbols sy(2);
    const Vec x = {Rational(1), Rational(2)}, p = {Rational(3), Rational(5)};
    EXPECT_EQ(jacobian_rank({sy.P2(), sy.M(0, 1), sy.A(0)}, 2, x, p), 3u);
    EXPECT_EQ(jacobian_rank({sy.P2()}, 2, x, p), 1u);
    // A_1, A_2, M_12, P2 satisfy one relation, so the rank stays 3
    EXPECT_EQ(jacobian_rank({sy.P2(), sy.M(0, 1), sy.A(0), sy.A(1)}, 2, x, p), 3u);
    try {
        jacobian_rank({sy.P2()}, 2, {Rational(0), Rational(1)}, p);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegeneratePoint);
    }
    auto b2 = make_system("B2");
    EXPECT_THROW(jacobian_rank({sy.P2()}, 2, {Rational(1), Rational(1)}, p, b2.get()), Error);
}

TEST(Superint, WeylQuantize) {
    auto sys = make_system("B2");
    const Algebra alg(sys, Gamma());
    const Symbols sy(2);
    EXPECT_EQ(weyl_quantize(sy.P2(), alg), alg.H());
    EXPECT_EQ(weyl_quantize(sy.M(0, 1) * sy.A(0), alg),
              Poly(Rational(1, 2)) * (alg.mul(alg.L(0, 1), alg.A(0)) + alg.mul(alg.A(0), alg.L(0, 1))));
    EXPECT_EQ(weyl_quantize(sy.M(0, 1).pow(2), alg), alg.mul(alg.L(0, 1), alg.L(0, 1)));
    const Element three = weyl_quantize(sy.A(0) * sy.A(0) * sy.A(1), alg);
    EXPECT_EQ(three, Poly(Rational(1, 3)) * (alg.parse("A(1)*A(1)*A(2)") + alg.parse("A(1)*A(2)*A(1)") + alg.parse("A(2)*A(1)*A(1)")));
}

TEST(Superint, LocalHamiltonian) {
    auto b1 = make_system("B1");
    const Operator h = local_hamiltonian(b1, Gamma());
    const Poly g = Poly::var(vars::g(0));
    // on x^k: k(k-1) x^{k-2} - g(g-1) x^{k-2} + 2 gamma x^k / r
    for (int k = 0; k <= 4; ++k) {
        const RExt f(Poly::var(vars::x(0), k));
        const RExt lhs = apply(h, f);
        const RExt rhs = RExt(RatFunc::fraction(Poly::var(vars::x(0), k) * Rational(k * (k - 1)) - Poly::var(vars::x(0), k) * (g * (g - Poly(1))),
                                                Poly::var(vars::x(0), 2))) +
                         RExt(Gamma() * Rational(2)) * f * RExt::r(1).inverse();
        EXPECT_EQ(lhs, rhs) << k;
    }
    // restriction of H to invariant functions
    auto b2 = make_system("B2");
    Catalog c2(b2, Gamma());
    for (const auto& f : invariant_test_functions(*b2, 4)) EXPECT_EQ(apply(c2.H(), f), apply(local_hamiltonian(b2, Gamma()), f));
}

TEST(Superint, CheckIntegral) {
    auto b2 = make_system("B2");
    const Symbols sy(2);
    const auto c = check_integral(sy.M(0, 1).pow(2), b2, Gamma(), 4, 3);
    EXPECT_TRUE(c.pass());
    EXPECT_GT(c.test_functions, 0u);
    auto free = with_multiplicity(*b2, {Poly(0), Poly(0)});
    EXPECT_TRUE(check_integral(sy.P2(), free, Poly(0), 4, 3).pass());
    try {
        check_integral(sy.M(0, 1), make_system("A1"), Gamma(), 2, 3);
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotInvariant);
    }
}

TEST(Superint, NonInvariantElementFails) {
    // A_1 alone is not W-invariant for B2: J f leaves the invariants
    auto b2 = make_system("B2");
    auto num = with_multiplicity(*b2, {Poly(Rational(1, 3)), Poly(Rational(2, 5))});
    const Symbols sy(2);
    const Algebra alg(num, Gamma());
    const CherednikRep rep(num, Gamma());
    const Catalog cat(num, Gamma());
    const CherednikElement J = rep.image(weyl_quantize(sy.A(0), alg));
    bool moved = false;
    for (const auto& f : invariant_test_functions(*num, 2)) {
        const RExt jf = J.apply(f, cat);
        for (std::size_t a = 0; a < num->roots.roots.size(); ++a)
            if (apply(cat.w(num->group.reflection(a)), jf) != jf) moved = true;
    }
    EXPECT_TRUE(moved);
    // an element outside the algebra does not commute with H^loc
    CherednikElement xsq = CherednikElement::one(num).times(Poly::var(vars::x(0)) * Poly::var(vars::x(0)));
    const Operator hloc = cat.Hloc();
    const RExt f(Poly(1));
    EXPECT_NE(apply(hloc, xsq.apply(f, cat)), xsq.apply(apply(hloc, f), cat));
}

TEST(Superint, CertificateN2) {
    for (const char* spec : {"B1xB1", "B2"}) {
        const auto cert = certify(make_system(spec), Gamma(), 4, 4, 1);
        EXPECT_EQ(cert.rank, 3u) << spec;
        EXPECT_EQ(cert.target, 3u);
        EXPECT_TRUE(cert.pass()) << spec;
        EXPECT_EQ(cert.pairwise.size(), 3u);
    }
}
