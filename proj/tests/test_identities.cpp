#include <gtest/gtest.h>

#include <set>

#include "dunkl/identities.hpp"

using namespace dunkl;

namespace {

Poly Gamma() { return Poly::var(vars::kGamma); }

std::string failures(const SuiteReport& s) {
    std::string out;
    for (const auto& r : s.reports)
        if (!r.pass) out += r.identity + ": " + r.residual.value_or("?") + "\n";
    return out;
}

std::shared_ptr<const CoxeterSystem> zero_coupling(const std::string& spec) {
    auto sys = make_system(spec);
    return with_multiplicity(*sys, std::vector<Poly>(sys->roots.num_orbits, Poly(0)));
}

}  // namespace

TEST(Identities, CatalogShape) {
    const auto& cat = identity_catalog();
    ASSERT_EQ(cat.size(), 22u);
    std::set<std::string> names;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        EXPECT_EQ(cat[i].number, static_cast<int>(i) + 1);
        EXPECT_FALSE(cat[i].anchor.empty());
        EXPECT_EQ(cat[i].anchor.front(), '"');
        names.insert(cat[i].name);
    }
    EXPECT_EQ(names.size(), 22u);
    for (int i = 16; i <= 20; ++i) EXPECT_NE(cat[i - 1].statement.find('A'), std::string::npos) << i;
    for (int i = 1; i <= 7; ++i) EXPECT_EQ(cat[i - 1].statement.find('A'), std::string::npos) << i;
    EXPECT_EQ(find_identity("A_A").number, 18);
    EXPECT_EQ(find_identity("2").name, "com_nn");
    EXPECT_THROW(find_identity("nope"), Error);
}

TEST(Identities, RankOneSuites) {
    for (const char* spec : {"A1", "B1"}) {
        Catalog cat(make_system(spec), Gamma());
        const auto s = check_all(cat);
        EXPECT_EQ(s.passed, 22u) << spec << "\n" << failures(s);
    }
}

TEST(Identities, A2SuiteParallel) {
    Catalog cat(make_system("A2"), Gamma());
    const auto s = check_all(cat, {}, 4);
    EXPECT_EQ(s.passed, 22u) << failures(s);
    EXPECT_EQ(s.reports.front().g_mode, "symbolic");
    EXPECT_EQ(s.reports.front().gamma_mode, "symbolic");
    for (std::size_t i = 0; i < s.reports.size(); ++i) EXPECT_EQ(s.reports[i].identity, identity_catalog()[i].name);
}

TEST(Identities, GammaZeroSuite) {
    Catalog cat(make_system("B2"), Poly(0));
    const auto s = check_all(cat, {}, 4);
    EXPECT_EQ(s.passed, 22u) << failures(s);
    EXPECT_EQ(s.reports.front().gamma_mode, "0");
}

TEST(Identities, WeylLimit) {
    for (const char* spec : {"A2", "B2", "A1xA1"}) {
        Catalog cat(zero_coupling(spec), Gamma());
        const auto r = check_identity(find_identity("com_nn"), cat);
        EXPECT_TRUE(r.pass) << spec;
        for (int i = 0; i < cat.dim(); ++i)
            for (int j = 0; j < cat.dim(); ++j)
                EXPECT_EQ(cat.S(i, j), i == j ? cat.one() : Operator(cat.system())) << spec;
    }
}

TEST(Identities, NegativeControls) {
    for (const char* spec : {"A2", "B2"}) {
        Catalog cat(make_system(spec), Gamma());
        cat.set_perturbed(true);
        for (const char* name : {"A_forms", "A_A", "A_sq"}) {
            const auto r = check_identity(find_identity(name), cat);
            EXPECT_FALSE(r.pass) << spec << " " << name;
            ASSERT_TRUE(r.residual.has_value());
            EXPECT_NE(r.residual->find("leading"), std::string::npos);
        }
    }
}

// Classical Laplace-Runge-Lenz, built from partial derivatives only.
TEST(Identities, ClassicalSquareOfLRL) {
    for (const char* spec : {"A2", "B2", "B3"}) {
        auto sys = zero_coupling(spec);
        Catalog cat(sys, Poly(0));
        const int n = sys->dim();
        auto x = [&](int i) { return Operator::coefficient(sys, RExt(Poly::var(vars::x(i)))); };
        auto d = [&](int i) { return Operator::derivative(sys, i); };
        auto Lc = [&](int i, int j) { return compose(x(i), d(j)) - compose(x(j), d(i)); };
        Operator lap(sys), l2(sys), a2(sys);
        for (int i = 0; i < n; ++i) lap += compose(d(i), d(i));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) l2 += compose(Lc(i, j), Lc(i, j));
        for (int i = 0; i < n; ++i) {
            Operator a(sys);
            for (int j = 0; j < n; ++j) a += make_rational(-1, 2) * anticommutator(Lc(i, j), d(j));
            EXPECT_EQ(a, cat.A(i)) << spec << " i=" << i;
            a2 += compose(a, a);
        }
        const Rational c = Rational((n - 1) * (n - 1)) / 4;
        EXPECT_EQ(a2, compose(lap, l2 - c * Operator::identity(sys))) << spec;
        EXPECT_TRUE(check_identity(find_identity("A_sq"), cat).pass) << spec;
    }
}

TEST(Identities, OrderIndependence) {
    Catalog a(make_system("B2"), Gamma());
    Catalog b(make_system("B2"), Gamma());
    std::vector<std::string> rev;
    for (auto it = identity_catalog().rbegin(); it != identity_catalog().rend(); ++it) rev.push_back(it->name);
    const auto fwd = check_all(a);
    const auto bwd = check_all(b, rev);
    ASSERT_EQ(fwd.reports.size(), bwd.reports.size());
    for (std::size_t i = 0; i < fwd.reports.size(); ++i) {
        const auto& r = bwd.reports[bwd.reports.size() - 1 - i];
        EXPECT_EQ(fwd.reports[i].identity, r.identity);
        EXPECT_EQ(fwd.reports[i].pass, r.pass);
        EXPECT_EQ(fwd.reports[i].checks, r.checks);
    }
    EXPECT_EQ(fwd.passed, 22u) << failures(fwd);
}

TEST(Identities, RootScaling) {
    auto sys = make_system("B2");
    RootSystem rs = sys->roots;
    for (std::size_t k = 0; k < rs.roots.size(); ++k)
        for (auto& c : rs.roots[k]) c *= rs.orbit[k] == 0 ? Rational(3) : Rational(1, 2);
    Catalog cat(make_system(rs), Gamma());
    const auto s = check_all(cat, {"com_nn", "comLL", "A_A", "A_sq", "H_forms"}, 2);
    EXPECT_EQ(s.passed, 5u) << failures(s);
}
