#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/cherednik.hpp"
#include "dunkl/classical.hpp"

namespace dunkl::superint {

/// Polynomials in the commuting symbols P2, M_ij (i<j), A_i of R^cl_N, stored
/// in Poly with P2 at index 0, the M_ij next in pair order, then A_1..A_N.
/// N <= 4.
using SymbolPoly = Poly;

struct Symbols {
    int n = 0;
    explicit Symbols(int n);
    int count() const { return 1 + n * (n - 1) / 2 + n; }
    int p2() const { return 0; }
    int m(int i, int j) const;  // i < j
    int a(int i) const { return 1 + n * (n - 1) / 2 + i; }
    /// Filtration weight: M and A count 1, P2 counts 2.
    int weight(int var) const { return var == 0 ? 2 : 1; }
    std::string name(int var) const;

    /// Antisymmetric: M(j, i) = -M(i, j).
    SymbolPoly M(int i, int j) const;
    SymbolPoly A(int i) const { return Poly::var(a(i)); }
    SymbolPoly P2() const { return Poly::var(p2()); }
};

std::string render(const SymbolPoly& s, const Symbols& sy);
int symbol_degree(const SymbolPoly& s, const Symbols& sy);

/// w acts by x -> M_w x, p -> M_w p: M as the exterior square, A as the
/// standard representation, P2 fixed.
SymbolPoly act(const SymbolPoly& s, const CoxeterSystem& sys, int w);
SymbolPoly reynolds(const SymbolPoly& s, const CoxeterSystem& sys);

/// Reynolds images of all symbol monomials of weight <= degree, kept when
/// linearly independent of the earlier ones.  Sorted by weight.
std::vector<SymbolPoly> invariant_generators(const CoxeterSystem& sys, int degree);

/// The phase-space polynomial (x_i at i, p_i at classical::pv(i)).
classical::PhasePoly expand(const SymbolPoly& s, const Symbols& sy);

/// Exact rank of the Jacobian in (x, p) at the point.  DegeneratePoint when a
/// coordinate of x or p vanishes or x lies on a mirror of `sys` (if given).
std::size_t jacobian_rank(const std::vector<SymbolPoly>& gens, int n, const Vec& x, const Vec& p,
                          const CoxeterSystem* sys = nullptr);

struct Selection {
    std::vector<SymbolPoly> generators;
    std::size_t rank = 0;
    Vec x, p;
};

/// Greedy: walks `candidates` in order and keeps each one that raises the
/// Jacobian rank at a seeded random point, up to 2N-1.  Degenerate points
/// are resampled a bounded number of times.
Selection select_generators(const std::vector<SymbolPoly>& candidates, const CoxeterSystem& sys, std::uint64_t seed);

/// Symmetrization over the orderings of the factors of every monomial.
Element weyl_quantize(const SymbolPoly& s, const Algebra& alg);

/// Delta - sum g_a (g_a - 1) (a,a) / x_a^2 + 2 gamma / r.
Operator local_hamiltonian(std::shared_ptr<const CoxeterSystem> sys, const Poly& gamma);

/// W-invariant polynomials of degree <= D times {1, r}.
std::vector<RExt> invariant_test_functions(const CoxeterSystem& sys, int D);

struct IntegralCheck {
    std::string generator;
    bool commutes_with_H = false;       // [H, J] = 0 as operators
    bool preserves_invariants = false;  // J f is W-invariant
    bool commutes_with_Hloc = false;    // [H^loc, J] f = 0
    std::size_t test_functions = 0;
    /// Couplings used for the two extensional checks, e.g. "g1=3/7".
    std::string couplings;
    bool pass() const { return commutes_with_H && preserves_invariants && commutes_with_Hloc; }
};

/// J = rho(weyl_quantize(q)) checked three ways.  The operator identity uses
/// the couplings of `sys` as given; the checks on test functions replace
/// symbolic couplings by seeded random rationals (gamma stays as given).
/// NotInvariant unless q is fixed by reynolds.
IntegralCheck check_integral(const SymbolPoly& q, std::shared_ptr<const CoxeterSystem> sys, const Poly& gamma, int D,
                             std::uint64_t seed);

struct IntegralCertificate {
    std::string system;
    int n = 0;
    std::vector<SymbolPoly> generators;
    std::vector<std::string> rendered;
    std::size_t rank = 0;
    std::size_t target = 0;
    std::vector<IntegralCheck> checks;
    /// Recorded only: whether the quantized integrals i < j commute.
    std::vector<std::pair<std::pair<int, int>, bool>> pairwise;
    int max_degree = 0;
    int D = 0;
    std::uint64_t seed = 0;
    bool pass() const;
};

IntegralCertificate certify(std::shared_ptr<const CoxeterSystem> sys, const Poly& gamma, int max_degree, int D, std::uint64_t seed,
                            int jobs = 1);

}  // namespace dunkl::superint
