#pragma once

#include <map>
#include <random>
#include <vector>

#include "dunkl/linalg.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/rgw.hpp"

namespace dunkl::classical {

/// Phase-space polynomials live in Poly with x_i at index i and p_i at
/// kMaxPoints + i (0-based points).
constexpr int kMaxPoints = 7;
constexpr int xv(int i) { return i; }
constexpr int pv(int i) { return kMaxPoints + i; }
using PhasePoly = Poly;

/// M_ij = x_i p_j - x_j p_i on `points` points.  IndexOutOfRange otherwise.
PhasePoly m_poly(int i, int j, int points);
/// A_i^cl = sum_j p_j (x_j p_i - x_i p_j).
PhasePoly acl_poly(int i, int n);
/// M^2_(m) = sum x^2 sum p^2 - (sum x p)^2 over the first m coordinates.
PhasePoly msq_poly(int m);
PhasePoly p_squared(int n);

/// Commutative monomial in the M_ij, exponents over the pairs (0,1),(0,2),...
struct MMonomial {
    int points = 0;
    std::vector<int> exp;

    explicit MMonomial(int points = 0);
    static MMonomial of(int points, std::initializer_list<std::pair<int, int>> factors);
    int& at(int i, int j);
    int at(int i, int j) const;
    int degree() const;
    bool crossing() const;
    /// Number of crossing pairs of arcs, with multiplicity.
    int crossings() const;
    PhasePoly expand() const;
    std::string to_string() const;
    friend auto operator<=>(const MMonomial&, const MMonomial&) = default;
};

using MCombination = std::map<MMonomial, Rational>;

/// Straightens crossings with M_ik M_jl = M_ij M_kl + M_il M_jk (i<j<k<l).
MCombination rewrite_noncrossing(const MMonomial& m);
PhasePoly expand(const MCombination& c);

/// Non-crossing monomials of degree <= `degree` on `points` points in which
/// the last pair appears at most once.
std::vector<MMonomial> quotient_basis(int points, int degree);

struct NullNormalization {
    Rational lambda;
    Rational mu;
    Vec xhat;
    Vec phat;
};

/// x^ = lambda x, p^ = p / lambda + mu x with x^.p^ = 0; then p^.p^ = 0 as
/// well, since M^2 = 0.  lambda = 1.  DegenerateInput, NotNull.
NullNormalization normalize_null_pair(const Vec& x, const Vec& p);

/// a + b i with rational a, b.
struct Gauss {
    Rational re, im;
    Gauss() = default;
    explicit Gauss(const Rational& a) : re(a) {}
    Gauss(const Rational& a, const Rational& b) : re(a), im(b) {}
    friend Gauss operator+(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gauss operator-(const Gauss& a, const Gauss& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gauss operator*(const Gauss& a, const Gauss& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
    friend Gauss operator/(const Gauss& a, const Gauss& b);
    bool is_zero() const { return re == 0 && im == 0; }
    friend bool operator==(const Gauss&, const Gauss&) = default;
};
using GaussVec = std::vector<Gauss>;

/// Same normalization over Q(i).
struct GaussNull {
    Gauss lambda, mu;
    GaussVec xhat, phat;
};
GaussNull normalize_null_pair(const GaussVec& x, const GaussVec& p);

/// Random non-degenerate pair on M^2 = 0 over Q(i).  Real null pairs are
/// parallel and have every M_ij = 0, so complex points are needed.  Needs
/// at least 3 points; on 2 the ideal (M_12^2) is not radical anyway.
std::pair<GaussVec, GaussVec> sample_null_pair(int points, std::mt19937_64& rng);

Gauss evaluate(const MMonomial& m, const GaussVec& x, const GaussVec& p);

/// Rank over Q of the monomials as functions on the null variety, from
/// max(samples, |ms|) sampled points.
std::size_t null_variety_rank(const std::vector<MMonomial>& ms, std::size_t samples, std::uint64_t seed);

/// L_ij -> M_ij, A_i -> A_i^cl, H -> p^2.  GroupPartNotIdentity unless w = 1.
PhasePoly highest_symbol(const NormalMonomial& m, int n);

}  // namespace dunkl::classical
