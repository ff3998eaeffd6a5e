#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/monomial.hpp"

namespace dunkl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Rational number from a numerator and denominator; canonicalized.
Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Maps a variable index to its printed name.
using VarNamer = std::function<std::string(int)>;

/// Default naming used by the operator algebra: x1..x8, g1..g6, gamma.
std::string default_var_name(int index);

/// Index layout shared by the operator algebra.
namespace vars {
inline constexpr int kMaxAmbient = 8;
inline constexpr int kFirstParam = 8;
inline constexpr int kMaxOrbits = 6;
inline constexpr int kGamma = 14;
constexpr int x(int i) { return i; }             // 0-based axis
constexpr int g(int orbit) { return kFirstParam + orbit; }
}  // namespace vars

/// Sparse multivariate polynomial over Q.  Terms are kept sorted in
/// decreasing graded-lex order with no zero coefficients, so equality is
/// structural.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rational coeff;
    };

    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Monomial& m, const Rational& c);

    static Poly var(int index, int exponent = 1) { return Poly(Monomial::var(index, exponent), Rational(1)); }
    /// Takes unsorted terms with possible repeats and zeros.
    static Poly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    Rational constant_value() const;  // requires is_constant()
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    const Term& leading() const { return terms_.front(); }
    const Term& trailing() const { return terms_.back(); }
    int total_degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
    int degree_in(int var) const noexcept;
    /// Highest variable index present, or -1 for constants.
    int last_var() const noexcept;
    bool involves(int var) const noexcept { return degree_in(var) > 0; }
    /// True iff every variable present has index < bound.
    bool only_vars_below(int bound) const noexcept;
    /// True iff no variable in [lo, hi) appears.
    bool free_of_range(int lo, int hi) const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly mul_monomial(const Monomial& m, const Rational& c) const;
    Poly pow(int e) const;

    /// Fused a += b * c.
    void add_product(const Poly& b, const Poly& c);

    Poly derivative(int var) const;
    /// Replaces variable v by the polynomial image[v] for every v < image.size();
    /// higher variables are untouched.
    Poly substitute(std::span<const Poly> image) const;
    /// Substitute x_i -> sum_j T[i][j] x_j for i < dim (row-major T, dim*dim).
    Poly linear_substitute(int dim, std::span<const Rational> T) const;
    /// Replace a single variable by a rational value.
    Poly specialize(int var, const Rational& value) const;
    Rational evaluate(std::span<const Rational> point) const;

    /// Exact quotient if `d` divides this polynomial.
    std::optional<Poly> divide_exact(const Poly& d) const;
    /// Rational gcd of coefficients (positive), 0 for the zero polynomial.
    Rational content() const;
    /// Scaled so that the leading coefficient is 1 (zero stays zero).
    Poly monic() const;
    /// Greatest monomial dividing every term.
    Monomial monomial_content() const;
    /// Monic gcd over Q.
    static Poly gcd(const Poly& a, const Poly& b);

    std::string to_string(const VarNamer& namer = default_var_name) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Total order on polynomials (by terms), used to sort factors.
    friend bool operator<(const Poly& a, const Poly& b);

    std::size_t hash() const noexcept;

private:
    std::vector<Term> terms_;
};

/// Coefficients of p viewed as a univariate polynomial in `var`; index = power.
std::vector<Poly> coefficients_in(const Poly& p, int var);

}  // namespace dunkl
