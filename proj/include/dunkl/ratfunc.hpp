#pragma once

#include <span>
#include <string>
#include <vector>

#include "dunkl/poly.hpp"

namespace dunkl {

/// One factor of a denominator: base^exp with a monic base.
struct DenFactor {
    Poly base;
    int exp = 1;
    /// Known irreducible over Q (linear forms, positive diagonal quadratics in
    /// two or more variables).  Others are split lazily by gcd when needed.
    bool irreducible = false;
};

/// Rational function num/den over Q.  The denominator is stored as a product
/// of pairwise coprime monic factors, which keeps sums and derivatives cheap
/// for the root-form and radial denominators that dominate operator work.
/// Invariants: gcd(num, den) = 1, den monic, parameter symbols never in den.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Poly& p) : num_(p) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)

    /// Normalized num/den; throws ZeroDenominator when den = 0.
    static RatFunc fraction(const Poly& num, const Poly& den);

    const Poly& num() const noexcept { return num_; }
    /// Expanded denominator (monic).
    Poly den() const;
    const std::vector<DenFactor>& den_factors() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.empty(); }
    bool is_constant() const noexcept { return den_.empty() && num_.is_constant(); }
    Rational constant_value() const { return num_.constant_value(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator*=(const Rational& c);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(RatFunc a, const Rational& c) { return a *= c; }
    friend RatFunc operator*(const Rational& c, RatFunc a) { return a *= c; }
    /// Throws ZeroDenominator when dividing by zero.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;
    RatFunc pow(int e) const;

    /// Sum of many terms over one common denominator with a single cancellation pass.
    static RatFunc sum(std::span<const RatFunc> terms);

    RatFunc derivative(int var) const;
    /// x_i -> sum_j T[i][j] x_j for i < dim; T must be invertible.
    RatFunc linear_substitute(int dim, std::span<const Rational> T) const;
    /// Replaces a numerator-only variable (a parameter) by a value.
    RatFunc specialize_param(int var, const Rational& value) const;
    /// Throws PoleAtSamplePoint if the denominator vanishes.
    Rational evaluate(std::span<const Rational> point) const;

    std::string to_string(const VarNamer& namer = default_var_name) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    std::size_t hash() const noexcept;

private:
    RatFunc(Poly num, std::vector<DenFactor> den) : num_(std::move(num)), den_(std::move(den)) {}
    void cancel();

    Poly num_;
    std::vector<DenFactor> den_;  // sorted by base
};

/// Splits a nonzero polynomial as unit * product of monic factors: monomial
/// content becomes linear factors, the rest stays one (possibly reducible) factor.
std::pair<Rational, std::vector<DenFactor>> light_factor(const Poly& p);

}  // namespace dunkl
