#pragma once

#include <span>
#include <string>

#include "dunkl/ratfunc.hpp"

namespace dunkl {

/// Elements a + b*r of the quadratic extension RatFunc[r]/(r^2 - q) with
/// q = x_1^2 + ... + x_dim^2.  A pair with b = 0 is dimension-agnostic.
class RExt {
public:
    RExt() = default;
    RExt(const RatFunc& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    RExt(const Poly& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    RExt(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    RExt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    RExt(RatFunc a, RatFunc b, int dim);

    /// The radial generator r.
    static RExt r(int dim);
    /// q = sum of squares of the first dim coordinates.
    static const Poly& q_poly(int dim);

    const RatFunc& a() const noexcept { return a_; }
    const RatFunc& b() const noexcept { return b_; }
    int dim() const noexcept { return dim_; }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const noexcept { return b_.is_zero(); }

    RExt operator-() const;
    RExt& operator+=(const RExt& o);
    RExt& operator-=(const RExt& o);
    RExt& operator*=(const Rational& c);
    friend RExt operator+(RExt x, const RExt& y) { return x += y; }
    friend RExt operator-(RExt x, const RExt& y) { return x -= y; }
    friend RExt operator*(const RExt& x, const RExt& y);
    friend RExt operator*(RExt x, const Rational& c) { return x *= c; }
    friend RExt operator*(const Rational& c, RExt x) { return x *= c; }

    /// Sum with one common denominator per component.
    static RExt sum(std::span<const RExt> terms);

    /// (a - b r)/(a^2 - b^2 q).  Errors: ZeroElement, NotInvertible.
    RExt inverse() const;
    /// Derivative in x_var (0-based); uses d r = x_var r / q.
    RExt partial(int var) const;
    /// f(x) -> f(T x) for the first n coordinates; T must fix q.  No checks.
    RExt substitute(int n, std::span<const Rational> T) const;
    /// f -> f(M^{-1} x) for an orthogonal n x n matrix M (row-major).
    /// Throws NotOrthogonal otherwise.
    RExt act_linear(int n, std::span<const Rational> M) const;
    RExt specialize_param(int var, const Rational& value) const;
    /// Components (a(p), b(p)) of the value a + b r at a rational point.
    std::pair<Rational, Rational> evaluate(std::span<const Rational> point) const;

    std::string to_string(const VarNamer& namer = default_var_name) const;
    friend bool operator==(const RExt& x, const RExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const RExt& x, const RExt& y) { return !(x == y); }
    std::size_t hash() const noexcept { return a_.hash() * 31 + b_.hash(); }

private:
    static int joint_dim(const RExt& x, const RExt& y);

    RatFunc a_;
    RatFunc b_;
    int dim_ = 0;
};

}  // namespace dunkl
