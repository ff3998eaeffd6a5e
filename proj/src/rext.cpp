#include "dunkl/rext.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace dunkl {

const Poly& RExt::q_poly(int dim) {
    static std::array<Poly, vars::kMaxAmbient + 1> cache;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int d = 0; d <= vars::kMaxAmbient; ++d) {
            Poly q;
            for (int i = 0; i < d; ++i) q += Poly::var(i, 2);
            cache[d] = q;
        }
    });
    if (dim < 0 || dim > vars::kMaxAmbient) throw Error(ErrorKind::BadDimension, "ambient dimension out of range");
    return cache[dim];
}

RExt::RExt(RatFunc a, RatFunc b, int dim) : a_(std::move(a)), b_(std::move(b)), dim_(dim) {
    if (dim < 0 || dim > vars::kMaxAmbient) throw Error(ErrorKind::BadDimension, "ambient dimension out of range");
    if (!b_.is_zero() && dim == 0) throw Error(ErrorKind::BadDimension, "radial part needs a positive dimension");
}

RExt RExt::r(int dim) { return RExt(RatFunc(), RatFunc(1), dim); }

int RExt::joint_dim(const RExt& x, const RExt& y) {
    if (x.dim_ == y.dim_) return x.dim_;
    if (x.b_.is_zero() && y.b_.is_zero()) return std::max(x.dim_, y.dim_);
    if (x.b_.is_zero() && x.dim_ == 0) return y.dim_;
    if (y.b_.is_zero() && y.dim_ == 0) return x.dim_;
    if (x.b_.is_zero() || y.b_.is_zero()) return x.b_.is_zero() ? y.dim_ : x.dim_;
    throw Error(ErrorKind::DimensionMismatch, "radial elements over different dimensions");
}

RExt RExt::operator-() const {
    RExt x;
    x.a_ = -a_;
    x.b_ = -b_;
    x.dim_ = dim_;
    return x;
}

RExt& RExt::operator+=(const RExt& o) {
    const int d = joint_dim(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    dim_ = d;
    return *this;
}

RExt& RExt::operator-=(const RExt& o) {
    const int d = joint_dim(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    dim_ = d;
    return *this;
}

RExt& RExt::operator*=(const Rational& c) {
    a_ *= c;
    b_ *= c;
    return *this;
}

RExt operator*(const RExt& x, const RExt& y) {
    RExt z;
    z.dim_ = RExt::joint_dim(x, y);
    if (x.b_.is_zero() && y.b_.is_zero()) {
        z.a_ = x.a_ * y.a_;
        return z;
    }
    if (x.b_.is_zero()) {
        z.a_ = x.a_ * y.a_;
        z.b_ = x.a_ * y.b_;
        return z;
    }
    if (y.b_.is_zero()) {
        z.a_ = x.a_ * y.a_;
        z.b_ = x.b_ * y.a_;
        return z;
    }
    const RatFunc parts_a[2] = {x.a_ * y.a_, x.b_ * y.b_ * RatFunc(RExt::q_poly(z.dim_))};
    const RatFunc parts_b[2] = {x.a_ * y.b_, x.b_ * y.a_};
    z.a_ = RatFunc::sum(parts_a);
    z.b_ = RatFunc::sum(parts_b);
    return z;
}

RExt RExt::sum(std::span<const RExt> terms) {
    std::vector<RatFunc> as, bs;
    as.reserve(terms.size());
    int d = 0;
    bool radial = false;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        as.push_back(t.a_);
        if (!t.b_.is_zero()) {
            if (radial && t.dim_ != d) throw Error(ErrorKind::DimensionMismatch, "radial elements over different dimensions");
            radial = true;
            d = t.dim_;
            bs.push_back(t.b_);
        } else if (!radial) {
            d = std::max(d, t.dim_);
        }
    }
    RExt z;
    z.a_ = RatFunc::sum(as);
    z.b_ = RatFunc::sum(bs);
    z.dim_ = d;
    return z;
}

RExt RExt::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroElement, "inverse of zero");
    if (b_.is_zero()) {
        RExt z(a_.inverse());
        z.dim_ = dim_;
        return z;
    }
    const RatFunc norm = a_ * a_ - b_ * b_ * RatFunc(q_poly(dim_));
    if (norm.is_zero()) throw Error(ErrorKind::NotInvertible, "a^2 - b^2 q vanishes");
    const RatFunc inv = norm.inverse();
    return RExt(a_ * inv, -(b_ * inv), dim_);
}

RExt RExt::partial(int var) const {
    RExt z;
    z.dim_ = dim_;
    z.a_ = a_.derivative(var);
    if (b_.is_zero()) return z;
    z.b_ = b_.derivative(var);
    if (var < dim_) {
        // d r / d x_var = x_var r / q
        const RatFunc coef = RatFunc::fraction(Poly::var(var), q_poly(dim_));
        z.b_ += b_ * coef;
    }
    return z;
}

RExt RExt::substitute(int n, std::span<const Rational> T) const {
    RExt z;
    z.dim_ = dim_;
    z.a_ = a_.linear_substitute(n, T);
    if (!b_.is_zero()) z.b_ = b_.linear_substitute(n, T);
    return z;
}

RExt RExt::act_linear(int n, std::span<const Rational> M) const {
    if (static_cast<int>(M.size()) != n * n) throw Error(ErrorKind::DimensionMismatch, "matrix size does not match its dimension");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational s(0);
            for (int k = 0; k < n; ++k) s += M[k * n + i] * M[k * n + j];
            if (s != (i == j ? 1 : 0)) throw Error(ErrorKind::NotOrthogonal, "matrix is not orthogonal");
        }
    if (!b_.is_zero() && n > dim_) throw Error(ErrorKind::DimensionMismatch, "matrix acts beyond the radial dimension");
    // f(M^{-1} x) = f(M^T x): x_i -> sum_j M[j][i] x_j
    std::vector<Rational> T(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) T[i * n + j] = M[j * n + i];
    return substitute(n, T);
}

RExt RExt::specialize_param(int var, const Rational& value) const {
    RExt z;
    z.dim_ = dim_;
    z.a_ = a_.specialize_param(var, value);
    z.b_ = b_.specialize_param(var, value);
    return z;
}

std::pair<Rational, Rational> RExt::evaluate(std::span<const Rational> point) const {
    return {a_.evaluate(point), b_.is_zero() ? Rational(0) : b_.evaluate(point)};
}

std::string RExt::to_string(const VarNamer& namer) const {
    if (b_.is_zero()) return a_.to_string(namer);
    std::string s;
    if (!a_.is_zero()) s = a_.to_string(namer) + " + ";
    return s + "(" + b_.to_string(namer) + ")*r";
}

}  // namespace dunkl
