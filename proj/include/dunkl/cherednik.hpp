#pragma once

#include <compare>
#include <map>
#include <memory>

#include "dunkl/opalg.hpp"
#include "dunkl/rgw.hpp"

namespace dunkl {

/// Coefficient sum_m f_m(x) r^m with r^2 = q = |x|^2.  Canonical: exponents
/// are 0, 1 or negative, and every f_m with m < 0 is reduced modulo q in x_1.
class RLaurent {
public:
    RLaurent() = default;
    RLaurent(const Poly& f, int m, int dim);

    const std::map<int, Poly>& parts() const noexcept { return parts_; }
    bool is_zero() const noexcept { return parts_.empty(); }

    RLaurent& operator+=(const RLaurent& o);
    RLaurent operator-() const;
    /// Multiplies by f r^m.
    RLaurent times(const Poly& f, int m) const;
    RLaurent partial(int i) const;
    /// (w c)(x) = c(w^{-1} x); r is invariant.
    RLaurent act(const GroupTable& g, int w) const;
    /// (c - s c) / l for a reflection s fixing the hyperplane l = 0.
    RLaurent divided_difference(const GroupTable& g, int s, const Poly& l) const;
    RExt to_rext() const;

    friend bool operator==(const RLaurent& a, const RLaurent& b) { return a.parts_ == b.parts_; }

private:
    void normalize();
    std::map<int, Poly> parts_;
    int dim_ = 0;
};

/// Element sum c(x, r) w nabla^beta of the rational Cherednik algebra with r
/// adjoined, written coefficient, then group element, then Dunkl operators.
/// The Dunkl representation is faithful on these for symbolic couplings, so
/// equality of two elements is equality of the operators.
class CherednikElement {
public:
    struct Key {
        int w = 0;
        Monomial beta;
        friend std::strong_ordering operator<=>(const Key& a, const Key& b) {
            if (a.w != b.w) return a.w <=> b.w;
            if (a.beta < b.beta) return std::strong_ordering::less;
            if (b.beta < a.beta) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        friend bool operator==(const Key& a, const Key& b) { return a.w == b.w && a.beta == b.beta; }
    };

    explicit CherednikElement(std::shared_ptr<const CoxeterSystem> sys);
    static CherednikElement one(std::shared_ptr<const CoxeterSystem> sys);

    const std::map<Key, RLaurent>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    CherednikElement& operator+=(const CherednikElement& o);
    CherednikElement& operator-=(const CherednikElement& o);
    friend CherednikElement operator+(CherednikElement a, const CherednikElement& b) { return a += b; }
    friend CherednikElement operator-(CherednikElement a, const CherednikElement& b) { return a -= b; }

    /// Left multiplication by f r^m, by a group element, by nabla_i.
    CherednikElement times(const Poly& f, int m = 0) const;
    CherednikElement group(int u) const;
    CherednikElement nabla(int i) const;

    /// Action on a function: sum c w (nabla^beta f).
    RExt apply(const RExt& f, const Catalog& cat) const;

    /// Same element in the operator algebra; meant for small cross-checks.
    Operator to_operator(const Catalog& cat) const;

    friend bool operator==(const CherednikElement& a, const CherednikElement& b) { return a.terms_ == b.terms_; }

private:
    void add(const Key& k, const RLaurent& c);

    std::shared_ptr<const CoxeterSystem> sys_;
    std::map<Key, RLaurent> terms_;
};

/// Images of the generators acting on the left: L_ij = x_i nabla_j - x_j nabla_i,
/// H = sum nabla_k^2 + 2 gamma / r, and
/// A_i = -x_i (nabla^2 + gamma / r) + nabla_i (sum x_k nabla_k - S + (N-3)/2).
class CherednikRep {
public:
    CherednikRep(std::shared_ptr<const CoxeterSystem> sys, Poly gamma);

    CherednikElement apply(Letter l, const CherednikElement& e) const;
    CherednikElement image(const Word& w) const;
    CherednikElement image(const Element& e) const;

private:
    CherednikElement laplacian(const CherednikElement& e) const;

    std::shared_ptr<const CoxeterSystem> sys_;
    Poly gamma_;
};

}  // namespace dunkl
