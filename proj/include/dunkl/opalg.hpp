#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dunkl/coxeter.hpp"
#include "dunkl/rext.hpp"

namespace dunkl {

/// Normal-ordered operator  sum c(x, r) * D^beta * w  acting on RExt by
/// (w f)(x) = f(w^{-1} x).  The term map is canonical, so == is exact
/// operator equality.
class Operator {
public:
    struct Key {
        int w = 0;
        Monomial beta;  // exponents of D_1..D_N in variables 0..N-1
        friend bool operator<(const Key& a, const Key& b) {
            return a.w != b.w ? a.w < b.w : b.beta < a.beta;
        }
        friend bool operator==(const Key& a, const Key& b) { return a.w == b.w && a.beta == b.beta; }
    };
    using Terms = std::map<Key, RExt>;

    Operator() = default;
    explicit Operator(std::shared_ptr<const CoxeterSystem> sys) : sys_(std::move(sys)) {}

    static Operator identity(std::shared_ptr<const CoxeterSystem> sys);
    static Operator coefficient(std::shared_ptr<const CoxeterSystem> sys, const RExt& c);
    static Operator derivative(std::shared_ptr<const CoxeterSystem> sys, int i);  // 0-based
    static Operator group(std::shared_ptr<const CoxeterSystem> sys, int w);
    static Operator group_algebra(std::shared_ptr<const CoxeterSystem> sys, const GroupAlgebra& a);

    const std::shared_ptr<const CoxeterSystem>& system() const noexcept { return sys_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    int dim() const { return sys_->dim(); }
    /// Highest derivative order present.
    int order() const noexcept;

    /// Adds c * D^beta * w.
    void add_term(int w, const Monomial& beta, const RExt& c);

    Operator operator-() const;
    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    /// Left multiplication by a function.
    friend Operator operator*(const RExt& c, const Operator& p);
    friend Operator operator*(const Poly& c, const Operator& p) { return RExt(c) * p; }
    friend Operator operator*(const Rational& c, const Operator& p) { return RExt(c) * p; }

    /// Sum with one normalization per term key.
    static Operator sum(std::span<const Operator> ops);

    Operator specialize_param(int var, const Rational& value) const;

    /// Deterministic rendering, one term per line: coeff * D^beta * w#k.
    std::string to_string() const;
    /// First term only (for compact failure reports).
    std::string leading_term_string() const;

    friend bool operator==(const Operator& a, const Operator& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

private:
    friend Operator compose(const Operator& p, const Operator& q);

    std::shared_ptr<const CoxeterSystem> sys_;
    Terms terms_;
};

/// Normal form of P o Q.  Errors: DimensionMismatch.
Operator compose(const Operator& p, const Operator& q);
Operator commutator(const Operator& p, const Operator& q);
Operator anticommutator(const Operator& p, const Operator& q);
RExt apply(const Operator& p, const RExt& f);
/// Formal adjoint: x+ = x, d+ = -d, w+ = w^{-1}, real parameters.
Operator adjoint(const Operator& p);

/// Memoized constructors for the operators of the Dunkl-Coulomb model on one
/// system.  Indices are 0-based here; `make` parses 1-based spec strings.
/// Thread-safe.
class Catalog {
public:
    /// gamma is a polynomial in the parameters (the symbol or a number).
    Catalog(std::shared_ptr<const CoxeterSystem> sys, Poly gamma);

    const std::shared_ptr<const CoxeterSystem>& system() const noexcept { return sys_; }
    const Poly& gamma() const noexcept { return gamma_; }
    int dim() const { return sys_->dim(); }

    /// Replaces the (N-3)/2 in the second LRL form by (N-2)/2 everywhere A is
    /// used.  Only meant for negative controls.
    void set_perturbed(bool on);
    bool perturbed() const noexcept { return perturbed_; }

    Operator one() const;
    Operator x(int i) const;
    Operator d(int i) const;
    Operator dunkl(int i) const;
    Operator dunkl_dir(const Vec& xi) const;
    Operator S(int i, int j) const;
    Operator Ssum() const;
    Operator L(int i, int j) const;
    Operator L_dir(const Vec& xi, const Vec& eta) const;
    /// Potential form.
    Operator H() const;
    /// Sum of squared Dunkl operators plus 2 gamma / r.
    Operator H_dunkl() const;
    Operator dunkl_laplacian() const;
    /// form 1: anticommutator form; 2 and 3: the factored forms.
    Operator A(int i, int form = 2) const;
    Operator Casimir() const;
    Operator rdr() const;
    Operator rinv() const;
    Operator Hloc() const;
    Operator w(int element) const;
    /// Product of reflections by positive-root indices (0-based), left to right.
    Operator w_word(const std::vector<int>& roots) const;

    /// Spec strings such as "L(1,2)", "A(1)", "A(2;form=3)", "H", "H(dunkl)",
    /// "I", "rdr", "rinv", "Hloc", "w(1,2)", "x(1)", "d(2)", "dunkl(1)", "S(1,2)",
    /// "S".  BadSpec on anything else.
    Operator make(const std::string& spec) const;

private:
    const Operator& memo(const std::string& key, const std::function<Operator()>& build) const;
    void check_index(int i) const;

    std::shared_ptr<const CoxeterSystem> sys_;
    Poly gamma_;
    bool perturbed_ = false;
    mutable std::mutex mu_;
    mutable std::map<std::string, std::unique_ptr<Operator>> cache_;
};

}  // namespace dunkl
