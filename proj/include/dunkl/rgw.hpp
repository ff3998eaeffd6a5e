#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/identities.hpp"
#include "dunkl/opalg.hpp"

namespace dunkl {

/// One generator of R_{g,gamma}(W).  Indices are 0-based; L always has a < b.
/// The packed code orders L(a,b) by (a,b), then A(i) by i, then H, then group
/// elements, which is the fixed normal order.
struct Letter {
    enum Kind : std::uint8_t { L = 0, A = 1, H = 2, W = 3 };

    std::uint32_t code = 0;

    static Letter make(Kind k, int a = 0, int b = 0) {
        return Letter{(std::uint32_t(k) << 24) | (std::uint32_t(a) << 12) | std::uint32_t(b)};
    }
    static Letter Lij(int a, int b) { return make(L, a, b); }
    static Letter Ai(int i) { return make(A, i); }
    static Letter Hh() { return make(H); }
    static Letter group(int w) { return make(W, w); }

    Kind kind() const noexcept { return static_cast<Kind>(code >> 24); }
    int a() const noexcept { return static_cast<int>((code >> 12) & 0xfff); }
    int b() const noexcept { return static_cast<int>(code & 0xfff); }

    friend bool operator<(Letter x, Letter y) { return x.code < y.code; }
    friend bool operator==(Letter x, Letter y) { return x.code == y.code; }
};

using Word = std::vector<Letter>;

/// Formal combination of words with coefficients in Q[g, gamma].  Canonical:
/// no zero coefficients, L(j,i) stored as -L(i,j), no identity group letters,
/// adjacent group letters merged.
class Element {
public:
    using Terms = std::map<Word, Poly>;

    Element() = default;
    explicit Element(const Poly& scalar);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c * word; the word must already be canonical.
    void add(const Word& w, const Poly& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Poly& c, const Element& e);

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    Terms terms_;
};

/// Non-crossing ordered monomial L..L A..A H^l w.
struct NormalMonomial {
    std::vector<int> l_exp;  // pairs (1,2),(1,3),...,(N-1,N) in that order
    std::vector<int> k;      // A_1..A_N
    int h = 0;
    int w = 0;

    Word word(int n) const;
    int degree() const;  // L and A count 1, H counts 2
    friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

/// Arcs on the points 1..N+1 (0-based here): L(i,j) gives (i,j), A(r) gives (r,N).
std::vector<std::pair<int, int>> arcs_of(const Word& w, int n);
/// True iff two arcs (a,b), (c,d) satisfy a < c < b < d.
bool has_crossing(const Word& w, int n);
bool has_crossing(const NormalMonomial& m, int n);

/// Position in the ordered list of pairs (i<j), 0-based.
int pair_index(int i, int j, int n);

/// Lexicographic termination measure of a word (smaller is simpler).
struct Measure {
    int weight = 0;     // L counts 1, A and H count 2
    int group = 0;      // each group letter: 1 + letters to its right
    int tail = 0;       // arc endpoints at the points N, N+1
    int crossings = 0;
    int inversions = 0;
    friend auto operator<=>(const Measure&, const Measure&) = default;
};
Measure measure(const Word& w, int n);

struct RewriteStats {
    std::size_t steps = 0;
    std::size_t memo_size = 0;
};

/// The algebra R_{g,gamma}(W) over one Coxeter system (N = ambient dimension).
class Algebra {
public:
    Algebra(std::shared_ptr<const CoxeterSystem> sys, Poly gamma);

    const std::shared_ptr<const CoxeterSystem>& system() const noexcept { return sys_; }
    const Poly& gamma() const noexcept { return gamma_; }
    int n() const { return sys_->dim(); }

    Element one() const { return Element(Poly(1)); }
    /// L(i,j) with i != j, 0-based; L(j,i) = -L(i,j).
    Element L(int i, int j) const;
    Element A(int i) const;
    Element H() const;
    Element w(int element) const;
    Element S(int i, int j) const;
    Element Ssum() const;
    Element from_group_algebra(const GroupAlgebra& a) const;

    /// Concatenation with canonical merging of group letters.
    Element mul(const Element& x, const Element& y) const;
    Element commutator(const Element& x, const Element& y) const;

    /// Grammar: expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    /// factor := L(i,j) | A(i) | H | w(roots) | rational | (expr) | factor^int.
    /// Indices are 1-based.  Errors: ParseError, IndexOutOfRange.
    Element parse(const std::string& text) const;

    /// Equal element written in the non-crossing normal basis.  Errors:
    /// StepBudgetExceeded.
    Element rewrite(const Element& e, std::size_t budget = 2'000'000, RewriteStats* stats = nullptr) const;
    static bool is_normal(const Word& w, int n);
    NormalMonomial to_monomial(const Word& w) const;
    std::vector<std::pair<NormalMonomial, Poly>> monomials(const Element& normal) const;

    /// Defining relations (left minus right side), each labelled.
    std::vector<std::pair<std::string, Element>> relations() const;

    /// Deterministic rendering, e.g. "2*g1 * L(1,2)*A(1)*w#3".
    std::string to_string(const Element& e) const;

private:
    void add_group_algebra(Element& out, const Word& prefix, const GroupAlgebra& a, const Poly& c) const;

    std::shared_ptr<const CoxeterSystem> sys_;
    Poly gamma_;
};

/// Image of an element under a letter map (group letters included).
Operator image(const Element& e, const std::shared_ptr<const CoxeterSystem>& target,
               const std::function<Operator(Letter)>& letter_map);
/// The homomorphism into operators: L -> L_ij, A -> A_i, H -> H_gamma, w -> w.
Operator rho(const Element& e, const Catalog& cat);

struct BasisOptions {
    int max_degree = 2;
    int min_degree = 0;
    bool with_A = true;
    bool with_H = true;
    std::vector<int> elements;  // empty means every group element
};
/// All normal monomials (no crossings, k_N <= 1) within the bounds, ordered by
/// degree, then exponents (L before A before H, descending), then group index.
std::vector<NormalMonomial> enumerate_basis(int n, const BasisOptions& opt, std::size_t group_order);

/// Rank lower bound of {rho(m)} via exact evaluation on x^beta r^eps, |beta| <= D,
/// at seeded random rational points and parameter values.
std::size_t independence_rank(const std::vector<NormalMonomial>& monomials, const Algebra& alg, int test_degree,
                              std::uint64_t seed);
std::size_t independence_rank(const std::vector<Element>& elements, const Algebra& alg, int test_degree,
                              std::uint64_t seed);

/// Checks the quotient isomorphism onto the angular algebra in dimension N+1:
/// L_ij -> L_ij, A_i -> c L_{i,N+1} with c^2 = -a, H -> a.  Errors:
/// BadCentralValue, BadDimension.
Report phi_check(const Algebra& alg, const Rational& a);

}  // namespace dunkl
