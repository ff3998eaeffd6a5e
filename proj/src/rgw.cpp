#include "dunkl/rgw.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "dunkl/linalg.hpp"

namespace dunkl {

namespace {

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Letter l : w) h = (h ^ l.code) * 0x100000001b3ULL;
        return static_cast<std::size_t>(h);
    }
};

bool is_group(Letter l) { return l.kind() == Letter::W; }

// Appends with merging of adjacent group letters; identity letters vanish.
void push(Word& w, Letter l, const GroupTable& g) {
    if (is_group(l)) {
        if (l.a() == GroupTable::identity()) return;
        if (!w.empty() && is_group(w.back())) {
            const int e = g.mul(w.back().a(), l.a());
            w.pop_back();
            if (e != GroupTable::identity()) w.push_back(Letter::group(e));
            return;
        }
    }
    w.push_back(l);
}

Word concat(const Word& a, const Word& b, const GroupTable& g) {
    Word w = a;
    for (Letter l : b) push(w, l, g);
    return w;
}

using Terms = std::vector<std::pair<Poly, Word>>;

}  // namespace

// ---------------------------------------------------------------- Element

Element::Element(const Poly& scalar) {
    if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

void Element::add(const Word& w, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element e = *this;
    for (auto& [w, c] : e.terms_) c = -c;
    return e;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Element operator*(const Poly& c, const Element& e) {
    Element out;
    if (c.is_zero()) return out;
    for (const auto& [w, x] : e.terms_) out.add(w, c * x);
    return out;
}

// ---------------------------------------------------------------- arcs

int pair_index(int i, int j, int n) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

std::vector<std::pair<int, int>> arcs_of(const Word& w, int n) {
    std::vector<std::pair<int, int>> arcs;
    for (Letter l : w) {
        if (l.kind() == Letter::L) arcs.emplace_back(l.a(), l.b());
        if (l.kind() == Letter::A) arcs.emplace_back(l.a(), n);
    }
    return arcs;
}

namespace {

bool cross(std::pair<int, int> x, std::pair<int, int> y) {
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
}

int crossing_count(const Word& w, int n) {
    const auto arcs = arcs_of(w, n);
    int c = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) c += cross(arcs[i], arcs[j]);
    return c;
}

}  // namespace

bool has_crossing(const Word& w, int n) { return crossing_count(w, n) > 0; }

bool has_crossing(const NormalMonomial& m, int n) { return has_crossing(m.word(n), n); }

Measure measure(const Word& w, int n) {
    Measure m;
    int after = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (is_group(*it)) {
            m.group += 1 + after;
            continue;
        }
        ++after;
        m.weight += it->kind() == Letter::L ? 1 : 2;
    }
    for (auto [a, b] : arcs_of(w, n)) m.tail += (a >= n - 1) + (b >= n - 1);
    m.crossings = crossing_count(w, n);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!is_group(w[i]) && !is_group(w[j]) && w[j] < w[i]) ++m.inversions;
    return m;
}

// ---------------------------------------------------------------- monomials

Word NormalMonomial::word(int n) const {
    Word w;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int e = 0; e < l_exp[pair_index(i, j, n)]; ++e) w.push_back(Letter::Lij(i, j));
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < k[i]; ++e) w.push_back(Letter::Ai(i));
    for (int e = 0; e < h; ++e) w.push_back(Letter::Hh());
    if (this->w != GroupTable::identity()) w.push_back(Letter::group(this->w));
    return w;
}

int NormalMonomial::degree() const {
    int d = 2 * h;
    for (int e : l_exp) d += e;
    for (int e : k) d += e;
    return d;
}

// ---------------------------------------------------------------- algebra

Algebra::Algebra(std::shared_ptr<const CoxeterSystem> sys, Poly gamma) : sys_(std::move(sys)), gamma_(std::move(gamma)) {
    if (n() < 1) throw Error(ErrorKind::BadDimension, "algebra needs a positive dimension");
}

Element Algebra::L(int i, int j) const {
    if (i < 0 || j < 0 || i >= n() || j >= n() || i == j)
        throw Error(ErrorKind::IndexOutOfRange, "L(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    Element e;
    e.add({Letter::Lij(std::min(i, j), std::max(i, j))}, Poly(i < j ? 1 : -1));
    return e;
}

Element Algebra::A(int i) const {
    if (i < 0 || i >= n()) throw Error(ErrorKind::IndexOutOfRange, "A(" + std::to_string(i + 1) + ")");
    Element e;
    e.add({Letter::Ai(i)}, Poly(1));
    return e;
}

Element Algebra::H() const {
    Element e;
    e.add({Letter::Hh()}, Poly(1));
    return e;
}

Element Algebra::w(int element) const {
    if (element < 0 || static_cast<std::size_t>(element) >= sys_->group.order())
        throw Error(ErrorKind::IndexOutOfRange, "group element " + std::to_string(element));
    Element e;
    Word wd;
    push(wd, Letter::group(element), sys_->group);
    e.add(wd, Poly(1));
    return e;
}

void Algebra::add_group_algebra(Element& out, const Word& prefix, const GroupAlgebra& a, const Poly& c) const {
    for (const auto& [g, x] : a) out.add(concat(prefix, {Letter::group(g)}, sys_->group), c * x);
}

Element Algebra::from_group_algebra(const GroupAlgebra& a) const {
    Element e;
    add_group_algebra(e, {}, a, Poly(1));
    return e;
}

Element Algebra::S(int i, int j) const { return from_group_algebra(exchange_element(*sys_, i, j)); }

Element Algebra::Ssum() const { return from_group_algebra(s_element(*sys_)); }

Element Algebra::mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) out.add(concat(wx, wy, sys_->group), cx * cy);
    return out;
}

Element Algebra::commutator(const Element& x, const Element& y) const { return mul(x, y) - mul(y, x); }

bool Algebra::is_normal(const Word& w, int n) {
    int a_last = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (is_group(w[p])) {
            if (p + 1 != w.size()) return false;
            continue;
        }
        if (p > 0 && w[p] < w[p - 1]) return false;
        if (w[p].kind() == Letter::A && w[p].a() == n - 1) ++a_last;
    }
    return a_last <= 1 && !has_crossing(w, n);
}

NormalMonomial Algebra::to_monomial(const Word& w) const {
    if (!is_normal(w, n())) throw Error(ErrorKind::BadSpec, "word is not in normal form");
    NormalMonomial m;
    m.l_exp.assign(n() * (n() - 1) / 2, 0);
    m.k.assign(n(), 0);
    for (Letter l : w) {
        switch (l.kind()) {
        case Letter::L: ++m.l_exp[pair_index(l.a(), l.b(), n())]; break;
        case Letter::A: ++m.k[l.a()]; break;
        case Letter::H: ++m.h; break;
        case Letter::W: m.w = l.a(); break;
        }
    }
    return m;
}

std::vector<std::pair<NormalMonomial, Poly>> Algebra::monomials(const Element& normal) const {
    std::vector<std::pair<NormalMonomial, Poly>> out;
    for (const auto& [w, c] : normal.terms()) out.emplace_back(to_monomial(w), c);
    return out;
}

std::string Algebra::to_string(const Element& e) const {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : e.terms()) {
        if (!s.empty()) s += " + ";
        const std::string cs = c.to_string();
        if (w.empty()) {
            s += c.size() > 1 ? "(" + cs + ")" : cs;
            continue;
        }
        if (c == Poly(-1)) s += "-";
        else if (c != Poly(1)) s += (c.size() > 1 ? "(" + cs + ")" : cs) + " * ";
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (p) s += "*";
            const Letter l = w[p];
            switch (l.kind()) {
            case Letter::L: s += "L(" + std::to_string(l.a() + 1) + "," + std::to_string(l.b() + 1) + ")"; break;
            case Letter::A: s += "A(" + std::to_string(l.a() + 1) + ")"; break;
            case Letter::H: s += "H"; break;
            case Letter::W: s += "w#" + std::to_string(l.a()); break;
            }
        }
    }
    return s;
}

// ---------------------------------------------------------------- rewriting

namespace {

class Engine {
public:
    Engine(const Algebra& alg, std::size_t budget) : alg_(alg), g_(alg.system()->group), n_(alg.n()), budget_(budget) {
        S_.resize(static_cast<std::size_t>(n_ * n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) S_[i * n_ + j] = exchange_element(*alg.system(), i, j);
        const GroupAlgebra s = s_element(*alg.system());
        // S(S - N + 1)
        const GroupAlgebra s2 = ga_mul(g_, s, s);
        sq_ = ga_add(s2, ga_scale(s, Poly(-(n_ - 1))));
    }

    const Element& nf(const Word& w) {
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        Element out;
        if (Algebra::is_normal(w, n_)) {
            out.add(w, Poly(1));
        } else {
            if (++steps_ > budget_) throw Error(ErrorKind::StepBudgetExceeded, "rewrite exceeded " + std::to_string(budget_) + " steps");
            const Terms next = step(w);
            const Measure before = measure(w, n_);
            for (const auto& [c, v] : next) {
                if (!(measure(v, n_) < before)) throw std::logic_error("rewrite: termination measure did not decrease");
            }
            for (const auto& [c, v] : next) out += c * nf(v);
        }
        return memo_.emplace(w, std::move(out)).first->second;
    }

    std::size_t steps() const { return steps_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    const GroupAlgebra& S(int i, int j) const { return S_[i * n_ + j]; }

    // c * L(a,b) followed by the group algebra element s.
    void push_LS(Terms& out, const Poly& c, int a, int b, const GroupAlgebra& s) const {
        if (a == b) return;
        const Poly sign = a < b ? c : -c;
        const Letter l = Letter::Lij(std::min(a, b), std::max(a, b));
        for (const auto& [w, x] : s) {
            Word wd{l};
            push(wd, Letter::group(w), g_);
            out.emplace_back(sign * x, wd);
        }
    }

    void push_AS(Terms& out, const Poly& c, int i, const GroupAlgebra& s) const {
        for (const auto& [w, x] : s) {
            Word wd{Letter::Ai(i)};
            push(wd, Letter::group(w), g_);
            out.emplace_back(c * x, wd);
        }
    }

    // [x, y] for x, y among L and A letters.
    Terms comm(Letter x, Letter y) const {
        Terms out;
        const auto kx = x.kind(), ky = y.kind();
        if (kx == Letter::A && ky == Letter::A) {
            const int i = x.a(), j = y.a();
            if (i != j) out.emplace_back(Poly(i < j ? 1 : -1), Word{Letter::Hh(), Letter::Lij(std::min(i, j), std::max(i, j))});
        } else if (kx == Letter::A && ky == Letter::L) {
            // [A_i, L_kl] = A_l S_ki - A_k S_li
            const int i = x.a(), k = y.a(), l = y.b();
            push_AS(out, Poly(1), l, S(k, i));
            push_AS(out, Poly(-1), k, S(l, i));
        } else if (kx == Letter::L && ky == Letter::A) {
            for (auto& [c, w] : comm(y, x)) out.emplace_back(-c, std::move(w));
        } else {
            // [L_ij, L_kl] = L_il S_jk + L_jk S_il - L_ik S_jl - L_jl S_ik
            const int i = x.a(), j = x.b(), k = y.a(), l = y.b();
            push_LS(out, Poly(1), i, l, S(j, k));
            push_LS(out, Poly(1), j, k, S(i, l));
            push_LS(out, Poly(-1), i, k, S(j, l));
            push_LS(out, Poly(-1), j, l, S(i, k));
        }
        return out;
    }

    // Conjugation w X w^{-1} as a combination of single letters.
    std::vector<std::pair<Rational, Letter>> conj(int w, Letter x) const {
        std::vector<std::pair<Rational, Letter>> out;
        if (x.kind() == Letter::H) return {{Rational(1), x}};
        if (x.kind() == Letter::A) {
            for (int a = 0; a < n_; ++a)
                if (Rational m = g_.entry(w, a, x.a()); m != 0) out.emplace_back(m, Letter::Ai(a));
            return out;
        }
        std::map<std::uint32_t, Rational> acc;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                if (a == b) continue;
                const Rational m = g_.entry(w, a, x.a()) * g_.entry(w, b, x.b());
                if (m == 0) continue;
                const Letter l = Letter::Lij(std::min(a, b), std::max(a, b));
                acc[l.code] += a < b ? m : Rational(-m);
            }
        for (const auto& [code, m] : acc)
            if (m != 0) out.emplace_back(m, Letter{code});
        return out;
    }

    static Word slice(const Word& w, std::size_t from, std::size_t to) {
        return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
    }

    Word join(std::initializer_list<Word> parts) const {
        Word out;
        for (const auto& p : parts)
            for (Letter l : p) push(out, l, g_);
        return out;
    }

    // Replacement of the adjacent pair (x, y) at p, p+1 by `middle`.
    Terms splice(const Word& w, std::size_t p, std::size_t len, const Terms& middle) const {
        Terms out;
        const Word pre = slice(w, 0, p), post = slice(w, p + len, w.size());
        for (const auto& [c, m] : middle) out.emplace_back(c, join({pre, m, post}));
        return out;
    }

    Terms uncross(Letter x, Letter y) const {
        Terms out;
        if (y.kind() == Letter::L) {
            // L_ik L_jl with i<j<k<l
            const int i = x.a(), k = x.b(), j = y.a(), l = y.b();
            out.emplace_back(Poly(1), Word{Letter::Lij(i, j), Letter::Lij(k, l)});
            out.emplace_back(Poly(1), Word{Letter::Lij(j, k), Letter::Lij(i, l)});
            push_LS(out, Poly(-1), i, j, S(k, l));
            push_LS(out, Poly(-1), j, k, S(i, l));
            push_LS(out, Poly(1), i, k, S(j, l));
        } else {
            // L_ik A_j with i<j<k
            const int i = x.a(), k = x.b(), j = y.a();
            out.emplace_back(Poly(1), Word{Letter::Lij(i, j), Letter::Ai(k)});
            out.emplace_back(Poly(1), Word{Letter::Lij(j, k), Letter::Ai(i)});
        }
        return out;
    }

    Terms step(const Word& w) const {
        const std::size_t len = w.size();
        // group letters move right
        for (std::size_t p = 0; p + 1 < len; ++p) {
            if (!is_group(w[p])) continue;
            if (is_group(w[p + 1])) {
                Word m;
                push(m, w[p], g_);
                push(m, w[p + 1], g_);
                return splice(w, p, 2, {{Poly(1), m}});
            }
            Terms mid;
            for (const auto& [c, l] : conj(w[p].a(), w[p + 1])) mid.emplace_back(Poly(c), Word{l, w[p]});
            return splice(w, p, 2, mid);
        }
        // H is central
        for (std::size_t p = 0; p + 1 < len; ++p)
            if (w[p].kind() == Letter::H && (w[p + 1].kind() == Letter::L || w[p + 1].kind() == Letter::A))
                return splice(w, p, 2, {{Poly(1), Word{w[p + 1], w[p]}}});
        // order L and A letters
        for (std::size_t p = 0; p + 1 < len; ++p) {
            const Letter x = w[p], y = w[p + 1];
            if (x.kind() > Letter::A || y.kind() > Letter::A || !(y < x)) continue;
            Terms mid{{Poly(1), Word{y, x}}};
            for (auto& t : comm(x, y)) mid.push_back(std::move(t));
            return splice(w, p, 2, mid);
        }
        // crossing pairs
        const auto arcs = arcs_of(w, n_);
        {
            // arcs follow the L/A letters in order; they are a prefix of w
            for (std::size_t q = 1; q < arcs.size(); ++q)
                for (std::size_t p = q; p-- > 0;) {
                    if (!cross(arcs[p], arcs[q])) continue;
                    Terms out;
                    const Letter xq = w[q];
                    const Word pre = slice(w, 0, p + 1), post = slice(w, q + 1, len);
                    // Y_1..Y_m X = X Y_1..Y_m + sum_t Y_1..Y_{t-1} [Y_t, X] Y_{t+1}..Y_m
                    for (std::size_t t = p + 1; t < q; ++t)
                        for (const auto& [c, m] : comm(w[t], xq))
                            out.emplace_back(c, join({pre, slice(w, p + 1, t), m, slice(w, t + 1, q), post}));
                    const Word between = slice(w, p + 1, q);
                    for (const auto& [c, m] : uncross(w[p], xq))
                        out.emplace_back(c, join({slice(w, 0, p), m, between, post}));
                    return out;
                }
        }
        // A_N^2
        for (std::size_t p = 0; p + 1 < len; ++p) {
            if (!(w[p] == Letter::Ai(n_ - 1) && w[p + 1] == Letter::Ai(n_ - 1))) continue;
            Terms mid;
            for (int i = 0; i < n_ - 1; ++i) mid.emplace_back(Poly(-1), Word{Letter::Ai(i), Letter::Ai(i)});
            for (int i = 0; i < n_; ++i)
                for (int j = i + 1; j < n_; ++j) mid.emplace_back(Poly(1), Word{Letter::Hh(), Letter::Lij(i, j), Letter::Lij(i, j)});
            for (const auto& [g, c] : sq_) {
                Word m{Letter::Hh()};
                push(m, Letter::group(g), g_);
                mid.emplace_back(-c, m);
            }
            mid.emplace_back(Poly(-Rational((n_ - 1) * (n_ - 1)) / 4), Word{Letter::Hh()});
            mid.emplace_back(alg_.gamma() * alg_.gamma(), Word{});
            return splice(w, p, 2, mid);
        }
        throw std::logic_error("rewrite: no rule applies to a non-normal word");
    }

    const Algebra& alg_;
    const GroupTable& g_;
    int n_;
    std::size_t budget_;
    std::size_t steps_ = 0;
    std::vector<GroupAlgebra> S_;
    GroupAlgebra sq_;
    std::unordered_map<Word, Element, WordHash> memo_;
};

}  // namespace

Element Algebra::rewrite(const Element& e, std::size_t budget, RewriteStats* stats) const {
    Engine eng(*this, budget);
    Element out;
    for (const auto& [w, c] : e.terms()) out += c * eng.nf(w);
    if (stats) {
        stats->steps = eng.steps();
        stats->memo_size = eng.memo_size();
    }
    return out;
}

// ---------------------------------------------------------------- relations

std::vector<std::pair<std::string, Element>> Algebra::relations() const {
    std::vector<std::pair<std::string, Element>> out;
    const int N = n();
    auto Lz = [&](int i, int j) { return i == j ? Element() : L(i, j); };
    auto idx = [](std::initializer_list<int> v) {
        std::string s = "(";
        for (int x : v) s += (s.size() > 1 ? "," : "") + std::to_string(x + 1);
        return s + ")";
    };
    const auto& G = sys_->group;
    for (std::size_t r = 0; r < sys_->roots.roots.size(); ++r) {
        const int s = G.reflection(r);
        const std::string tag = "covariance, root " + std::to_string(r + 1);
        for (int i = 0; i < N; ++i) {
            Element rhs;
            for (int a = 0; a < N; ++a)
                if (Rational m = G.entry(s, a, i); m != 0) rhs += Poly(m) * A(a);
            out.emplace_back(tag + " A" + idx({i}), mul(w(s), A(i)) - mul(rhs, w(s)));
            for (int j = i + 1; j < N; ++j) {
                Element rl;
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b)
                        if (Rational m = G.entry(s, a, i) * G.entry(s, b, j); m != 0 && a != b) rl += Poly(m) * L(a, b);
                out.emplace_back(tag + " L" + idx({i, j}), mul(w(s), L(i, j)) - mul(rl, w(s)));
            }
        }
    }
    for (int i = 0; i < N; ++i) out.emplace_back("H central A" + idx({i}), commutator(H(), A(i)));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) out.emplace_back("H central L" + idx({i, j}), commutator(H(), L(i, j)));
    {
        Element lhs, l2;
        for (int i = 0; i < N; ++i) lhs += mul(A(i), A(i));
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) l2 += mul(L(i, j), L(i, j));
        const Element s = Ssum();
        const Element inner = l2 - mul(s, s - Poly(N - 1) * one()) - Poly(Rational((N - 1) * (N - 1)) / 4) * one();
        out.emplace_back("square of A", lhs - mul(H(), inner) - Element(gamma_ * gamma_));
    }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            out.emplace_back("A commutator" + idx({i, j}), commutator(A(i), A(j)) - mul(H(), L(i, j)));
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
                if (k == l) continue;
                out.emplace_back("A-L commutator" + idx({i, k, l}),
                                 commutator(A(i), L(k, l)) - mul(A(l), S(k, i)) + mul(A(k), S(l, i)));
            }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = k + 1; l < N; ++l) {
                    const Element rhs = mul(Lz(i, l), S(j, k)) + mul(Lz(j, k), S(i, l)) - mul(Lz(i, k), S(j, l)) -
                                        mul(Lz(j, l), S(i, k));
                    out.emplace_back("L-L commutator" + idx({i, j, k, l}), commutator(L(i, j), L(k, l)) - rhs);
                }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    const Element lhs = mul(Lz(i, j), Lz(k, l)) + mul(Lz(j, k), Lz(i, l)) + mul(Lz(k, i), Lz(j, l));
                    const Element rhs = mul(Lz(i, j), S(k, l)) + mul(Lz(j, k), S(i, l)) + mul(Lz(k, i), S(j, l));
                    out.emplace_back("L crossing" + idx({i, j, k, l}), lhs - rhs);
                }
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k)
                out.emplace_back("L-A crossing" + idx({i, j, k}),
                                 mul(Lz(i, j), A(k)) + mul(Lz(j, k), A(i)) + mul(Lz(k, i), A(j)));
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const Algebra& alg, const std::string& text) : alg_(alg), s_(text) {}

    Element parse() {
        Element e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_ + 1));
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("integer too large");
        return std::stol(s_.substr(start, pos_ - start));
    }
    int index(int bound, const std::string& what) {
        const long v = integer();
        if (v < 1 || v > bound) throw Error(ErrorKind::IndexOutOfRange, what + " index " + std::to_string(v) + " outside 1.." + std::to_string(bound));
        return static_cast<int>(v - 1);
    }

    Element expr() {
        skip();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Element e = term();
        if (neg) e = -e;
        for (;;) {
            if (accept('+')) e += term();
            else if (accept('-')) e -= term();
            else return e;
        }
    }
    Element term() {
        Element e = factor();
        while (accept('*')) e = alg_.mul(e, factor());
        return e;
    }
    Element factor() {
        Element base = primary();
        while (accept('^')) {
            const long k = integer();
            if (k > 64) fail("exponent too large");
            Element p = alg_.one();
            for (long i = 0; i < k; ++i) p = alg_.mul(p, base);
            base = p;
        }
        return base;
    }
    Element primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const int n = alg_.n();
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Element e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q(integer());
            if (accept('/')) {
                const long d = integer();
                if (d == 0) fail("zero denominator");
                q /= d;
            }
            return Element(Poly(q));
        }
        ++pos_;
        switch (c) {
        case 'L': {
            expect('(');
            const int i = index(n, "L");
            expect(',');
            const int j = index(n, "L");
            expect(')');
            if (i == j) throw Error(ErrorKind::IndexOutOfRange, "L with equal indices");
            return alg_.L(i, j);
        }
        case 'A': {
            expect('(');
            const int i = index(n, "A");
            expect(')');
            return alg_.A(i);
        }
        case 'H': return alg_.H();
        case 'w': {
            expect('(');
            const auto& sys = *alg_.system();
            int e = GroupTable::identity();
            if (!accept(')')) {
                do {
                    const int r = index(static_cast<int>(sys.roots.roots.size()), "root");
                    e = sys.group.mul(e, sys.group.reflection(r));
                } while (accept(','));
                expect(')');
            }
            return alg_.w(e);
        }
        default:
            --pos_;
            fail("unexpected '" + std::string(1, c) + "'");
        }
    }

    const Algebra& alg_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Element Algebra::parse(const std::string& text) const { return Parser(*this, text).parse(); }

// ---------------------------------------------------------------- images

Operator image(const Element& e, const std::shared_ptr<const CoxeterSystem>& target,
               const std::function<Operator(Letter)>& letter_map) {
    std::vector<Operator> parts;
    for (const auto& [w, c] : e.terms()) {
        Operator op = Operator::identity(target);
        for (Letter l : w) op = compose(op, letter_map(l));
        parts.push_back(RExt(c) * op);
    }
    if (parts.empty()) return Operator(target);
    return Operator::sum(parts);
}

Operator rho(const Element& e, const Catalog& cat) {
    return image(e, cat.system(), [&](Letter l) -> Operator {
        switch (l.kind()) {
        case Letter::L: return cat.L(l.a(), l.b());
        case Letter::A: return cat.A(l.a());
        case Letter::H: return cat.H();
        case Letter::W: return cat.w(l.a());
        }
        return cat.one();
    });
}

// ---------------------------------------------------------------- basis

std::vector<NormalMonomial> enumerate_basis(int n, const BasisOptions& opt, std::size_t group_order) {
    std::vector<NormalMonomial> out;
    const int pairs = n * (n - 1) / 2;
    std::vector<int> elements = opt.elements;
    if (elements.empty())
        for (std::size_t w = 0; w < group_order; ++w) elements.push_back(static_cast<int>(w));
    NormalMonomial m;
    m.l_exp.assign(pairs, 0);
    m.k.assign(n, 0);
    std::function<void(int, int)> rec_k, rec_l;
    auto finish = [&](int deg) {
        if (has_crossing(m.word(n), n)) return;
        for (int h = 0; deg + 2 * h <= opt.max_degree; ++h) {
            if (h > 0 && !opt.with_H) break;
            if (deg + 2 * h < opt.min_degree) continue;
            m.h = h;
            for (int w : elements) {
                m.w = w;
                out.push_back(m);
            }
        }
        m.h = 0;
        m.w = 0;
    };
    rec_k = [&](int i, int deg) {
        if (i == n) {
            finish(deg);
            return;
        }
        const int cap = i == n - 1 ? 1 : opt.max_degree;
        for (int e = 0; e <= cap && deg + e <= opt.max_degree; ++e) {
            if (e > 0 && !opt.with_A) break;
            m.k[i] = e;
            rec_k(i + 1, deg + e);
        }
        m.k[i] = 0;
    };
    rec_l = [&](int p, int deg) {
        if (p == pairs) {
            rec_k(0, deg);
            return;
        }
        for (int e = 0; deg + e <= opt.max_degree; ++e) {
            m.l_exp[p] = e;
            rec_l(p + 1, deg + e);
        }
        m.l_exp[p] = 0;
    };
    rec_l(0, 0);
    std::stable_sort(out.begin(), out.end(), [](const NormalMonomial& a, const NormalMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.l_exp != b.l_exp) return a.l_exp > b.l_exp;
        if (a.k != b.k) return a.k > b.k;
        if (a.h != b.h) return a.h > b.h;
        return a.w < b.w;
    });
    return out;
}

std::size_t independence_rank(const std::vector<NormalMonomial>& monomials, const Algebra& alg, int test_degree,
                              std::uint64_t seed) {
    std::vector<Element> elements;
    for (const auto& m : monomials) {
        Element e;
        e.add(m.word(alg.n()), Poly(1));
        elements.push_back(std::move(e));
    }
    return independence_rank(elements, alg, test_degree, seed);
}

std::size_t independence_rank(const std::vector<Element>& elements, const Algebra& alg, int test_degree,
                              std::uint64_t seed) {
    if (elements.empty()) return 0;
    const int n = alg.n();
    const auto& sys = alg.system();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    auto rnd = [&] { return make_rational(num(rng), den(rng)); };
    auto nonzero = [&] {
        for (;;)
            if (Rational v = rnd(); v != 0) return v;
    };

    // parameters: one value per orbit and gamma
    std::vector<std::pair<int, Rational>> params;
    for (int k = 0; k < sys->roots.num_orbits; ++k) params.emplace_back(vars::g(k), nonzero());
    params.emplace_back(vars::kGamma, nonzero());
    Catalog cat(sys, alg.gamma());

    std::vector<Operator> ops;
    for (const auto& e : elements) {
        Operator op = rho(e, cat);
        for (const auto& [v, x] : params) op = op.specialize_param(v, x);
        ops.push_back(std::move(op));
    }

    std::vector<RExt> tests;
    std::function<void(int, int, Monomial)> rec = [&](int var, int left, Monomial mono) {
        if (var == n) {
            tests.emplace_back(Poly(mono, Rational(1)));
            tests.emplace_back(RatFunc(), RatFunc(Poly(mono, Rational(1))), n);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            Monomial nm = mono;
            nm.set(vars::x(var), e);
            rec(var + 1, left - e, nm);
        }
    };
    rec(0, test_degree, Monomial());

    const std::size_t rows = ops.size();

    std::vector<std::vector<RExt>> images(rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& f : tests) images[r].push_back(apply(ops[r], f));

    // A point sees only a finite jet of each operator, so points are added
    // until the rank is full or stops growing for three points in a row.
    std::vector<Vec> matrix(rows);
    std::size_t best = 0;
    for (int stall = 0; best < rows && stall < 3;) {
        for (int attempt = 0;; ++attempt) {
            std::vector<Rational> pt(Monomial::kMaxVars, Rational(0));
            for (int i = 0; i < n; ++i) pt[i] = rnd();
            for (const auto& [v, x] : params) pt[v] = x;
            bool ok = true;
            Rational q(0);
            for (int i = 0; i < n; ++i) q += pt[i] * pt[i];
            if (q == 0) ok = false;
            for (const auto& root : sys->roots.roots) {
                Rational s(0);
                for (int i = 0; i < n; ++i) s += root[i] * pt[i];
                if (s == 0) ok = false;
            }
            std::vector<Vec> cols(rows);
            if (ok) {
                try {
                    for (std::size_t r = 0; r < rows; ++r)
                        for (const auto& img : images[r]) {
                            const auto [a, b] = img.evaluate(pt);
                            cols[r].push_back(a);
                            cols[r].push_back(b);
                        }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::PoleAtSamplePoint) throw;
                    ok = false;
                }
            }
            if (ok) {
                for (std::size_t r = 0; r < rows; ++r) matrix[r].insert(matrix[r].end(), cols[r].begin(), cols[r].end());
                break;
            }
            if (attempt > 20) throw Error(ErrorKind::PoleAtSamplePoint, "no admissible sample point");
        }
        const std::size_t now = rank(matrix);
        stall = now > best ? 0 : stall + 1;
        best = std::max(best, now);
    }
    return best;
}

// ---------------------------------------------------------------- phi

namespace {

std::optional<Rational> rational_sqrt(const Rational& v) {
    if (v < 0) return std::nullopt;
    const Integer& p = v.get_num();
    const Integer& q = v.get_den();
    if (!mpz_perfect_square_p(p.get_mpz_t()) || !mpz_perfect_square_p(q.get_mpz_t())) return std::nullopt;
    Integer sp, sq;
    mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
    return Rational(sp, sq);
}

}  // namespace

Report phi_check(const Algebra& alg, const Rational& a) {
    const auto t0 = std::chrono::steady_clock::now();
    if (a == 0) throw Error(ErrorKind::BadCentralValue, "central value must be nonzero");
    const auto c = rational_sqrt(-a);
    if (!c) throw Error(ErrorKind::BadCentralValue, "-a = " + dunkl::to_string(Rational(-a)) + " is not a rational square");
    const int N = alg.n();
    const auto& sys = *alg.system();
    auto ext = make_system(with_ambient(sys.roots, N + 1), std::max<std::size_t>(sys.group.order(), 1200));

    // group element indices in the extended realization
    std::vector<int> embed(sys.group.order());
    for (std::size_t w = 0; w < sys.group.order(); ++w) {
        Vec m((N + 1) * (N + 1), Rational(0));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m[i * (N + 1) + j] = sys.group.entry(static_cast<int>(w), i, j);
        m[(N + 1) * (N + 1) - 1] = 1;
        embed[w] = ext->group.find(m);
        if (embed[w] < 0) throw Error(ErrorKind::BadSpec, "group does not embed in the extended realization");
    }

    Catalog cat(ext, alg.gamma());
    auto phi = [&](Letter l) -> Operator {
        switch (l.kind()) {
        case Letter::L: return cat.L(l.a(), l.b());
        case Letter::A: return *c * cat.L(l.a(), N);
        case Letter::H: return a * cat.one();
        case Letter::W: return cat.w(embed[l.a()]);
        }
        return cat.one();
    };

    Report rep;
    rep.identity = "phi";
    rep.system = sys.roots.label;
    rep.g_mode = g_mode_of(sys);
    rep.gamma_mode = gamma_mode_of(alg.gamma());
    auto check = [&](const Operator& r, const std::string& where) {
        ++rep.checks;
        if (r.is_zero() || rep.residual) return;
        rep.residual = where + ": " + std::to_string(r.size()) + " term(s), leading " + r.leading_term_string();
    };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) check(cat.L(i, j) + cat.L(j, i), "antisymmetry");
    // The square of A maps to -a (I_{N+1} - b), which generates the quotient ideal.
    const Rational nn = Rational((N - 1) * (N - 1)) / 4;
    const Poly b = Poly(nn) - Rational(1) / a * (alg.gamma() * alg.gamma());
    const Operator casimir_rel = Rational(-a) * (cat.Casimir() - RExt(b) * cat.one());
    for (const auto& [name, rel] : alg.relations()) {
        const Operator img = image(rel, ext, phi);
        check(name == "square of A" ? img - casimir_rel : img, name);
    }

    bool zero_coupling = true;
    for (const auto& m : sys.roots.multiplicity) zero_coupling = zero_coupling && m.is_zero();
    if (zero_coupling) {
        // so(N+1) with Kronecker deltas
        auto Lx = [&](int i, int j) { return cat.L(i, j); };
        for (int i = 0; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                for (int k = 0; k <= N; ++k)
                    for (int l = k + 1; l <= N; ++l) {
                        Operator rhs(ext);
                        if (j == k) rhs += Lx(i, l);
                        if (i == k) rhs -= Lx(j, l);
                        if (j == l) rhs -= Lx(i, k);
                        if (i == l) rhs += Lx(j, k);
                        check(commutator(Lx(i, j), Lx(k, l)) - rhs, "so(N+1) bracket");
                    }
    }
    rep.pass = !rep.residual.has_value();
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace dunkl
