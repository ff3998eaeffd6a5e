#include "dunkl/poly.hpp"

#include "modp.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace dunkl {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::NotOrthogonal: return "NotOrthogonal";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadSpec: return "BadSpec";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorKind::PoleAtSamplePoint: return "PoleAtSamplePoint";
        case ErrorKind::BadCentralValue: return "BadCentralValue";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::NotNull: return "NotNull";
        case ErrorKind::GroupPartNotIdentity: return "GroupPartNotIdentity";
        case ErrorKind::DegeneratePoint: return "DegeneratePoint";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
}

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string default_var_name(int index) {
    if (index < vars::kFirstParam) return "x" + std::to_string(index + 1);
    if (index == vars::kGamma) return "gamma";
    return "g" + std::to_string(index - vars::kFirstParam + 1);
}

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return a.mono > b.mono; }

// Merge two sorted term lists with a sign on the second.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool negate_b) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mono > b[j].mono) {
            out.push_back(a[i++]);
        } else if (b[j].mono > a[i].mono) {
            out.push_back(b[j]);
            if (negate_b) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            Rational c = negate_b ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (negate_b) out.back().coeff = -out.back().coeff;
    }
    return out;
}

}  // namespace

Poly::Poly(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({Monomial(), c});
}

Poly::Poly(const Monomial& m, const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({m, c});
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_greater);
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    return p;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.front().coeff;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Rational(0);
}

int Poly::degree_in(int var) const noexcept {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

int Poly::last_var() const noexcept {
    int v = -1;
    for (const auto& t : terms_) v = std::max(v, t.mono.last_var());
    return v;
}

bool Poly::only_vars_below(int bound) const noexcept {
    for (const auto& t : terms_)
        if (!t.mono.only_below(bound)) return false;
    return true;
}

bool Poly::free_of_range(int lo, int hi) const noexcept {
    for (const auto& t : terms_)
        for (int v = lo; v < hi; ++v)
            if (t.mono[v]) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = (*this) * o; }

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
    Poly p;
    if (sgn(c) == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;  // multiplication by a monomial preserves the order
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Poly();
    if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
    const std::size_t n = a.terms_.size() * b.terms_.size();
    if (n <= 256) {
        std::vector<Poly::Term> prod;
        prod.reserve(n);
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
        return Poly::from_terms(std::move(prod));
    }
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(n, 1 << 16));
    Rational tmp;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            mpq_mul(tmp.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
            auto [it, inserted] = acc.try_emplace(s.mono * t.mono);
            if (inserted) it->second = tmp;
            else it->second += tmp;
        }
    }
    Poly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) p.terms_.push_back({m, std::move(c)});
    std::sort(p.terms_.begin(), p.terms_.end(), term_greater);
    return p;
}

void Poly::add_product(const Poly& b, const Poly& c) { *this += b * c; }

Poly Poly::pow(int e) const {
    Poly result(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::derivative(int var) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const int e = t.mono[var];
        if (e == 0) continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back({m, t.coeff * e});
    }
    // Lowering one exponent can reorder terms relative to each other only
    // among terms of equal degree; a full sort keeps things simple and exact.
    return from_terms(std::move(out));
}

Poly Poly::substitute(std::span<const Poly> image) const {
    const int nv = static_cast<int>(image.size());
    // Cache powers of the images.
    std::vector<std::vector<Poly>> powers(nv);
    auto power = [&](int v, int e) -> const Poly& {
        auto& pv = powers[v];
        if (pv.empty()) pv.push_back(Poly(1));
        while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * image[v]);
        return pv[e];
    };
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    Poly result;
    for (const auto& t : terms_) {
        Monomial rest = t.mono;
        Poly piece(Monomial(), t.coeff);
        for (int v = 0; v < nv; ++v) {
            const int e = t.mono[v];
            if (!e) continue;
            rest.set(v, 0);
            piece = piece * power(v, e);
        }
        for (const auto& s : piece.terms_) {
            auto [it, inserted] = acc.try_emplace(s.mono * rest);
            if (inserted) it->second = s.coeff;
            else it->second += s.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), term_greater);
    result.terms_ = std::move(out);
    return result;
}

Poly Poly::linear_substitute(int dim, std::span<const Rational> T) const {
    // Signed permutation fast path: each row has exactly one entry +-1.
    bool signed_perm = true;
    std::vector<int> target(dim, -1);
    std::vector<int> sign(dim, 1);
    for (int i = 0; i < dim && signed_perm; ++i) {
        int nz = 0;
        for (int j = 0; j < dim; ++j) {
            const Rational& e = T[i * dim + j];
            if (sgn(e) == 0) continue;
            ++nz;
            if (e == 1) {
                target[i] = j;
            } else if (e == -1) {
                target[i] = j;
                sign[i] = -1;
            } else {
                signed_perm = false;
            }
        }
        if (nz != 1) signed_perm = false;
    }
    if (signed_perm) {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Monomial m = t.mono;
            int s = 1;
            for (int i = 0; i < dim; ++i) m.set(i, 0);
            for (int i = 0; i < dim; ++i) {
                const int e = t.mono[i];
                if (!e) continue;
                m.set(target[i], m[target[i]] + e);
                if (sign[i] < 0 && (e & 1)) s = -s;
            }
            out.push_back({m, s > 0 ? t.coeff : Rational(-t.coeff)});
        }
        return from_terms(std::move(out));
    }
    std::vector<Poly> image(dim);
    for (int i = 0; i < dim; ++i) {
        std::vector<Term> row;
        for (int j = 0; j < dim; ++j)
            if (sgn(T[i * dim + j]) != 0) row.push_back({Monomial::var(j), T[i * dim + j]});
        image[i] = from_terms(std::move(row));
    }
    return substitute(image);
}

Poly Poly::specialize(int var, const Rational& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const int e = t.mono[var];
        if (!e) {
            out.push_back(t);
            continue;
        }
        Rational c = t.coeff;
        Rational pw;
        mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(value.get_mpq_t()), e);
        mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(value.get_mpq_t()), e);
        pw.canonicalize();
        c *= pw;
        if (sgn(c) == 0) continue;
        Monomial m = t.mono;
        m.set(var, 0);
        out.push_back({m, std::move(c)});
    }
    return from_terms(std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < Monomial::kMaxVars; ++i) {
            const int e = t.mono[i];
            if (!e) continue;
            if (i >= static_cast<int>(point.size())) throw Error(ErrorKind::DimensionMismatch, "evaluation point too short");
            for (int k = 0; k < e; ++k) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero polynomial");
    if (is_zero()) return Poly();
    if (d.size() == 1) {
        const auto& dt = d.terms_[0];
        Poly q;
        q.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!t.mono.divisible_by(dt.mono)) return std::nullopt;
            q.terms_.push_back({t.mono / dt.mono, t.coeff / dt.coeff});
        }
        return q;
    }
    if (!leading().mono.divisible_by(d.leading().mono)) return std::nullopt;
    if (!trailing().mono.divisible_by(d.trailing().mono)) return std::nullopt;
    if (total_degree() < d.total_degree()) return std::nullopt;
    std::map<Monomial, Rational, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
    std::vector<Term> quot;
    const Monomial& lm = d.leading().mono;
    const Rational& lc = d.leading().coeff;
    Rational tmp;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!it->first.divisible_by(lm)) return std::nullopt;
        const Monomial qm = it->first / lm;
        const Rational qc = it->second / lc;
        rem.erase(it);
        for (std::size_t k = 1; k < d.terms_.size(); ++k) {
            mpq_mul(tmp.get_mpq_t(), qc.get_mpq_t(), d.terms_[k].coeff.get_mpq_t());
            auto [jt, inserted] = rem.try_emplace(qm * d.terms_[k].mono);
            if (inserted) {
                jt->second = -tmp;
            } else {
                jt->second -= tmp;
                if (sgn(jt->second) == 0) rem.erase(jt);
            }
        }
        quot.push_back({qm, qc});
    }
    Poly q;
    q.terms_ = std::move(quot);  // produced in decreasing order
    return q;
}

Rational Poly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd = abs(terms_[0].coeff.get_num());
    Integer den_lcm = terms_[0].coeff.get_den();
    for (std::size_t i = 1; i < terms_.size(); ++i) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), terms_[i].coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), terms_[i].coeff.get_den_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    if (terms_[0].coeff == 1) return *this;
    Rational inv = 1 / terms_[0].coeff;
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= inv;
    return p;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return Monomial();
    Monomial g = terms_[0].mono;
    for (std::size_t i = 1; i < terms_.size() && !g.is_one(); ++i) g = Monomial::gcd(g, terms_[i].mono);
    return g;
}

std::vector<Poly> coefficients_in(const Poly& p, int var) {
    std::vector<std::vector<Poly::Term>> buckets(p.degree_in(var) + 1);
    for (const auto& t : p.terms()) {
        Monomial m = t.mono;
        const int e = m[var];
        m.set(var, 0);
        buckets[e].push_back({m, t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
    return out;
}

namespace {

Poly from_coefficients(const std::vector<Poly>& coeffs, int var) {
    std::vector<Poly::Term> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const Monomial xe = e ? Monomial::var(var, static_cast<int>(e)) : Monomial();
        for (const auto& t : coeffs[e].terms()) terms.push_back({t.mono * xe, t.coeff});
    }
    return Poly::from_terms(std::move(terms));
}

int lowest_var(const Poly& a, const Poly& b) {
    int best = Monomial::kMaxVars;
    for (const Poly* p : {&a, &b})
        for (const auto& t : p->terms())
            for (int v = 0; v < best; ++v)
                if (t.mono[v]) {
                    best = v;
                    break;
                }
    return best == Monomial::kMaxVars ? -1 : best;
}

Poly gcd_rec(const Poly& a, const Poly& b);

// Content of p with respect to `var`: gcd of its coefficients.
Poly content_in(const std::vector<Poly>& coeffs) {
    Poly g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd_rec(g, c);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

// Divides a coefficient list by the rational content of all its entries.
void scale_primitive(std::vector<Poly>& cs) {
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        const Rational k = c.content();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), k.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), k.get_den_mpz_t());
    }
    if (num_gcd == 0) return;
    Rational inv(den_lcm, num_gcd);
    inv.canonicalize();
    if (inv == 1) return;
    for (auto& c : cs) c *= inv;
}

// Pseudo-remainder of a by b, both univariate in the same variable.
std::vector<Poly> pseudo_remainder(std::vector<Poly> a, const std::vector<Poly>& b) {
    const std::size_t n = b.size() - 1;
    const Poly& lb = b.back();
    while (!a.empty() && a.size() - 1 >= n) {
        const std::size_t m = a.size() - 1;
        const Poly la = a.back();
        for (auto& c : a) c = c * lb;
        for (std::size_t k = 0; k <= n; ++k) a[m - n + k] -= la * b[k];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
        if (m == 0) break;
    }
    return a;
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Degree of the gcd of two univariate polynomials mod p.
int mod_gcd_degree(ModPoly f, ModPoly g) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        const std::uint64_t li = modp::inv(g.back());
        while (f.size() >= g.size()) {
            const std::uint64_t k = modp::mul(f.back(), li);
            const std::size_t shift = f.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = modp::sub(f[shift + i], modp::mul(k, g[i]));
            trim(f);
        }
        std::swap(f, g);
    }
    return static_cast<int>(f.size()) - 1;
}

// Upper bound on the degree in the main variable of the gcd of the primitive
// parts, from one image with all other variables at random residues.  Empty
// when the image is unusable (vanishing leading coefficient or a coefficient
// denominator divisible by p).
std::optional<int> gcd_degree_bound(const std::vector<Poly>& ca, const std::vector<Poly>& cb) {
    static thread_local modp::Stream stream(0x5eed1234abcdULL);
    std::vector<std::uint64_t> point(Monomial::kMaxVars);
    for (auto& c : point) c = stream.residue();
    ModPoly fa(ca.size()), fb(cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const auto v = modp::evaluate(ca[i], point);
        if (!v) return std::nullopt;
        fa[i] = *v;
    }
    for (std::size_t i = 0; i < cb.size(); ++i) {
        const auto v = modp::evaluate(cb[i], point);
        if (!v) return std::nullopt;
        fb[i] = *v;
    }
    if (fa.back() == 0 || fb.back() == 0) return std::nullopt;
    return mod_gcd_degree(std::move(fa), std::move(fb));
}

Poly gcd_rec(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);
    const Monomial mc = Monomial::gcd(a.monomial_content(), b.monomial_content());
    Poly aa = a, bb = b;
    if (!mc.is_one()) {
        aa = *a.divide_exact(Poly(mc, 1));
        bb = *b.divide_exact(Poly(mc, 1));
    }
    const int v = lowest_var(aa, bb);
    if (v < 0) return Poly(mc, 1);
    auto ca = coefficients_in(aa, v);
    auto cb = coefficients_in(bb, v);
    // If one side does not involve v, the gcd is the gcd of its content-free part with the other's coefficients.
    if (ca.size() == 1 || cb.size() == 1) {
        Poly g = ca.size() == 1 ? ca[0] : cb[0];
        const auto& other = ca.size() == 1 ? cb : ca;
        for (const auto& c : other) {
            if (c.is_zero()) continue;
            g = gcd_rec(g, c);
            if (g.is_constant()) break;
        }
        return (g * Poly(mc, 1)).monic();
    }
    // Coprime in v over the other variables: the gcd is the gcd of all coefficients.
    if (gcd_degree_bound(ca, cb) == 0) {
        std::vector<Poly> all = ca;
        all.insert(all.end(), cb.begin(), cb.end());
        return (content_in(all) * Poly(mc, 1)).monic();
    }
    const Poly cont_a = content_in(ca);
    const Poly cont_b = content_in(cb);
    const Poly cont = gcd_rec(cont_a, cont_b);
    if (!cont_a.is_constant())
        for (auto& c : ca) c = *c.divide_exact(cont_a);
    if (!cont_b.is_constant())
        for (auto& c : cb) c = *c.divide_exact(cont_b);
    if (ca.size() < cb.size()) std::swap(ca, cb);
    scale_primitive(ca);
    scale_primitive(cb);
    while (cb.size() > 1) {
        auto r = pseudo_remainder(ca, cb);
        ca = std::move(cb);
        if (r.empty()) {
            cb.clear();
            break;
        }
        const Poly rc = content_in(r);
        if (!rc.is_constant())
            for (auto& c : r) c = *c.divide_exact(rc);
        scale_primitive(r);
        cb = std::move(r);
    }
    Poly g;
    if (cb.size() == 1) {
        g = Poly(1);  // nonzero constant remainder: primitive parts are coprime
    } else {
        const Poly cc = content_in(ca);
        if (!cc.is_constant())
            for (auto& c : ca) c = *c.divide_exact(cc);
        g = from_coefficients(ca, v);
    }
    return (g * cont * Poly(mc, 1)).monic();
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

std::string Poly::to_string(const VarNamer& namer) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        const bool unit = (c == 1);
        if (!unit || t.mono.is_one()) {
            os << c.get_str();
            if (!t.mono.is_one()) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < Monomial::kMaxVars; ++v) {
            const int e = t.mono[v];
            if (!e) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << namer(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

bool operator<(const Poly& a, const Poly& b) {
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return a.terms_[i].mono < b.terms_[i].mono;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
    }
    return a.terms_.size() < b.terms_.size();
}

std::size_t Poly::hash() const noexcept {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h = h * 1000003u ^ t.mono.hash();
        h = h * 1000003u ^ std::hash<long>()(mpz_get_si(t.coeff.get_num_mpz_t()));
    }
    return h;
}

}  // namespace dunkl
