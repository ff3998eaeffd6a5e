#include "dunkl/opalg.hpp"

#include <cctype>
#include <functional>
#include <unordered_map>

namespace dunkl {

namespace {

struct KeyHash {
    std::size_t operator()(const Operator::Key& k) const noexcept {
        return k.beta.hash() * 1000003u + static_cast<std::size_t>(k.w);
    }
};

using Acc = std::unordered_map<Operator::Key, std::vector<RExt>, KeyHash>;

const std::shared_ptr<const CoxeterSystem>& joint_system(const Operator& p, const Operator& q) {
    const auto& a = p.system();
    const auto& b = q.system();
    if (!a) return b;
    if (!b || a == b) return a;
    if (a->dim() != b->dim() || a->group.order() != b->group.order() || a->roots.label != b->roots.label)
        throw Error(ErrorKind::DimensionMismatch, "operators over different systems");
    return a;
}

/// T = M^T for the matrix of w, so that substitution realizes f -> f(w^{-1} x).
Vec transpose_of(const GroupTable& g, int w) {
    const int n = g.dim();
    Vec t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i * n + j] = g.entry(w, j, i);
    return t;
}

/// Lazily computed partial derivatives of one function.
class DerivCache {
public:
    explicit DerivCache(RExt f) { cache_.emplace(Monomial(), std::move(f)); }

    const RExt& get(const Monomial& delta) {
        if (auto it = cache_.find(delta); it != cache_.end()) return it->second;
        int v = 0;
        while (delta[v] == 0) ++v;
        Monomial lower = delta;
        lower.set(v, delta[v] - 1);
        RExt d = get(lower).partial(v);
        return cache_.emplace(delta, std::move(d)).first->second;
    }

private:
    std::unordered_map<Monomial, RExt, MonomialHash> cache_;
};

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Calls f(delta, binom(beta, delta)) for every delta <= beta.
void for_each_sub(const Monomial& beta, int n, const std::function<void(const Monomial&, const Integer&)>& f) {
    std::vector<int> top(n), cur(n, 0);
    for (int i = 0; i < n; ++i) top[i] = beta[i];
    while (true) {
        Monomial d;
        Integer c = 1;
        for (int i = 0; i < n; ++i) {
            if (cur[i]) d.set(i, cur[i]);
            if (cur[i] && cur[i] != top[i]) c *= binomial(top[i], cur[i]);
        }
        f(d, c);
        int i = 0;
        while (i < n && cur[i] == top[i]) cur[i++] = 0;
        if (i == n) return;
        ++cur[i];
    }
}

Operator::Terms finish(Acc& acc) {
    Operator::Terms out;
    for (auto& [k, parts] : acc) {
        RExt s = parts.size() == 1 ? std::move(parts[0]) : RExt::sum(parts);
        if (!s.is_zero()) out.emplace(k, std::move(s));
    }
    return out;
}

}  // namespace

Operator Operator::identity(std::shared_ptr<const CoxeterSystem> sys) {
    return coefficient(std::move(sys), RExt(1));
}

Operator Operator::coefficient(std::shared_ptr<const CoxeterSystem> sys, const RExt& c) {
    Operator p(std::move(sys));
    p.add_term(GroupTable::identity(), Monomial(), c);
    return p;
}

Operator Operator::derivative(std::shared_ptr<const CoxeterSystem> sys, int i) {
    if (i < 0 || i >= sys->dim()) throw Error(ErrorKind::IndexOutOfRange, "derivative index");
    Operator p(std::move(sys));
    p.add_term(GroupTable::identity(), Monomial::var(i), RExt(1));
    return p;
}

Operator Operator::group(std::shared_ptr<const CoxeterSystem> sys, int w) {
    if (w < 0 || static_cast<std::size_t>(w) >= sys->group.order()) throw Error(ErrorKind::IndexOutOfRange, "group element index");
    Operator p(std::move(sys));
    p.add_term(w, Monomial(), RExt(1));
    return p;
}

Operator Operator::group_algebra(std::shared_ptr<const CoxeterSystem> sys, const GroupAlgebra& a) {
    Operator p(std::move(sys));
    for (const auto& [w, c] : a) p.add_term(w, Monomial(), RExt(c));
    return p;
}

int Operator::order() const noexcept {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.beta.degree());
    return m;
}

void Operator::add_term(int w, const Monomial& beta, const RExt& c) {
    if (c.is_zero()) return;
    const Key k{w, beta};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Operator Operator::operator-() const {
    Operator p(sys_);
    for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
    return p;
}

Operator& Operator::operator+=(const Operator& o) {
    sys_ = joint_system(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k.w, k.beta, c);
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    sys_ = joint_system(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k.w, k.beta, -c);
    return *this;
}

Operator operator*(const RExt& c, const Operator& p) {
    Operator out(p.sys_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : p.terms_) {
        RExt t = c * v;
        if (!t.is_zero()) out.terms_.emplace(k, std::move(t));
    }
    return out;
}

Operator Operator::sum(std::span<const Operator> ops) {
    Operator out;
    Acc acc;
    for (const auto& o : ops) {
        out.sys_ = joint_system(out, o);
        for (const auto& [k, c] : o.terms_) acc[k].push_back(c);
    }
    out.terms_ = finish(acc);
    return out;
}

Operator Operator::specialize_param(int var, const Rational& value) const {
    Operator out(sys_);
    for (const auto& [k, c] : terms_) {
        RExt t = c.specialize_param(var, value);
        if (!t.is_zero()) out.terms_.emplace(k, std::move(t));
    }
    return out;
}

std::string Operator::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += "\n";
        s += "(" + c.to_string() + ") * D^[";
        for (int i = 0; i < dim(); ++i) s += (i ? "," : "") + std::to_string(k.beta[i]);
        s += "] * w#" + std::to_string(k.w);
    }
    return s;
}

std::string Operator::leading_term_string() const {
    if (terms_.empty()) return "0";
    const auto& [k, c] = *terms_.begin();
    std::string s = "(" + c.to_string() + ") * D^[";
    for (int i = 0; i < dim(); ++i) s += (i ? "," : "") + std::to_string(k.beta[i]);
    s += "] * w#" + std::to_string(k.w);
    if (terms_.size() > 1) s += " + " + std::to_string(terms_.size() - 1) + " more terms";
    return s;
}

Operator compose(const Operator& p, const Operator& q) {
    Operator out(joint_system(p, q));
    if (p.is_zero() || q.is_zero()) return out;
    const auto& sys = *out.system();
    const int n = sys.dim();
    const GroupTable& G = sys.group;
    Acc acc;
    std::vector<std::pair<Monomial, const RExt*>> block;
    for (auto it = p.terms_.begin(); it != p.terms_.end();) {
        const int w1 = it->first.w;
        block.clear();
        int top = 0;
        for (; it != p.terms_.end() && it->first.w == w1; ++it) {
            block.emplace_back(it->first.beta, &it->second);
            top = std::max(top, it->first.beta.degree());
        }
        const bool id = w1 == GroupTable::identity();
        const Vec T = id ? Vec() : transpose_of(G, w1);
        std::unordered_map<Monomial, Poly, MonomialHash> conj;
        for (const auto& [qk, c2] : q.terms_) {
            const int w = G.mul(w1, qk.w);
            DerivCache dc(id ? c2 : c2.substitute(n, T));
            auto cit = conj.find(qk.beta);
            if (cit == conj.end()) {
                Poly dg(qk.beta, Rational(1));
                if (!id) dg = dg.linear_substitute(n, T);
                cit = conj.emplace(qk.beta, std::move(dg)).first;
            }
            const Poly& dg = cit->second;
            for (const auto& [beta, c1] : block) {
                for_each_sub(beta, n, [&](const Monomial& delta, const Integer& binom) {
                    const RExt& dv = dc.get(delta);
                    if (dv.is_zero()) return;
                    RExt prod = *c1 * dv;
                    if (prod.is_zero()) return;
                    const Monomial rest = beta / delta;
                    for (const auto& t : dg.terms()) {
                        const Rational f = t.coeff * binom;
                        acc[Operator::Key{w, rest * t.mono}].push_back(f == 1 ? prod : prod * f);
                    }
                });
            }
        }
    }
    out.terms_ = finish(acc);
    return out;
}

Operator commutator(const Operator& p, const Operator& q) { return compose(p, q) - compose(q, p); }

Operator anticommutator(const Operator& p, const Operator& q) { return compose(p, q) + compose(q, p); }

RExt apply(const Operator& p, const RExt& f) {
    if (p.is_zero()) return RExt();
    const auto& sys = *p.system();
    const int n = sys.dim();
    std::vector<RExt> parts;
    for (auto it = p.terms().begin(); it != p.terms().end();) {
        const int w = it->first.w;
        DerivCache dc(w == GroupTable::identity() ? f : f.substitute(n, transpose_of(sys.group, w)));
        for (; it != p.terms().end() && it->first.w == w; ++it) {
            const RExt& d = dc.get(it->first.beta);
            if (!d.is_zero()) parts.push_back(it->second * d);
        }
    }
    return RExt::sum(parts);
}

Operator adjoint(const Operator& p) {
    if (p.is_zero()) return p;
    const auto& sysp = p.system();
    const int n = sysp->dim();
    std::vector<Operator> parts;
    for (const auto& [k, c] : p.terms()) {
        // (c D^b w)+ = w^{-1} (-1)^|b| D^b c
        Operator dc(sysp);
        DerivCache cache(c);
        const bool odd = k.beta.degree() % 2 == 1;
        for_each_sub(k.beta, n, [&](const Monomial& delta, const Integer& binom) {
            RExt v = cache.get(delta) * Rational(binom);
            if (odd) v = -v;
            dc.add_term(GroupTable::identity(), k.beta / delta, v);
        });
        parts.push_back(compose(Operator::group(sysp, sysp->group.inverse(k.w)), dc));
    }
    return Operator::sum(parts);
}

// ---------------------------------------------------------------------------

Catalog::Catalog(std::shared_ptr<const CoxeterSystem> sys, Poly gamma) : sys_(std::move(sys)), gamma_(std::move(gamma)) {
    if (!gamma_.free_of_range(0, vars::kMaxAmbient)) throw Error(ErrorKind::BadSpec, "gamma may not depend on x");
}

void Catalog::set_perturbed(bool on) { perturbed_ = on; }

const Operator& Catalog::memo(const std::string& key, const std::function<Operator()>& build) const {
    {
        std::lock_guard lock(mu_);
        if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    auto built = std::make_unique<Operator>(build());
    std::lock_guard lock(mu_);
    auto [it, inserted] = cache_.emplace(key, std::move(built));
    return *it->second;
}

void Catalog::check_index(int i) const {
    if (i < 0 || i >= dim()) throw Error(ErrorKind::IndexOutOfRange, "axis index " + std::to_string(i + 1));
}

Operator Catalog::one() const { return Operator::identity(sys_); }

Operator Catalog::x(int i) const {
    check_index(i);
    return Operator::coefficient(sys_, RExt(Poly::var(vars::x(i))));
}

Operator Catalog::d(int i) const {
    check_index(i);
    return Operator::derivative(sys_, i);
}

namespace {

Poly root_form(const Vec& a) {
    Poly p;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != 0) p += Poly::var(vars::x(static_cast<int>(k))) * a[k];
    return p;
}

Rational norm2(const Vec& a) {
    Rational s(0);
    for (const auto& c : a) s += c * c;
    return s;
}

}  // namespace

Operator Catalog::dunkl_dir(const Vec& xi) const {
    if (static_cast<int>(xi.size()) != dim()) throw Error(ErrorKind::DimensionMismatch, "direction length");
    Operator p(sys_);
    for (int i = 0; i < dim(); ++i)
        if (xi[i] != 0) p.add_term(GroupTable::identity(), Monomial::var(i), RExt(xi[i]));
    const auto& rs = sys_->roots;
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
        Rational ax(0);
        for (int i = 0; i < dim(); ++i) ax += rs.roots[k][i] * xi[i];
        if (ax == 0) continue;
        p.add_term(sys_->group.reflection(k), Monomial(), RExt(RatFunc::fraction(-(rs.coupling(k) * ax), root_form(rs.roots[k]))));
    }
    return p;
}

Operator Catalog::dunkl(int i) const {
    check_index(i);
    return memo("dunkl" + std::to_string(i), [&] {
        Vec e(dim(), Rational(0));
        e[i] = 1;
        return dunkl_dir(e);
    });
}

Operator Catalog::S(int i, int j) const {
    check_index(i);
    check_index(j);
    return Operator::group_algebra(sys_, exchange_element(*sys_, i, j));
}

Operator Catalog::Ssum() const { return Operator::group_algebra(sys_, s_element(*sys_)); }

Operator Catalog::L(int i, int j) const {
    check_index(i);
    check_index(j);
    return memo("L" + std::to_string(i) + "," + std::to_string(j), [&] {
        return RExt(Poly::var(vars::x(i))) * dunkl(j) - RExt(Poly::var(vars::x(j))) * dunkl(i);
    });
}

Operator Catalog::L_dir(const Vec& xi, const Vec& eta) const {
    Operator p(sys_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            const Rational c = xi[i] * eta[j];
            if (c != 0 && i != j) p += c * L(i, j);
        }
    return p;
}

Operator Catalog::rinv() const {
    return Operator::coefficient(sys_, RExt(RatFunc(), RatFunc::fraction(Poly(1), RExt::q_poly(dim())), dim()));
}

Operator Catalog::rdr() const {
    return memo("rdr", [&] {
        Operator p(sys_);
        for (int k = 0; k < dim(); ++k) p.add_term(GroupTable::identity(), Monomial::var(k), RExt(Poly::var(vars::x(k))));
        return p;
    });
}

Operator Catalog::H() const {
    return memo("H", [&] {
        Operator p(sys_);
        for (int i = 0; i < dim(); ++i) p.add_term(GroupTable::identity(), Monomial::var(i, 2), RExt(1));
        const auto& rs = sys_->roots;
        for (std::size_t k = 0; k < rs.roots.size(); ++k) {
            const Poly& g = rs.coupling(k);
            const Poly den = root_form(rs.roots[k]).pow(2);
            const Rational nn = norm2(rs.roots[k]);
            // -g (g - s) (a,a) / x_a^2
            p.add_term(GroupTable::identity(), Monomial(), RExt(RatFunc::fraction(-(g * g * nn), den)));
            p.add_term(sys_->group.reflection(k), Monomial(), RExt(RatFunc::fraction(g * nn, den)));
        }
        p += RExt(gamma_ * Rational(2)) * rinv();
        return p;
    });
}

Operator Catalog::dunkl_laplacian() const {
    return memo("lap", [&] {
        std::vector<Operator> parts;
        for (int i = 0; i < dim(); ++i) parts.push_back(compose(dunkl(i), dunkl(i)));
        return Operator::sum(parts);
    });
}

Operator Catalog::H_dunkl() const {
    return memo("Hd", [&] { return dunkl_laplacian() + RExt(gamma_ * Rational(2)) * rinv(); });
}

Operator Catalog::Hloc() const {
    return memo("Hloc", [&] {
        Operator p(sys_);
        for (int i = 0; i < dim(); ++i) p.add_term(GroupTable::identity(), Monomial::var(i, 2), RExt(1));
        const auto& rs = sys_->roots;
        for (std::size_t k = 0; k < rs.roots.size(); ++k) {
            const Poly& g = rs.coupling(k);
            const Poly den = root_form(rs.roots[k]).pow(2);
            p.add_term(GroupTable::identity(), Monomial(), RExt(RatFunc::fraction(-(g * (g - Poly(1)) * norm2(rs.roots[k])), den)));
        }
        p += RExt(gamma_ * Rational(2)) * rinv();
        return p;
    });
}

Operator Catalog::A(int i, int form) const {
    check_index(i);
    const Rational n(dim());
    const bool pert = perturbed_;
    const std::string key = "A" + std::to_string(i) + ";" + std::to_string(form) + (pert ? "p" : "");
    return memo(key, [&]() -> Operator {
        const Operator x_i = x(i);
        const Operator gr = RExt(gamma_) * rinv();
        switch (form) {
        case 1: {
            std::vector<Operator> parts;
            for (int j = 0; j < dim(); ++j)
                if (j != i) parts.push_back(make_rational(-1, 2) * anticommutator(L(i, j), dunkl(j)));
            parts.push_back(make_rational(1, 2) * commutator(dunkl(i), Ssum()));
            parts.push_back(-(RExt(gamma_ * Poly::var(vars::x(i))) * rinv()));
            return Operator::sum(parts);
        }
        case 2: {
            const Rational shift = pert ? (n - 2) / 2 : (n - 3) / 2;
            const Operator left = -compose(x_i, dunkl_laplacian() + gr);
            return left + compose(dunkl(i), rdr() + shift * one());
        }
        case 3:
            return -compose(dunkl_laplacian() + gr, x_i) + compose(rdr() + ((n + 3) / 2) * one(), dunkl(i));
        default:
            throw Error(ErrorKind::BadSpec, "A has forms 1, 2, 3");
        }
    });
}

Operator Catalog::Casimir() const {
    return memo("I", [&] {
        std::vector<Operator> parts;
        for (int i = 0; i < dim(); ++i)
            for (int j = i + 1; j < dim(); ++j) parts.push_back(compose(L(i, j), L(i, j)));
        const Operator s = Ssum();
        parts.push_back(-compose(s, s + Rational(2 - dim()) * one()));
        return Operator::sum(parts);
    });
}

Operator Catalog::w(int element) const { return Operator::group(sys_, element); }

Operator Catalog::w_word(const std::vector<int>& roots) const {
    int e = GroupTable::identity();
    for (int r : roots) {
        if (r < 0 || static_cast<std::size_t>(r) >= sys_->roots.roots.size())
            throw Error(ErrorKind::IndexOutOfRange, "positive root index " + std::to_string(r + 1));
        e = sys_->group.mul(e, sys_->group.reflection(r));
    }
    return w(e);
}

Operator Catalog::make(const std::string& raw) const {
    std::string spec;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) spec += c;
    const auto open = spec.find('(');
    const std::string name = spec.substr(0, open);
    std::vector<int> args;
    std::string option;
    if (open != std::string::npos) {
        if (spec.back() != ')') throw Error(ErrorKind::BadSpec, "missing ')' in '" + raw + "'");
        std::string inner = spec.substr(open + 1, spec.size() - open - 2);
        if (const auto semi = inner.find(';'); semi != std::string::npos) {
            option = inner.substr(semi + 1);
            inner = inner.substr(0, semi);
        }
        std::size_t pos = 0;
        while (pos < inner.size()) {
            std::size_t end = inner.find(',', pos);
            if (end == std::string::npos) end = inner.size();
            const std::string tok = inner.substr(pos, end - pos);
            if (tok.empty() || tok.size() > 4 || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
                if (name == "H" && tok == "dunkl" && args.empty() && end == inner.size()) return H_dunkl();
                throw Error(ErrorKind::BadSpec, "bad argument '" + tok + "' in '" + raw + "'");
            }
            args.push_back(std::stoi(tok) - 1);
            pos = end + 1;
        }
        if (inner.empty() && name != "w") throw Error(ErrorKind::BadSpec, "empty argument list in '" + raw + "'");
    }
    auto want = [&](std::size_t n) {
        if (args.size() != n) throw Error(ErrorKind::BadSpec, "wrong number of arguments in '" + raw + "'");
        for (int a : args)
            if (a < 0) throw Error(ErrorKind::BadSpec, "indices are 1-based in '" + raw + "'");
    };
    if (!option.empty() && name != "A") throw Error(ErrorKind::BadSpec, "unexpected option in '" + raw + "'");
    if (name == "x") return want(1), x(args[0]);
    if (name == "d") return want(1), d(args[0]);
    if (name == "dunkl") return want(1), dunkl(args[0]);
    if (name == "S" && open != std::string::npos) return want(2), S(args[0], args[1]);
    if (name == "S") return Ssum();
    if (name == "L") {
        want(2);
        if (args[0] == args[1]) throw Error(ErrorKind::BadSpec, "L needs distinct indices");
        return L(args[0], args[1]);
    }
    if (name == "A") {
        want(1);
        int form = 1;
        if (!option.empty()) {
            if (option.rfind("form=", 0) != 0 || option.size() != 6 || option[5] < '1' || option[5] > '3')
                throw Error(ErrorKind::BadSpec, "bad A option '" + option + "'");
            form = option[5] - '0';
        }
        return A(args[0], form);
    }
    if (name == "H" && open == std::string::npos) return H();
    if (name == "I" && open == std::string::npos) return Casimir();
    if (name == "rdr" && open == std::string::npos) return rdr();
    if (name == "rinv" && open == std::string::npos) return rinv();
    if (name == "Hloc" && open == std::string::npos) return Hloc();
    if (name == "w") return w_word(args);
    throw Error(ErrorKind::BadSpec, "unknown operator '" + raw + "'");
}

}  // namespace dunkl
