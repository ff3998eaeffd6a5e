#include "dunkl/cherednik.hpp"

#include <functional>

namespace dunkl {

namespace {

Poly act_poly(const Poly& f, const GroupTable& g, int w) {
    if (w == GroupTable::identity() || f.is_constant()) return f;
    const int n = g.dim();
    // f(w^{-1} x) = f(M^T x)
    std::vector<Rational> T(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) T[i * n + j] = g.entry(w, j, i);
    return f.linear_substitute(n, T);
}

/// f = quo * q + rem with deg_{x_1} rem < 2.
std::pair<Poly, Poly> divmod_q(const Poly& f, int dim) {
    const Poly& q = RExt::q_poly(dim);
    std::vector<Poly::Term> quo;
    Poly rem = f;
    for (;;) {
        const int e = rem.degree_in(vars::x(0));
        if (e < 2) break;
        std::vector<Poly::Term> top;
        for (const auto& t : rem.terms())
            if (t.mono[vars::x(0)] == e) {
                Monomial m = t.mono;
                m.set(vars::x(0), e - 2);
                top.push_back({m, t.coeff});
            }
        const Poly lead = Poly::from_terms(top);
        rem -= lead * q;
        for (auto& t : lead.terms()) quo.push_back(t);
    }
    return {Poly::from_terms(std::move(quo)), rem};
}

void add_into(std::map<int, Poly>& parts, int m, const Poly& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = parts.try_emplace(m, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) parts.erase(it);
    }
}

}  // namespace

RLaurent::RLaurent(const Poly& f, int m, int dim) : dim_(dim) {
    if (!f.is_zero()) parts_.emplace(m, f);
    normalize();
}

void RLaurent::normalize() {
    if (parts_.empty()) return;
    const Poly& q = RExt::q_poly(dim_);
    while (!parts_.empty() && parts_.rbegin()->first >= 2) {
        auto it = std::prev(parts_.end());
        const int m = it->first;
        const Poly f = it->second * q;
        parts_.erase(it);
        add_into(parts_, m - 2, f);
    }
    // ascending, so carries only land on exponents not yet visited
    for (auto it = parts_.begin(); it != parts_.end() && it->first < 0;) {
        const int m = it->first;
        auto [quo, rem] = divmod_q(it->second, dim_);
        if (rem.is_zero())
            parts_.erase(it);
        else
            it->second = std::move(rem);
        add_into(parts_, m + 2, quo);
        it = parts_.upper_bound(m);
    }
}

RLaurent& RLaurent::operator+=(const RLaurent& o) {
    if (o.parts_.empty()) return *this;
    dim_ = o.dim_;
    for (const auto& [m, f] : o.parts_) add_into(parts_, m, f);
    normalize();
    return *this;
}

RLaurent RLaurent::operator-() const {
    RLaurent c = *this;
    for (auto& [m, f] : c.parts_) f = -f;
    return c;
}

RLaurent RLaurent::times(const Poly& f, int m) const {
    RLaurent c;
    c.dim_ = dim_;
    if (f.is_zero()) return c;
    for (const auto& [k, p] : parts_) add_into(c.parts_, k + m, p * f);
    c.normalize();
    return c;
}

RLaurent RLaurent::partial(int i) const {
    RLaurent c;
    c.dim_ = dim_;
    for (const auto& [m, f] : parts_) {
        add_into(c.parts_, m, f.derivative(vars::x(i)));
        // d r^m = m x_i r^{m-2}
        if (m != 0) add_into(c.parts_, m - 2, f * Poly::var(vars::x(i)) * Rational(m));
    }
    c.normalize();
    return c;
}

RLaurent RLaurent::act(const GroupTable& g, int w) const {
    RLaurent c;
    c.dim_ = dim_;
    for (const auto& [m, f] : parts_) c.parts_.emplace(m, act_poly(f, g, w));
    c.normalize();
    return c;
}

RLaurent RLaurent::divided_difference(const GroupTable& g, int s, const Poly& l) const {
    RLaurent c;
    c.dim_ = dim_;
    for (const auto& [m, f] : parts_) {
        const Poly d = f - act_poly(f, g, s);
        if (d.is_zero()) continue;
        auto quo = d.divide_exact(l);
        if (!quo) throw Error(ErrorKind::NotInvertible, "divided difference is not polynomial");
        c.parts_.emplace(m, std::move(*quo));
    }
    c.normalize();
    return c;
}

RExt RLaurent::to_rext() const {
    std::vector<RExt> terms;
    const RExt r = RExt::r(dim_);
    const RatFunc qinv = RatFunc(RExt::q_poly(dim_)).inverse();
    for (const auto& [m, f] : parts_) {
        // r^m = q^{(m - (m mod 2)) / 2} r^{m mod 2}
        const int odd = ((m % 2) + 2) % 2;
        const int half = (m - odd) / 2;
        RatFunc a(f);
        for (int k = 0; k < -half; ++k) a = a * qinv;
        for (int k = 0; k < half; ++k) a = a * RatFunc(RExt::q_poly(dim_));
        terms.push_back(odd ? RExt(RatFunc(), a, dim_) : RExt(a, RatFunc(), dim_));
    }
    return RExt::sum(terms);
}

// ---------------------------------------------------------------- elements

CherednikElement::CherednikElement(std::shared_ptr<const CoxeterSystem> sys) : sys_(std::move(sys)) {}

CherednikElement CherednikElement::one(std::shared_ptr<const CoxeterSystem> sys) {
    CherednikElement e(sys);
    e.add({GroupTable::identity(), Monomial()}, RLaurent(Poly(1), 0, sys->dim()));
    return e;
}

void CherednikElement::add(const Key& k, const RLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CherednikElement& CherednikElement::operator+=(const CherednikElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

CherednikElement& CherednikElement::operator-=(const CherednikElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

CherednikElement CherednikElement::times(const Poly& f, int m) const {
    CherednikElement out(sys_);
    for (const auto& [k, c] : terms_) out.add(k, c.times(f, m));
    return out;
}

CherednikElement CherednikElement::group(int u) const {
    CherednikElement out(sys_);
    const auto& g = sys_->group;
    for (const auto& [k, c] : terms_) out.add({g.mul(u, k.w), k.beta}, c.act(g, u));
    return out;
}

CherednikElement CherednikElement::nabla(int i) const {
    CherednikElement out(sys_);
    const auto& g = sys_->group;
    const auto& rs = sys_->roots;
    const int n = sys_->dim();
    std::vector<Poly> forms;
    for (const auto& a : rs.roots) {
        Poly l;
        for (int t = 0; t < n; ++t)
            if (a[t] != 0) l += Poly::var(vars::x(t)) * a[t];
        forms.push_back(l);
    }
    for (const auto& [k, c] : terms_) {
        // nabla_i w = w sum_j M_ij nabla_j
        for (int j = 0; j < n; ++j) {
            const Rational m = g.entry(k.w, i, j);
            if (m == 0) continue;
            Monomial b = k.beta;
            b.set(j, b[j] + 1);
            out.add({k.w, b}, c.times(Poly(m), 0));
        }
        out.add(k, c.partial(i));
        for (std::size_t a = 0; a < rs.roots.size(); ++a) {
            const Rational ai = rs.roots[a][i];
            if (ai == 0) continue;
            const int s = g.reflection(a);
            const RLaurent d = c.divided_difference(g, s, forms[a]);
            if (d.is_zero()) continue;
            out.add({g.mul(s, k.w), k.beta}, d.times(rs.coupling(a) * ai, 0));
        }
    }
    return out;
}

RExt CherednikElement::apply(const RExt& f, const Catalog& cat) const {
    std::map<Monomial, RExt> powers;
    powers.emplace(Monomial(), f);
    std::function<const RExt&(const Monomial&)> power = [&](const Monomial& b) -> const RExt& {
        if (auto it = powers.find(b); it != powers.end()) return it->second;
        int j = 0;
        while (b[j] == 0) ++j;
        Monomial rest = b;
        rest.set(j, b[j] - 1);
        RExt v = dunkl::apply(cat.dunkl(j), power(rest));
        return powers.emplace(b, std::move(v)).first->second;
    };
    std::vector<RExt> parts;
    for (const auto& [k, c] : terms_) {
        RExt v = power(k.beta);
        if (v.is_zero()) continue;
        if (k.w != GroupTable::identity()) v = dunkl::apply(cat.w(k.w), v);
        parts.push_back(c.to_rext() * v);
    }
    return RExt::sum(parts);
}

Operator CherednikElement::to_operator(const Catalog& cat) const {
    std::vector<Operator> parts;
    const int n = sys_->dim();
    for (const auto& [k, c] : terms_) {
        Operator op = cat.w(k.w);
        for (int j = 0; j < n; ++j)
            for (int e = 0; e < k.beta[j]; ++e) op = compose(op, cat.dunkl(j));
        parts.push_back(c.to_rext() * op);
    }
    if (parts.empty()) return Operator(sys_);
    return Operator::sum(parts);
}

// ---------------------------------------------------------------- letters

CherednikRep::CherednikRep(std::shared_ptr<const CoxeterSystem> sys, Poly gamma) : sys_(std::move(sys)), gamma_(std::move(gamma)) {}

CherednikElement CherednikRep::laplacian(const CherednikElement& e) const {
    CherednikElement out(sys_);
    for (int k = 0; k < sys_->dim(); ++k) out += e.nabla(k).nabla(k);
    return out;
}

CherednikElement CherednikRep::apply(Letter l, const CherednikElement& e) const {
    const int n = sys_->dim();
    switch (l.kind()) {
    case Letter::L:
        return e.nabla(l.b()).times(Poly::var(vars::x(l.a()))) - e.nabla(l.a()).times(Poly::var(vars::x(l.b())));
    case Letter::H:
        return laplacian(e) + e.times(gamma_ * Rational(2), -1);
    case Letter::W:
        return e.group(l.a());
    case Letter::A: {
        const int i = l.a();
        CherednikElement out = (laplacian(e) + e.times(gamma_, -1)).times(-Poly::var(vars::x(i)));
        CherednikElement inner = e.times(Poly(make_rational(n - 3, 2)));
        for (int k = 0; k < n; ++k) inner += e.nabla(k).times(Poly::var(vars::x(k)));
        // -S e = sum g_a s_a e
        const auto& rs = sys_->roots;
        for (std::size_t a = 0; a < rs.roots.size(); ++a) inner += e.group(sys_->group.reflection(a)).times(rs.coupling(a));
        return out + inner.nabla(i);
    }
    }
    return e;
}

CherednikElement CherednikRep::image(const Word& w) const {
    CherednikElement e = CherednikElement::one(sys_);
    for (auto it = w.rbegin(); it != w.rend(); ++it) e = apply(*it, e);
    return e;
}

CherednikElement CherednikRep::image(const Element& e) const {
    CherednikElement out(sys_);
    for (const auto& [w, c] : e.terms()) out += image(w).times(c);
    return out;
}

}  // namespace dunkl
