#include "dunkl/ratfunc.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "modp.hpp"

namespace dunkl {

namespace modp {

std::optional<std::uint64_t> evaluate(const Poly& p, std::span<const std::uint64_t> point) {
    std::uint64_t sum = 0;
    for (const auto& t : p.terms()) {
        auto c = residue(t.coeff);
        if (!c) return std::nullopt;
        std::uint64_t v = *c;
        for (int i = 0; i < Monomial::kMaxVars; ++i) {
            const int e = t.mono[i];
            if (e) v = mul(v, pow(point[i], e));
        }
        sum = add(sum, v);
    }
    return sum;
}

}  // namespace modp

namespace {

bool involves_params(const Poly& p) { return !p.only_vars_below(vars::kFirstParam); }

bool positive_diagonal_quadratic(const Poly& p) {
    if (p.total_degree() != 2 || p.size() < 2) return false;
    for (const auto& t : p.terms()) {
        if (t.mono.degree() != 2 || sgn(t.coeff) <= 0) return false;
        bool square = false;
        for (int v = 0; v < Monomial::kMaxVars; ++v)
            if (t.mono[v] == 2) square = true;
        if (!square) return false;
    }
    return true;
}

bool classify_irreducible(const Poly& base) {
    return base.total_degree() == 1 || positive_diagonal_quadratic(base);
}

bool same_factor_lists(const std::vector<DenFactor>& a, const std::vector<DenFactor>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].exp != b[i].exp || a[i].base != b[i].base) return false;
    return true;
}

void sort_factors(std::vector<DenFactor>& f) {
    std::sort(f.begin(), f.end(), [](const DenFactor& a, const DenFactor& b) { return a.base < b.base; });
}

bool has_generic(const std::vector<DenFactor>& f) {
    return std::any_of(f.begin(), f.end(), [](const DenFactor& d) { return !d.irreducible; });
}

// Modular point on the zero set of an irreducible factor, if one is cheap to build.
std::optional<std::vector<std::uint64_t>> zero_point(const Poly& f) {
    modp::Stream rng(f.hash() ^ 0x5DEECE66DULL);
    std::vector<std::uint64_t> pt(Monomial::kMaxVars);
    for (auto& v : pt) v = rng.residue();
    if (f.total_degree() == 1) {
        // f = x_v + sum c_j x_j + c0 with the leading variable v.
        const auto& lead = f.leading();
        int v = -1;
        for (int i = 0; i < Monomial::kMaxVars; ++i)
            if (lead.mono[i]) v = i;
        std::uint64_t rest = 0;
        for (std::size_t k = 1; k < f.size(); ++k) {
            const auto& t = f.terms()[k];
            auto c = modp::residue(t.coeff);
            if (!c) return std::nullopt;
            std::uint64_t val = *c;
            for (int i = 0; i < Monomial::kMaxVars; ++i)
                if (t.mono[i]) val = modp::mul(val, pt[i]);
            rest = modp::add(rest, val);
        }
        pt[v] = modp::neg(rest);
        return pt;
    }
    // Unit-coefficient sum of squares: place (u + v)/2, (u - v)/(2i) on two of its variables.
    std::vector<int> vs;
    for (const auto& t : f.terms()) {
        if (t.coeff != 1) return std::nullopt;
        for (int i = 0; i < Monomial::kMaxVars; ++i)
            if (t.mono[i] == 2) vs.push_back(i);
    }
    if (vs.size() < 2) return std::nullopt;
    std::uint64_t c = 0;
    for (std::size_t k = 2; k < vs.size(); ++k) c = modp::add(c, modp::mul(pt[vs[k]], pt[vs[k]]));
    const std::uint64_t u = rng.residue() | 1;
    const std::uint64_t w = modp::mul(modp::neg(c), modp::inv(u));
    const std::uint64_t half = modp::inv(2);
    pt[vs[0]] = modp::mul(modp::add(u, w), half);
    pt[vs[1]] = modp::mul(modp::sub(u, w), modp::inv(modp::mul(2, modp::kSqrtMinusOne)));
    return pt;
}

bool divides(const Poly& num, const DenFactor& f, Poly& quotient) {
    if (f.irreducible) {
        if (auto pt = zero_point(f.base)) {
            auto v = modp::evaluate(num, *pt);
            if (v && *v != 0) return false;
        }
    }
    auto q = num.divide_exact(f.base);
    if (!q) return false;
    quotient = std::move(*q);
    return true;
}

Poly expand(const std::vector<DenFactor>& fs) {
    Poly d(1);
    for (const auto& f : fs) d = d * f.base.pow(f.exp);
    return d;
}

// Removes every irreducible factor of `fs` from the generic polynomial g,
// adding the extracted multiplicity to `extra`.
Poly extract_known(Poly g, const std::vector<DenFactor>& fs, std::vector<int>& extra) {
    extra.assign(fs.size(), 0);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!fs[i].irreducible) continue;
        while (g.total_degree() >= fs[i].base.total_degree()) {
            auto q = g.divide_exact(fs[i].base);
            if (!q) break;
            g = std::move(*q);
            ++extra[i];
        }
    }
    return g;
}

// Combines two reduced factor lists into the factorization of their product
// (add_exps) or lcm.
std::vector<DenFactor> combine(const std::vector<DenFactor>& a, const std::vector<DenFactor>& b, bool add_exps) {
    std::vector<DenFactor> irr_a, irr_b;
    Poly ga(1), gb(1);
    for (const auto& f : a) {
        if (f.irreducible) irr_a.push_back(f);
        else ga = f.base.pow(f.exp);
    }
    for (const auto& f : b) {
        if (f.irreducible) irr_b.push_back(f);
        else gb = f.base.pow(f.exp);
    }
    // Irreducible factors of one side may hide inside the other side's generic part.
    std::vector<int> ea, eb;
    if (!ga.is_constant()) ga = extract_known(ga, irr_b, ea);
    if (!gb.is_constant()) gb = extract_known(gb, irr_a, eb);
    struct Entry {
        Poly base;
        int in_a = 0, in_b = 0;
    };
    std::vector<Entry> entries;
    auto slot = [&](const Poly& base) -> Entry& {
        for (auto& e : entries)
            if (e.base == base) return e;
        entries.push_back({base});
        return entries.back();
    };
    for (std::size_t i = 0; i < irr_a.size(); ++i) {
        slot(irr_a[i].base).in_a += irr_a[i].exp;
        if (!eb.empty() && eb[i]) slot(irr_a[i].base).in_b += eb[i];
    }
    for (std::size_t i = 0; i < irr_b.size(); ++i) {
        slot(irr_b[i].base).in_b += irr_b[i].exp;
        if (!ea.empty() && ea[i]) slot(irr_b[i].base).in_a += ea[i];
    }
    std::vector<DenFactor> out;
    out.reserve(entries.size() + 1);
    for (auto& e : entries) out.push_back({std::move(e.base), add_exps ? e.in_a + e.in_b : std::max(e.in_a, e.in_b), true});
    if (!ga.is_constant() || !gb.is_constant()) {
        Poly g;
        if (add_exps) {
            g = ga * gb;
        } else {
            const Poly common = Poly::gcd(ga, gb);
            g = ga * *gb.divide_exact(common);
        }
        g = g.monic();
        if (!g.is_constant()) out.push_back({g, 1, false});
    }
    sort_factors(out);
    return out;
}

// If monic p is l^d for a linear form l, returns l and sets d.
std::optional<Poly> linear_root(const Poly& p, int& d) {
    d = p.total_degree();
    if (d < 2) return std::nullopt;
    const Monomial lead = p.leading().mono;
    int v = -1;
    for (int i = 0; i < Monomial::kMaxVars; ++i)
        if (lead[i]) {
            if (v >= 0 || lead[i] != d) return std::nullopt;
            v = i;
        }
    Poly l = Poly::var(v);
    const Monomial base = Monomial::var(v, d - 1);
    for (const auto& t : p.terms()) {
        if (t.mono.degree() < d - 1 || !t.mono.divisible_by(base)) continue;
        const Monomial rest = t.mono / base;
        if (rest.is_one() || rest == Monomial::var(v)) {
            if (rest.is_one()) l += Poly(t.coeff / d);
            continue;
        }
        l += Poly(rest, t.coeff / d);
    }
    if (l.pow(d) != p) return std::nullopt;
    return l;
}

}  // namespace

std::pair<Rational, std::vector<DenFactor>> light_factor(const Poly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroDenominator, "zero polynomial has no factorization");
    Rational unit = p.leading().coeff;
    std::vector<DenFactor> out;
    const Monomial mc = p.monomial_content();
    Poly rest = p;
    if (!mc.is_one()) {
        rest = *p.divide_exact(Poly(mc, 1));
        for (int v = 0; v < Monomial::kMaxVars; ++v)
            if (mc[v]) out.push_back({Poly::var(v), mc[v], true});
    }
    rest = rest.monic();
    if (!rest.is_constant()) {
        int e = 1;
        if (auto root = linear_root(rest, e)) out.push_back({std::move(*root), e, true});
        else out.push_back({rest, 1, classify_irreducible(rest)});
    }
    sort_factors(out);
    return {unit, out};
}

RatFunc RatFunc::fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
    if (num.is_zero()) return RatFunc();
    auto [unit, factors] = light_factor(den);
    RatFunc r(num * (1 / unit), std::move(factors));
    r.cancel();
    for (const auto& f : r.den_)
        if (involves_params(f.base)) throw Error(ErrorKind::BadSpec, "parameter symbol in a denominator");
    return r;
}

void RatFunc::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    Poly q;
    for (auto& f : den_) {
        if (f.irreducible) {
            while (f.exp > 0 && num_.total_degree() >= f.base.total_degree() && divides(num_, f, q)) {
                num_ = std::move(q);
                --f.exp;
            }
        } else {
            Poly g = f.base.pow(f.exp);
            const Poly common = Poly::gcd(num_, g);
            if (!common.is_constant()) {
                num_ = *num_.divide_exact(common);
                g = *g.divide_exact(common);
                const Rational lc = g.leading().coeff;
                num_ *= 1 / lc;
                f.base = g.monic();
                f.exp = f.base.is_constant() ? 0 : 1;
            }
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const DenFactor& f) { return f.exp == 0; }), den_.end());
}

Poly RatFunc::den() const { return expand(den_); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc& RatFunc::operator*=(const Rational& c) {
    if (sgn(c) == 0) return *this = RatFunc();
    num_ *= c;
    return *this;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.empty() && b.den_.empty()) return RatFunc(a.num_ * b.num_);
    Poly na = a.num_, nb = b.num_;
    std::vector<DenFactor> da = a.den_, db = b.den_;
    Poly q;
    auto cross = [&q](Poly& n, std::vector<DenFactor>& d) {
        for (auto& f : d) {
            if (f.irreducible) {
                while (f.exp > 0 && n.total_degree() >= f.base.total_degree() && divides(n, f, q)) {
                    n = std::move(q);
                    --f.exp;
                }
            } else {
                Poly g = f.base.pow(f.exp);
                const Poly common = Poly::gcd(n, g);
                if (!common.is_constant()) {
                    n = *n.divide_exact(common);
                    g = *g.divide_exact(common);
                    n *= 1 / g.leading().coeff;
                    f.base = g.monic();
                    f.exp = f.base.is_constant() ? 0 : 1;
                }
            }
        }
        d.erase(std::remove_if(d.begin(), d.end(), [](const DenFactor& f) { return f.exp == 0; }), d.end());
    };
    cross(na, db);
    cross(nb, da);
    return RatFunc(na * nb, combine(da, db, true));
}

RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = (*this) * o; }

RatFunc RatFunc::sum(std::span<const RatFunc> terms) {
    // Group terms with identical denominators first.
    std::vector<std::pair<const std::vector<DenFactor>*, Poly>> groups;
    bool generic = false;
    for (const auto& t : terms) {
        if (t.is_zero()) continue;
        if (has_generic(t.den_)) generic = true;
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return same_factor_lists(*g.first, t.den_); });
        if (it == groups.end()) groups.emplace_back(&t.den_, t.num_);
        else it->second += t.num_;
    }
    if (groups.empty()) return RatFunc();
    if (groups.size() == 1) {
        RatFunc r(std::move(groups[0].second), *groups[0].first);
        r.cancel();
        return r;
    }
    if (generic) {
        RatFunc acc(groups[0].second, *groups[0].first);
        for (std::size_t k = 1; k < groups.size(); ++k) {
            RatFunc t(groups[k].second, *groups[k].first);
            const auto lcm = combine(acc.den_, t.den_, false);
            const Poly L = expand(lcm);
            Poly n = acc.num_ * *L.divide_exact(expand(acc.den_)) + t.num_ * *L.divide_exact(expand(t.den_));
            acc = RatFunc(std::move(n), lcm);
            acc.cancel();
        }
        return acc;
    }
    std::vector<DenFactor> lcm;
    for (const auto& [den, num] : groups) {
        for (const auto& f : *den) {
            auto it = std::find_if(lcm.begin(), lcm.end(), [&](const DenFactor& d) { return d.base == f.base; });
            if (it == lcm.end()) lcm.push_back(f);
            else it->exp = std::max(it->exp, f.exp);
        }
    }
    sort_factors(lcm);
    std::vector<std::vector<Poly>> powers(lcm.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& pv = powers[i];
        if (pv.empty()) pv.push_back(Poly(1));
        while (static_cast<int>(pv.size()) <= e) pv.push_back(pv.back() * lcm[i].base);
        return pv[e];
    };
    Poly total;
    for (const auto& [den, num] : groups) {
        if (num.is_zero()) continue;
        Poly cof(1);
        for (std::size_t i = 0; i < lcm.size(); ++i) {
            int have = 0;
            for (const auto& f : *den)
                if (f.base == lcm[i].base) have = f.exp;
            if (lcm[i].exp > have) cof = cof * power(i, lcm[i].exp - have);
        }
        total += cof.is_constant() ? num : num * cof;
    }
    RatFunc r(std::move(total), std::move(lcm));
    r.cancel();
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.empty() && o.den_.empty()) {
        num_ += o.num_;
        return *this;
    }
    const RatFunc parts[2] = {*this, o};
    return *this = sum(parts);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of zero");
    auto [unit, factors] = light_factor(num_);
    for (const auto& f : factors)
        if (involves_params(f.base)) throw Error(ErrorKind::BadSpec, "parameter symbol in a denominator");
    return RatFunc(expand(den_) * (1 / unit), std::move(factors));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero");
    return a * b.inverse();
}

RatFunc RatFunc::pow(int e) const {
    RatFunc result(1);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

RatFunc RatFunc::derivative(int var) const {
    if (den_.empty()) return RatFunc(num_.derivative(var));
    std::vector<std::size_t> involved;
    for (std::size_t k = 0; k < den_.size(); ++k)
        if (den_[k].base.involves(var)) involved.push_back(k);
    if (involved.empty()) {
        RatFunc r(num_.derivative(var), den_);
        r.cancel();
        return r;
    }
    // d(N / prod f^e) = (N' F - N sum e_k f_k' F / f_k) / (prod f^e * F), F = prod of involved f_k.
    Poly F(1);
    for (auto k : involved) F = F * den_[k].base;
    Poly n = num_.derivative(var) * F;
    for (auto k : involved) {
        Poly others(1);
        for (auto j : involved)
            if (j != k) others = others * den_[j].base;
        n -= num_ * (den_[k].base.derivative(var) * others) * Rational(den_[k].exp);
    }
    std::vector<DenFactor> d = den_;
    for (auto k : involved) ++d[k].exp;
    RatFunc r(std::move(n), std::move(d));
    if (has_generic(r.den_) || involved.size() != den_.size()) r.cancel();
    return r;
}

RatFunc RatFunc::linear_substitute(int dim, std::span<const Rational> T) const {
    RatFunc r(num_.linear_substitute(dim, T));
    for (const auto& f : den_) {
        const Poly img = f.base.linear_substitute(dim, T);
        if (img.is_zero()) throw Error(ErrorKind::ZeroDenominator, "singular substitution");
        const Rational unit = img.leading().coeff;
        const Poly base = img.monic();
        const int e = f.exp;
        Rational scale = 1;
        for (int k = 0; k < e; ++k) scale *= unit;
        r.num_ *= 1 / scale;
        r.den_.push_back({base, e, f.irreducible && classify_irreducible(base)});
    }
    if (r.den_.empty()) return r;
    sort_factors(r.den_);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < r.den_.size(); ++i)
        if (r.den_[i].base == r.den_[i + 1].base) ok = false;
    int generic_count = 0;
    for (const auto& f : r.den_) generic_count += f.irreducible ? 0 : 1;
    if (ok && generic_count <= 1) {
        // An invertible substitution preserves coprimality and irreducibility.
        bool was_irreducible = std::all_of(den_.begin(), den_.end(), [](const DenFactor& f) { return f.irreducible; });
        if (was_irreducible && generic_count == 0) return r;
    }
    return RatFunc::fraction(r.num_, expand(r.den_));
}

RatFunc RatFunc::specialize_param(int var, const Rational& value) const {
    RatFunc r(num_.specialize(var, value), den_);
    r.cancel();
    return r;
}

Rational RatFunc::evaluate(std::span<const Rational> point) const {
    Rational d(1);
    for (const auto& f : den_) {
        const Rational v = f.base.evaluate(point);
        if (sgn(v) == 0) throw Error(ErrorKind::PoleAtSamplePoint, "denominator vanishes at sample point");
        for (int k = 0; k < f.exp; ++k) d *= v;
    }
    return num_.evaluate(point) / d;
}

std::string RatFunc::to_string(const VarNamer& namer) const {
    if (den_.empty()) return num_.to_string(namer);
    std::ostringstream os;
    os << "(" << num_.to_string(namer) << ")/(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i) os << "*";
        os << "(" << den_[i].base.to_string(namer) << ")";
        if (den_[i].exp > 1) os << "^" << den_[i].exp;
    }
    os << ")";
    return os.str();
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.num_ != b.num_) return false;
    if (same_factor_lists(a.den_, b.den_)) return true;
    return a.den() == b.den();
}

std::size_t RatFunc::hash() const noexcept { return num_.hash(); }

}  // namespace dunkl
