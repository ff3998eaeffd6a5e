#include "dunkl/superint.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace dunkl::superint {

namespace {

/// f(w^{-1} x) for a polynomial in the x variables.
Poly act_x(const Poly& f, const GroupTable& g, int w) {
    const int n = g.dim();
    std::vector<Rational> T(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) T[i * n + j] = g.entry(w, j, i);
    return f.linear_substitute(n, T);
}

/// Echelon set of polynomials keyed by leading monomial.
struct Independence {
    std::map<Monomial, Poly> rows;

    bool add(Poly f) {
        for (;;) {
            const Poly::Term* hit = nullptr;
            for (const auto& t : f.terms())
                if (rows.count(t.mono)) {
                    hit = &t;
                    break;
                }
            if (!hit) break;
            const Monomial m = hit->mono;
            f -= rows.at(m) * hit->coeff;
        }
        if (f.is_zero()) return false;
        const Monomial lead = f.leading().mono;
        rows.emplace(lead, f * (Rational(1) / f.leading().coeff));
        return true;
    }
};

}  // namespace

Symbols::Symbols(int n) : n(n) {
    if (n < 1 || n > 4) throw Error(ErrorKind::BadDimension, "symbol algebra supports N = 1..4");
}

int Symbols::m(int i, int j) const {
    if (i < 0 || j >= n || i >= j) throw Error(ErrorKind::IndexOutOfRange, "M symbol indices");
    return 1 + pair_index(i, j, n);
}

std::string Symbols::name(int var) const {
    if (var == 0) return "P2";
    if (var >= a(0) && var < a(0) + n) return "A" + std::to_string(var - a(0) + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) == var) return "M" + std::to_string(i + 1) + std::to_string(j + 1);
    return default_var_name(var);
}

SymbolPoly Symbols::M(int i, int j) const {
    if (i == j) throw Error(ErrorKind::IndexOutOfRange, "M symbol indices");
    return i < j ? Poly::var(m(i, j)) : -Poly::var(m(j, i));
}

std::string render(const SymbolPoly& s, const Symbols& sy) {
    return s.to_string([&](int v) { return sy.name(v); });
}

int symbol_degree(const SymbolPoly& s, const Symbols& sy) {
    int d = s.is_zero() ? -1 : 0;
    for (const auto& t : s.terms()) {
        int w = 0;
        for (int v = 0; v < sy.count(); ++v) w += t.mono[v] * sy.weight(v);
        d = std::max(d, w);
    }
    return d;
}

SymbolPoly act(const SymbolPoly& s, const CoxeterSystem& sys, int w) {
    const int n = sys.dim();
    const Symbols sy(n);
    const auto& g = sys.group;
    std::vector<Poly> image(sy.count());
    image[sy.p2()] = sy.P2();
    for (int i = 0; i < n; ++i) {
        Poly a;
        for (int k = 0; k < n; ++k)
            if (g.entry(w, i, k) != 0) a += sy.A(k) * g.entry(w, i, k);
        image[sy.a(i)] = a;
        for (int j = i + 1; j < n; ++j) {
            Poly m;
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const Rational c = g.entry(w, i, k) * g.entry(w, j, l) - g.entry(w, i, l) * g.entry(w, j, k);
                    if (c != 0) m += sy.M(k, l) * c;
                }
            image[sy.m(i, j)] = m;
        }
    }
    return s.substitute(image);
}

SymbolPoly reynolds(const SymbolPoly& s, const CoxeterSystem& sys) {
    Poly acc;
    const std::size_t order = sys.group.order();
    for (std::size_t w = 0; w < order; ++w) acc += act(s, sys, static_cast<int>(w));
    return acc * Rational(1, static_cast<long>(order));
}

std::vector<SymbolPoly> invariant_generators(const CoxeterSystem& sys, int degree) {
    const Symbols sy(sys.dim());
    std::vector<std::vector<Monomial>> by_weight(std::max(degree, 0) + 1);
    Monomial m;
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == sy.count()) {
            by_weight[degree - left].push_back(m);
            return;
        }
        for (int e = 0; e * sy.weight(v) <= left; ++e) {
            m.set(v, e);
            rec(v + 1, left - e * sy.weight(v));
        }
        m.set(v, 0);
    };
    if (degree < 0) return {};
    rec(0, degree);
    std::vector<SymbolPoly> out;
    Independence ind;
    for (auto& ms : by_weight) {
        std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
        for (const auto& mono : ms) {
            const Poly r = reynolds(Poly(mono, Rational(1)), sys);
            if (!r.is_zero() && ind.add(r)) out.push_back(r * (Rational(1) / r.leading().coeff));
        }
    }
    return out;
}

classical::PhasePoly expand(const SymbolPoly& s, const Symbols& sy) {
    std::vector<Poly> image(sy.count());
    image[sy.p2()] = classical::p_squared(sy.n);
    for (int i = 0; i < sy.n; ++i) {
        image[sy.a(i)] = classical::acl_poly(i, sy.n);
        for (int j = i + 1; j < sy.n; ++j) image[sy.m(i, j)] = classical::m_poly(i, j, sy.n);
    }
    return s.substitute(image);
}

std::size_t jacobian_rank(const std::vector<SymbolPoly>& gens, int n, const Vec& x, const Vec& p, const CoxeterSystem* sys) {
    if (static_cast<int>(x.size()) != n || static_cast<int>(p.size()) != n) throw Error(ErrorKind::DimensionMismatch, "point length");
    for (int i = 0; i < n; ++i)
        if (x[i] == 0 || p[i] == 0) throw Error(ErrorKind::DegeneratePoint, "point on a coordinate hyperplane");
    if (sys) {
        for (const auto& a : sys->roots.roots) {
            Rational s(0);
            for (int i = 0; i < n; ++i) s += a[i] * x[i];
            if (s == 0) throw Error(ErrorKind::DegeneratePoint, "point on a mirror");
        }
    }
    const Symbols sy(n);
    Vec point(Monomial::kMaxVars, Rational(0));
    for (int i = 0; i < n; ++i) {
        point[classical::xv(i)] = x[i];
        point[classical::pv(i)] = p[i];
    }
    std::vector<Vec> rows;
    for (const auto& g : gens) {
        const Poly f = expand(g, sy);
        Vec row;
        for (int i = 0; i < n; ++i) row.push_back(f.derivative(classical::xv(i)).evaluate(point));
        for (int i = 0; i < n; ++i) row.push_back(f.derivative(classical::pv(i)).evaluate(point));
        rows.push_back(std::move(row));
    }
    return rank(rows);
}

Selection select_generators(const std::vector<SymbolPoly>& candidates, const CoxeterSystem& sys, std::uint64_t seed) {
    const int n = sys.dim();
    const std::size_t target = 2 * n - 1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
    Selection best;
    for (int attempt = 0; attempt < 16; ++attempt) {
        Selection s;
        for (int i = 0; i < n; ++i) {
            s.x.push_back(make_rational(num(rng), den(rng)));
            s.p.push_back(make_rational(num(rng), den(rng)));
        }
        try {
            jacobian_rank({}, n, s.x, s.p, &sys);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DegeneratePoint) continue;
            throw;
        }
        for (const auto& c : candidates) {
            if (s.rank == target) break;
            s.generators.push_back(c);
            const std::size_t r = jacobian_rank(s.generators, n, s.x, s.p, &sys);
            if (r > s.rank)
                s.rank = r;
            else
                s.generators.pop_back();
        }
        if (s.rank > best.rank || best.x.empty()) best = s;
        if (best.rank == target) break;
    }
    return best;
}

Element weyl_quantize(const SymbolPoly& s, const Algebra& alg) {
    const int n = alg.n();
    const Symbols sy(n);
    Element out;
    for (const auto& t : s.terms()) {
        std::vector<int> factors;
        for (int v = 0; v < sy.count(); ++v)
            for (int e = 0; e < t.mono[v]; ++e) factors.push_back(v);
        auto letter = [&](int v) -> Element {
            if (v == sy.p2()) return alg.H();
            for (int i = 0; i < n; ++i) {
                if (v == sy.a(i)) return alg.A(i);
                for (int j = i + 1; j < n; ++j)
                    if (v == sy.m(i, j)) return alg.L(i, j);
            }
            throw Error(ErrorKind::IndexOutOfRange, "not a symbol of this N");
        };
        // distinct orderings of a multiset, each standing for the same number of permutations
        Element sum;
        long count = 0;
        std::sort(factors.begin(), factors.end());
        do {
            Element w = alg.one();
            for (int v : factors) w = alg.mul(w, letter(v));
            sum += w;
            ++count;
        } while (std::next_permutation(factors.begin(), factors.end()));
        out += (Poly(t.coeff) * Rational(1, count)) * sum;
    }
    return out;
}

Operator local_hamiltonian(std::shared_ptr<const CoxeterSystem> sys, const Poly& gamma) { return Catalog(std::move(sys), gamma).Hloc(); }

std::vector<RExt> invariant_test_functions(const CoxeterSystem& sys, int D) {
    const int n = sys.dim();
    std::vector<RExt> out;
    Independence ind;
    const std::size_t order = sys.group.order();
    for (int d = 0; d <= D; ++d) {
        std::vector<Monomial> ms;
        Monomial m;
        std::function<void(int, int)> rec = [&](int v, int left) {
            if (v == n - 1) {
                m.set(v, left);
                ms.push_back(m);
                m.set(v, 0);
                return;
            }
            for (int e = left; e >= 0; --e) {
                m.set(v, e);
                rec(v + 1, left - e);
            }
            m.set(v, 0);
        };
        rec(0, d);
        for (const auto& mono : ms) {
            Poly acc;
            const Poly f(mono, Rational(1));
            for (std::size_t w = 0; w < order; ++w) acc += act_x(f, sys.group, static_cast<int>(w));
            if (acc.is_zero() || !ind.add(acc)) continue;
            acc = acc * (Rational(1) / acc.leading().coeff);
            out.push_back(RExt(acc));
            out.push_back(RExt(RatFunc(), RatFunc(acc), n));
        }
    }
    return out;
}

namespace {

Operator letter_operator(Letter l, const Catalog& cat) {
    switch (l.kind()) {
    case Letter::L: return cat.L(l.a(), l.b());
    case Letter::A: return cat.A(l.a());
    case Letter::H: return cat.H();
    case Letter::W: return cat.w(l.a());
    }
    return cat.one();
}

// rho(sum c w) f, one letter at a time from the right; shared suffixes are
// applied once.
RExt apply_words(const std::vector<std::pair<Word, Poly>>& words, const RExt& f, const Catalog& cat) {
    std::map<Word, RExt> memo;
    std::map<std::uint32_t, Operator> ops;
    std::function<RExt(const Word&, std::size_t)> suffix = [&](const Word& w, std::size_t from) -> RExt {
        if (from == w.size()) return f;
        Word key(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        auto op = ops.find(w[from].code);
        if (op == ops.end()) op = ops.emplace(w[from].code, letter_operator(w[from], cat)).first;
        RExt v = apply(op->second, suffix(w, from + 1));
        memo.emplace(std::move(key), v);
        return v;
    };
    RExt out = RExt(Poly(0));
    for (const auto& [w, c] : words) out += RExt(c) * suffix(w, 0);
    return out;
}

struct Specialized {
    std::vector<Poly> values;  // one per orbit
    std::string rendered;
    std::shared_ptr<const CoxeterSystem> sys;
};

// Symbolic orbit couplings replaced by seeded random non-integer rationals.
Specialized specialize_couplings(const CoxeterSystem& sys, std::uint64_t seed) {
    Specialized out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 29), den(1, 13);
    for (const auto& g : sys.roots.multiplicity) {
        if (g.is_constant()) {
            out.values.push_back(g);
            continue;
        }
        // integer couplings are special points of the family; avoid them
        Rational v;
        do v = make_rational(num(rng), den(rng));
        while (v.get_den() == 1);
        out.values.push_back(Poly(v));
        if (!out.rendered.empty()) out.rendered += ", ";
        out.rendered += g.to_string() + "=" + to_string(v);
    }
    out.sys = with_multiplicity(sys, out.values);
    return out;
}

std::vector<std::pair<Word, Poly>> specialized_words(const Element& e, const CoxeterSystem& sys, const std::vector<Poly>& values) {
    std::vector<std::pair<Word, Poly>> words;
    for (const auto& [w, c] : e.terms()) {
        Poly k = c;
        for (std::size_t o = 0; o < values.size(); ++o)
            if (!sys.roots.multiplicity[o].is_constant()) k = k.specialize(vars::g(static_cast<int>(o)), values[o].constant_value());
        words.emplace_back(w, k);
    }
    return words;
}

}  // namespace

IntegralCheck check_integral(const SymbolPoly& q, std::shared_ptr<const CoxeterSystem> sys, const Poly& gamma, int D,
                             std::uint64_t seed) {
    const Symbols sy(sys->dim());
    if (reynolds(q, *sys) != q) throw Error(ErrorKind::NotInvariant, render(q, sy) + " is not W-invariant");
    IntegralCheck out;
    out.generator = render(q, sy);
    const Algebra alg(sys, gamma);
    const CherednikRep rep(sys, gamma);
    const Element jq = weyl_quantize(q, alg);
    out.commutes_with_H = rep.image(alg.commutator(alg.H(), jq)).is_zero();

    const Specialized sp = specialize_couplings(*sys, seed);
    out.couplings = sp.rendered;
    const Catalog cat(sp.sys, gamma);
    const auto words = specialized_words(jq, *sys, sp.values);
    const Operator hloc = cat.Hloc();
    const auto tests = invariant_test_functions(*sys, D);
    out.test_functions = tests.size();
    out.preserves_invariants = true;
    out.commutes_with_Hloc = true;
    for (const auto& f : tests) {
        const RExt jf = apply_words(words, f, cat);
        for (std::size_t a = 0; a < sys->roots.roots.size() && out.preserves_invariants; ++a)
            if (apply(cat.w(sys->group.reflection(a)), jf) != jf) out.preserves_invariants = false;
        if (apply(hloc, jf) != apply_words(words, apply(hloc, f), cat)) out.commutes_with_Hloc = false;
        if (!out.preserves_invariants && !out.commutes_with_Hloc) break;
    }
    return out;
}

bool IntegralCertificate::pass() const {
    if (rank != target) return false;
    for (const auto& c : checks)
        if (!c.pass()) return false;
    return true;
}

IntegralCertificate certify(std::shared_ptr<const CoxeterSystem> sys, const Poly& gamma, int max_degree, int D, std::uint64_t seed, int jobs) {
    IntegralCertificate cert;
    cert.system = sys->roots.label;
    cert.n = sys->dim();
    cert.target = 2 * cert.n - 1;
    cert.max_degree = max_degree;
    cert.D = D;
    cert.seed = seed;
    const Symbols sy(cert.n);
    const Selection sel = select_generators(invariant_generators(*sys, max_degree), *sys, seed);
    cert.generators = sel.generators;
    cert.rank = sel.rank;
    for (const auto& g : cert.generators) cert.rendered.push_back(render(g, sy));

    cert.checks.resize(cert.generators.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t k; (k = next++) < cert.generators.size();) {
            try {
                cert.checks[k] = check_integral(cert.generators[k], sys, gamma, D, seed + k);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(jobs, 1); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    // Pairwise commutators are recorded on the invariant test functions, where
    // the integrals act as local operators.
    const Algebra alg(sys, gamma);
    const Specialized sp = specialize_couplings(*sys, seed);
    const Catalog cat(sp.sys, gamma);
    std::vector<std::vector<std::pair<Word, Poly>>> words;
    for (const auto& g : cert.generators) words.push_back(specialized_words(weyl_quantize(g, alg), *sys, sp.values));
    const auto tests = invariant_test_functions(*sys, D);
    std::vector<std::vector<RExt>> images(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (const auto& f : tests) images[i].push_back(apply_words(words[i], f, cat));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            bool commute = true;
            for (std::size_t t = 0; t < tests.size() && commute; ++t)
                commute = apply_words(words[i], images[j][t], cat) == apply_words(words[j], images[i][t], cat);
            cert.pairwise.push_back({{static_cast<int>(i), static_cast<int>(j)}, commute});
        }
    return cert;
}

}  // namespace dunkl::superint
