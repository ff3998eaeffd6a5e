#include "dunkl/identities.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

class Checker {
public:
    Checker(const Catalog& cat, Report& rep) : c(cat), rep_(rep), n(cat.dim()) {}

    /// Records r; false once a nonzero residual has been seen.
    bool zero(const Operator& r, const std::string& where) {
        ++rep_.checks;
        if (r.is_zero()) return true;
        rep_.residual = where + ": " + std::to_string(r.size()) + " term(s), leading " + r.leading_term_string();
        return false;
    }
    bool equal(const Operator& a, const Operator& b, const std::string& where) { return zero(a - b, where); }

    static std::string at(std::initializer_list<std::pair<const char*, int>> idx) {
        std::string s;
        for (const auto& [name, v] : idx) {
            if (!s.empty()) s += ",";
            s += std::string(name) + "=" + std::to_string(v + 1);
        }
        return s;
    }

    Operator xs(int i) const { return c.x(i); }
    Operator D(int i) const { return c.dunkl(i); }
    Operator Sij(int i, int j) const { return c.S(i, j); }

    const Catalog& c;
    Report& rep_;
    const int n;
};

using CheckFn = void (*)(Checker&);

void dunkl_commute(Checker& k) {
    for (int i = 0; i < k.n; ++i)
        for (int j = i + 1; j < k.n; ++j)
            if (!k.zero(commutator(k.D(i), k.D(j)), Checker::at({{"i", i}, {"j", j}}))) return;
}

void com_nn(Checker& k) {
    for (int i = 0; i < k.n; ++i)
        for (int j = 0; j < k.n; ++j)
            if (!k.equal(commutator(k.D(i), k.xs(j)), k.Sij(i, j), Checker::at({{"i", i}, {"j", j}}))) return;
}

void comSx(Checker& k) {
    for (int i = 0; i < k.n; ++i)
        for (int j = 0; j < k.n; ++j)
            for (int l = 0; l < k.n; ++l)
                if (!k.equal(commutator(k.Sij(i, j), k.xs(l)), commutator(k.Sij(l, j), k.xs(i)),
                             Checker::at({{"i", i}, {"j", j}, {"k", l}})))
                    return;
}

void s_center(Checker& k) {
    const auto& sys = *k.c.system();
    const Operator S = k.c.Ssum();
    for (std::size_t a = 0; a < sys.roots.roots.size(); ++a)
        if (!k.zero(commutator(S, k.c.w(sys.group.reflection(a))), "root " + std::to_string(a + 1))) return;
    Operator trace(k.c.system());
    for (int i = 0; i < k.n; ++i) trace += k.Sij(i, i);
    k.equal(trace, Rational(k.n) * k.c.one() - Rational(2) * S, "trace");
}

void x_pi(Checker& k) {
    Operator xd(k.c.system()), dx(k.c.system());
    for (int i = 0; i < k.n; ++i) {
        xd += compose(k.xs(i), k.D(i));
        dx += compose(k.D(i), k.xs(i));
    }
    const Operator S = k.c.Ssum();
    if (!k.equal(xd, k.c.rdr() + S, "(x,nabla)")) return;
    k.equal(dx, k.c.rdr() - S + Rational(k.n) * k.c.one(), "(nabla,x)");
}

// Sums over j of u_j S_ij for u = x or nabla, in both orders.
template <class Body>
void over_u(Checker& k, Body body) {
    for (int i = 0; i < k.n; ++i) {
        for (int which = 0; which < 2; ++which) {
            Operator left(k.c.system()), right(k.c.system());
            for (int j = 0; j < k.n; ++j) {
                const Operator u = which == 0 ? k.xs(j) : k.D(j);
                left += compose(u, k.Sij(i, j));
                right += compose(k.Sij(i, j), u);
            }
            const Operator ui = which == 0 ? k.xs(i) : k.D(i);
            const std::string where = std::string(which == 0 ? "x" : "nabla") + ", " + Checker::at({{"i", i}});
            if (!body(left, right, ui, commutator(k.c.Ssum(), ui), where)) return;
        }
    }
}

void lem1(Checker& k) {
    over_u(k, [&](const Operator& l, const Operator& r, const Operator& u, const Operator& su, const std::string& w) {
        return k.equal(l, u + su, w + " (u S)") && k.equal(r, u - su, w + " (S u)");
    });
}

void lem15(Checker& k) {
    over_u(k, [&](const Operator& l, const Operator& r, const Operator& u, const Operator& su, const std::string& w) {
        return k.equal(l + r, Rational(2) * u, w + " (anticommutator)") &&
               k.equal(l - r, Rational(2) * su, w + " (commutator)");
    });
}

void comLL(Checker& k) {
    const int n = k.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Operator lhs = commutator(k.c.L(i, j), k.c.L(a, b));
                    const Operator parts[4] = {compose(k.c.L(i, b), k.Sij(a, j)), compose(k.c.L(j, a), k.Sij(b, i)),
                                               -compose(k.c.L(i, a), k.Sij(b, j)), -compose(k.c.L(j, b), k.Sij(a, i))};
                    if (!k.equal(lhs, Operator::sum(parts), Checker::at({{"i", i}, {"j", j}, {"k", a}, {"l", b}})))
                        return;
                }
}

void comLu(Checker& k) {
    for (int i = 0; i < k.n; ++i)
        for (int j = 0; j < k.n; ++j)
            for (int l = 0; l < k.n; ++l) {
                const std::string w = Checker::at({{"i", i}, {"j", j}, {"k", l}});
                const Operator L = k.c.L(i, j);
                if (!k.equal(commutator(L, k.xs(l)), compose(k.xs(i), k.Sij(j, l)) - compose(k.xs(j), k.Sij(i, l)),
                             w + " (x)"))
                    return;
                if (!k.equal(commutator(L, k.D(l)), compose(k.D(i), k.Sij(j, l)) - compose(k.D(j), k.Sij(i, l)),
                             w + " (nabla)"))
                    return;
            }
}

void H_preserves_L(Checker& k) {
    for (int i = 0; i < k.n; ++i)
        for (int j = i + 1; j < k.n; ++j)
            if (!k.zero(commutator(k.c.H(), k.c.L(i, j)), Checker::at({{"i", i}, {"j", j}}))) return;
}

void casimir(Checker& k) {
    for (int i = 0; i < k.n; ++i)
        for (int j = i + 1; j < k.n; ++j)
            if (!k.zero(commutator(k.c.Casimir(), k.c.L(i, j)), Checker::at({{"i", i}, {"j", j}}))) return;
}

void radial_split(Checker& k) {
    const auto& c = k.c;
    // d_r = (1/r) sum x_k d_k = (r/q) (r d_r)
    const Operator dr = compose(c.rinv(), c.rdr());
    const Operator inv_q = compose(c.rinv(), c.rinv());
    const Operator parts[4] = {compose(dr, dr), Rational(k.n - 1) * compose(c.rinv(), dr),
                               RExt(c.gamma() * Rational(2)) * c.rinv(), compose(inv_q, c.Casimir())};
    k.equal(c.H(), Operator::sum(parts), "H");
}

void crossing_L(Checker& k) {
    const int n = k.n;
    const auto& c = k.c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Operator parts[3] = {compose(c.L(i, j), c.L(a, b) - k.Sij(a, b)),
                                               compose(c.L(j, a), c.L(i, b) - k.Sij(i, b)),
                                               compose(c.L(a, i), c.L(j, b) - k.Sij(j, b))};
                    if (!k.zero(Operator::sum(parts), Checker::at({{"i", i}, {"j", j}, {"k", a}, {"l", b}}))) return;
                }
}

// L_ij u_k + L_jk u_i + L_ki u_j and the reversed order, for u given by `u`.
template <class U>
bool cyclic_pair(Checker& k, U u, const std::string& name) {
    const auto& c = k.c;
    for (int i = 0; i < k.n; ++i)
        for (int j = 0; j < k.n; ++j)
            for (int l = 0; l < k.n; ++l) {
                const std::string w = name + ", " + Checker::at({{"i", i}, {"j", j}, {"k", l}});
                const Operator left[3] = {compose(c.L(i, j), u(l)), compose(c.L(j, l), u(i)), compose(c.L(l, i), u(j))};
                const Operator right[3] = {compose(u(l), c.L(i, j)), compose(u(i), c.L(j, l)), compose(u(j), c.L(l, i))};
                if (!k.zero(Operator::sum(left), w + " (L u)")) return false;
                if (!k.zero(Operator::sum(right), w + " (u L)")) return false;
            }
    return true;
}

void orthogrel(Checker& k) {
    if (!cyclic_pair(k, [&](int i) { return k.xs(i); }, "x")) return;
    cyclic_pair(k, [&](int i) { return k.D(i); }, "nabla");
}

void A_forms(Checker& k) {
    for (int i = 0; i < k.n; ++i) {
        const Operator a1 = k.c.A(i, 1);
        if (!k.equal(a1, k.c.A(i, 2), Checker::at({{"i", i}}) + " (first factored form)")) return;
        if (!k.equal(a1, k.c.A(i, 3), Checker::at({{"i", i}}) + " (second factored form)")) return;
    }
}

void A_conserved(Checker& k) {
    for (int i = 0; i < k.n; ++i)
        if (!k.zero(commutator(k.c.A(i), k.c.H()), Checker::at({{"i", i}}))) return;
}

void A_L(Checker& k) {
    const auto& c = k.c;
    for (int i = 0; i < k.n; ++i)
        for (int a = 0; a < k.n; ++a)
            for (int b = 0; b < k.n; ++b)
                if (!k.equal(commutator(c.A(i), c.L(a, b)),
                             compose(c.A(b), k.Sij(a, i)) - compose(c.A(a), k.Sij(b, i)),
                             Checker::at({{"i", i}, {"k", a}, {"l", b}})))
                    return;
}

void A_A(Checker& k) {
    const auto& c = k.c;
    for (int i = 0; i < k.n; ++i)
        for (int j = i + 1; j < k.n; ++j) {
            const std::string w = Checker::at({{"i", i}, {"j", j}});
            const Operator hl = compose(c.H(), c.L(i, j));
            if (!k.equal(commutator(c.A(i), c.A(j)), hl, w)) return;
            // mixed factored forms, A_i in the second and A_j in the first
            const Operator mixed = compose(c.A(i, 3), c.A(j, 2)) - compose(c.A(j, 3), c.A(i, 2));
            if (!k.equal(mixed, hl, w + " (mixed forms)")) return;
        }
}

void A_sq(Checker& k) {
    const auto& c = k.c;
    std::vector<Operator> sq;
    for (int i = 0; i < k.n; ++i) sq.push_back(compose(c.A(i), c.A(i)));
    const Rational shift = Rational((k.n - 1) * (k.n - 1)) / 4;
    const Operator inner = c.Casimir() + c.Ssum() - shift * c.one();
    const Operator rhs = compose(c.H(), inner) + RExt(c.gamma() * c.gamma()) * c.one();
    k.equal(Operator::sum(sq), rhs, "A^2");
}

void orthogA(Checker& k) { cyclic_pair(k, [&](int i) { return k.c.A(i); }, "A"); }

void hermiticity(Checker& k) {
    const auto& c = k.c;
    for (int i = 0; i < k.n; ++i) {
        const std::string w = Checker::at({{"i", i}});
        if (!k.equal(adjoint(k.D(i)), -k.D(i), w + " (nabla)")) return;
        if (!k.equal(adjoint(k.xs(i)), k.xs(i), w + " (x)")) return;
        for (int j = 0; j < k.n; ++j)
            if (!k.equal(adjoint(k.Sij(i, j)), k.Sij(i, j), Checker::at({{"i", i}, {"j", j}}) + " (S)")) return;
        if (!k.equal(adjoint(c.A(i)), c.A(i), w + " (A)")) return;
    }
}

void H_forms(Checker& k) { k.equal(k.c.H(), k.c.H_dunkl(), "H"); }

struct Entry {
    IdentityId id;
    CheckFn fn;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> list = [] {
        std::vector<Entry> v;
        auto add = [&](const char* name, const char* anchor, const char* statement, CheckFn fn) {
            v.push_back({{static_cast<int>(v.size()) + 1, name, anchor, statement}, fn});
        };
        add("dunkl_commute", "\"The Dunkl operators satisfy commutativity\"", "[nabla_i, nabla_j] = 0", dunkl_commute);
        add("com_nn", "\"In these notations, the commutation\"", "[nabla_i, x_j] = S_ij", com_nn);
        add("comSx", "\"commutators of the elements\"", "[S_ij, x_k] = [S_kj, x_i]", comSx);
        add("s_center", "\"satisfies the following relations\"", "[S, s_a] = 0, sum_i S_ii = N - 2S", s_center);
        add("x_pi", "\"$= r\\partial_r +S$\"", "(x, nabla) = r d_r + S, (nabla, x) = r d_r - S + N", x_pi);
        add("lem1", "\"The following relations take place\"",
            "sum_j u_j S_ij = u_i + [S, u_i], sum_j S_ij u_j = u_i - [S, u_i] for u = x, nabla", lem1);
        add("lem15", "\"(anti-)commutation relations take place\"",
            "sum_j {u_j, S_ij} = 2 u_i, sum_j [u_j, S_ij] = 2 [S, u_i] for u = x, nabla", lem15);
        add("comLL", "\"with the Kronecker delta replaced\"",
            "[L_ij, L_kl] = L_il S_kj + L_jk S_li - L_ik S_lj - L_jl S_ki", comLL);
        add("comLu", "\"Dunkl angular momenta $L_{ij}$ satisfy\"",
            "[L_ij, u_k] = u_i S_jk - u_j S_ik for u = x, nabla", comLu);
        add("H_preserves_L", "\"preserves Dunkl angular momenta\"", "[H, L_ij] = 0", H_preserves_L);
        add("casimir", "\"analogue of the angular momentum square\"", "[I, L_ij] = 0", casimir);
        add("radial_split", "\"angular part of the nonlocal Hamiltonian\"",
            "H = d_r^2 + (N-1)/r d_r + 2 gamma/r + I/r^2", radial_split);
        add("crossing_L", "\"satisfy additional crossing relations\"",
            "L_ij (L_kl - S_kl) + L_jk (L_il - S_il) + L_ki (L_jl - S_jl) = 0", crossing_L);
        add("orthogrel", "\"generalises well-known orthogonality relation between\"",
            "L_ij u_k + L_jk u_i + L_ki u_j = u_k L_ij + u_i L_jk + u_j L_ki = 0 for u = x, nabla", orthogrel);
        add("A_forms", "\"can be represented in the following ways\"",
            "anticommutator form of A_i = both factored forms", A_forms);
        add("A_conserved", "\"of the Dunkl LRL vector\"", "[A_i, H] = 0", A_conserved);
        add("A_L", "\"allows to derive commutation relations\"", "[A_i, L_kl] = A_l S_ki - A_k S_li", A_L);
        add("A_A", "\"expressed in a compact form\"", "[A_i, A_j] = H L_ij", A_A);
        add("A_sq", "\"squared length of the LRL vector\"", "sum A_i^2 = H (I + S - (N-1)^2/4) + gamma^2", A_sq);
        add("orthogA", "\"between angular momenta and components of LRL\"",
            "L_ij A_k + L_jk A_i + L_ki A_j = A_k L_ij + A_i L_jk + A_j L_ki = 0", orthogA);
        add("hermiticity", "\"under the formal Hermitian conjugation\"",
            "nabla^+ = -nabla, x^+ = x, S_ij^+ = S_ij, A_i^+ = A_i", hermiticity);
        add("H_forms", "\"which allows to represent the Hamiltonian\"",
            "potential form of H = sum nabla_i^2 + 2 gamma/r", H_forms);
        return v;
    }();
    return list;
}

const Entry& entry_of(const IdentityId& id) { return entries().at(static_cast<std::size_t>(id.number - 1)); }

}  // namespace

const std::vector<IdentityId>& identity_catalog() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& e : entries()) v.push_back(e.id);
        return v;
    }();
    return ids;
}

const IdentityId& find_identity(const std::string& key) {
    const auto& cat = identity_catalog();
    for (const auto& id : cat)
        if (id.name == key || std::to_string(id.number) == key) return id;
    throw Error(ErrorKind::BadSpec, "unknown identity '" + key + "'");
}

std::string g_mode_of(const CoxeterSystem& sys) {
    const auto& m = sys.roots.multiplicity;
    bool symbolic = true;
    for (int k = 0; k < static_cast<int>(m.size()); ++k)
        if (m[k] != Poly::var(vars::g(k))) symbolic = false;
    if (symbolic) return "symbolic";
    std::string s;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) s += ",";
        s += m[k].to_string();
    }
    return s;
}

std::string gamma_mode_of(const Poly& gamma) {
    return gamma == Poly::var(vars::kGamma) ? "symbolic" : gamma.to_string();
}

Report check_identity(const IdentityId& id, const Catalog& cat) {
    Report rep;
    rep.identity = id.name;
    rep.system = cat.system()->roots.label;
    rep.g_mode = g_mode_of(*cat.system());
    rep.gamma_mode = gamma_mode_of(cat.gamma());
    const auto t0 = std::chrono::steady_clock::now();
    Checker k(cat, rep);
    entry_of(id).fn(k);
    rep.pass = !rep.residual.has_value();
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SuiteReport check_all(const Catalog& cat, const std::vector<std::string>& selection, int jobs) {
    std::vector<const IdentityId*> todo;
    if (selection.empty())
        for (const auto& id : identity_catalog()) todo.push_back(&id);
    else
        for (const auto& key : selection) todo.push_back(&find_identity(key));

    SuiteReport suite;
    suite.reports.resize(todo.size());
    std::vector<std::exception_ptr> errors(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < todo.size();) {
            try {
                suite.reports[i] = check_identity(*todo[i], cat);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(todo.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    for (const auto& r : suite.reports) (r.pass ? suite.passed : suite.failed)++;
    return suite;
}

}  // namespace dunkl
