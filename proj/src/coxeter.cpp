#include "dunkl/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

namespace dunkl {

namespace {

Vec unit(int dim, int i, long s = 1) {
    Vec v(dim, Rational(0));
    v[i] = s;
    return v;
}

Vec combo(int dim, int i, long si, int j, long sj) {
    Vec v(dim, Rational(0));
    v[i] += si;
    v[j] += sj;
    return v;
}

Rational dot(const Vec& a, const Vec& b) {
    Rational s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

Vec reflect(const Vec& v, const Vec& a) {
    const Rational f = 2 * dot(v, a) / dot(a, a);
    Vec out = v;
    for (std::size_t k = 0; k < v.size(); ++k) out[k] -= f * a[k];
    return out;
}

Vec negate(Vec v) {
    for (auto& c : v) c = -c;
    return v;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

/// Index of +-root among positives: k for alpha_k, k + n for -alpha_k, -1 otherwise.
int lookup(const std::vector<Vec>& roots, const Vec& v) {
    const int n = static_cast<int>(roots.size());
    for (int k = 0; k < n; ++k) {
        if (roots[k] == v) return k;
        bool neg = true;
        for (std::size_t c = 0; c < v.size() && neg; ++c) neg = roots[k][c] == -v[c];
        if (neg) return k + n;
    }
    return -1;
}

void finish(RootSystem& rs) {
    const int n = static_cast<int>(rs.roots.size());
    for (int a = 0; a < n; ++a) {
        bool nonzero = std::any_of(rs.roots[a].begin(), rs.roots[a].end(), [](const Rational& q) { return q != 0; });
        if (!nonzero) throw Error(ErrorKind::BadSpec, "zero root");
        for (int b = 0; b < a; ++b) {
            // collinear iff the Gram determinant vanishes
            const Rational d = dot(rs.roots[a], rs.roots[a]) * dot(rs.roots[b], rs.roots[b]) - dot(rs.roots[a], rs.roots[b]) * dot(rs.roots[a], rs.roots[b]);
            if (d == 0) throw Error(ErrorKind::BadSpec, "collinear positive roots");
        }
    }
    UnionFind uf(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int k = lookup(rs.roots, reflect(rs.roots[a], rs.roots[b]));
            if (k < 0) throw Error(ErrorKind::BadSpec, "root set not closed under its reflections");
            uf.join(a, k % n);
        }
    std::vector<int> label(n, -1);
    rs.orbit.assign(n, 0);
    rs.num_orbits = 0;
    for (int a = 0; a < n; ++a) {
        const int r = uf.find(a);
        if (label[r] < 0) label[r] = rs.num_orbits++;
        rs.orbit[a] = label[r];
    }
    if (rs.num_orbits > vars::kMaxOrbits) throw Error(ErrorKind::BadSpec, "too many root orbits");
    rs.multiplicity.clear();
    for (int k = 0; k < rs.num_orbits; ++k) rs.multiplicity.push_back(Poly::var(vars::g(k)));
}

int minimal_ambient(char kind, int rank) {
    return kind == 'A' ? rank + 1 : kind == 'G' ? 3 : rank;
}

}  // namespace

RootSystem build_root_system(const std::string& kind_in, int rank, int ambient) {
    if (kind_in.empty()) throw Error(ErrorKind::BadSpec, "empty root system kind");
    const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(kind_in[0])));
    if (kind == 'H') throw Error(ErrorKind::UnsupportedField, "H" + std::to_string(rank) + " needs irrational coordinates");
    if (kind == 'I') {
        if (rank == 2) return with_ambient(product(build_root_system("A", 1), build_root_system("A", 1)), ambient);
        if (rank == 3) return build_root_system("A", 2, ambient);
        if (rank == 4) return build_root_system("B", 2, ambient);
        if (rank == 6) return build_root_system("G", 2, ambient);
        throw Error(ErrorKind::UnsupportedField, "I2(" + std::to_string(rank) + ") needs irrational coordinates");
    }
    RootSystem rs;
    rs.rank = rank;
    const int dim = minimal_ambient(kind, rank);
    auto bad_rank = [&] { throw Error(ErrorKind::BadSpec, "unsupported rank for kind " + std::string(1, kind)); };
    switch (kind) {
    case 'A':
        if (rank < 1) bad_rank();
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) rs.roots.push_back(combo(dim, i, 1, j, -1));
        break;
    case 'B':
        if (rank < 1) bad_rank();
        for (int i = 0; i < dim; ++i) rs.roots.push_back(unit(dim, i));
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                rs.roots.push_back(combo(dim, i, 1, j, -1));
                rs.roots.push_back(combo(dim, i, 1, j, 1));
            }
        break;
    case 'D':
        if (rank < 2) bad_rank();
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                rs.roots.push_back(combo(dim, i, 1, j, -1));
                rs.roots.push_back(combo(dim, i, 1, j, 1));
            }
        break;
    case 'G':
        if (rank != 2) bad_rank();
        rs.roots = {combo(3, 0, 1, 1, -1), combo(3, 0, 1, 2, -1), combo(3, 1, 1, 2, -1),
                    Vec{2, -1, -1}, Vec{1, -2, 1}, Vec{1, 1, -2}};
        break;
    case 'F': {
        if (rank != 4) bad_rank();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                rs.roots.push_back(combo(4, i, 1, j, -1));
                rs.roots.push_back(combo(4, i, 1, j, 1));
            }
        for (int i = 0; i < 4; ++i) rs.roots.push_back(unit(4, i));
        const Rational h = make_rational(1, 2);
        for (int s = 0; s < 8; ++s)
            rs.roots.push_back(Vec{h, (s & 4) ? -h : h, (s & 2) ? -h : h, (s & 1) ? -h : h});
        break;
    }
    default:
        throw Error(ErrorKind::BadSpec, "unsupported root system kind " + kind_in);
    }
    rs.ambient = dim;
    rs.label = std::string(1, kind) + std::to_string(rank);
    finish(rs);
    return ambient == 0 ? rs : with_ambient(rs, ambient);
}

RootSystem product(const RootSystem& a, const RootSystem& b) {
    RootSystem rs;
    rs.rank = a.rank + b.rank;
    rs.ambient = a.ambient + b.ambient;
    if (rs.ambient > vars::kMaxAmbient) throw Error(ErrorKind::BadDimension, "ambient dimension above 8");
    rs.label = a.label + "x" + b.label;
    for (const auto& r : a.roots) {
        Vec v = r;
        v.resize(rs.ambient, Rational(0));
        rs.roots.push_back(v);
    }
    for (const auto& r : b.roots) {
        Vec v(a.ambient, Rational(0));
        v.insert(v.end(), r.begin(), r.end());
        rs.roots.push_back(v);
    }
    finish(rs);
    return rs;
}

RootSystem with_ambient(const RootSystem& rs, int ambient) {
    if (ambient == 0 || ambient == rs.ambient) return rs;
    if (ambient < rs.ambient) throw Error(ErrorKind::BadDimension, "ambient dimension below the realization dimension");
    if (ambient > vars::kMaxAmbient) throw Error(ErrorKind::BadDimension, "ambient dimension above 8");
    RootSystem out = rs;
    out.ambient = ambient;
    for (auto& r : out.roots) r.resize(ambient, Rational(0));
    const auto at = out.label.find('@');
    out.label = out.label.substr(0, at) + "@" + std::to_string(ambient);
    return out;
}

RootSystem parse_root_system(const std::string& spec) {
    std::string body = spec;
    int ambient = 0;
    if (const auto at = spec.find('@'); at != std::string::npos) {
        body = spec.substr(0, at);
        const std::string tail = spec.substr(at + 1);
        if (tail.empty() || !std::all_of(tail.begin(), tail.end(), ::isdigit) || tail.size() > 3)
            throw Error(ErrorKind::BadSpec, "bad ambient suffix in '" + spec + "'");
        ambient = std::stoi(tail);
    }
    std::vector<RootSystem> factors;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const std::size_t next = std::min(body.find('x', pos), body.size());
        const std::string f = body.substr(pos, next - pos);
        if (f.size() < 2 || !std::isalpha(static_cast<unsigned char>(f[0])))
            throw Error(ErrorKind::BadSpec, "bad root system factor '" + f + "'");
        const auto us = f.find('_');
        const std::string digits = f.substr(1, us == std::string::npos ? std::string::npos : us - 1);
        if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
            throw Error(ErrorKind::BadSpec, "bad rank in '" + f + "'");
        int rank = std::stoi(digits);
        std::string kind(1, f[0]);
        if (us != std::string::npos) {
            const std::string m = f.substr(us + 1);
            if (kind != "I" || rank != 2 || m.empty() || m.size() > 3 || !std::all_of(m.begin(), m.end(), ::isdigit))
                throw Error(ErrorKind::BadSpec, "bad dihedral spec '" + f + "'");
            rank = std::stoi(m);
        } else if (kind == "I") {
            throw Error(ErrorKind::BadSpec, "dihedral spec needs the form I2_m");
        }
        factors.push_back(build_root_system(kind, rank));
        if (next == body.size()) break;
        pos = next + 1;
    }
    RootSystem rs = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) rs = product(rs, factors[k]);
    if (rs.ambient > vars::kMaxAmbient) throw Error(ErrorKind::BadDimension, "ambient dimension above 8");
    return with_ambient(rs, ambient);
}

GroupTable GroupTable::generate(const RootSystem& rs, std::size_t cap) {
    GroupTable g;
    const int n = static_cast<int>(rs.roots.size());
    const int dim = rs.ambient;
    g.dim_ = dim;
    g.roots_ = n;
    std::vector<Vec> all = rs.roots;
    for (const auto& r : rs.roots) all.push_back(negate(r));

    // a spanning subset of roots; images of these determine an element
    std::vector<int> basis;
    {
        RowBasis rb(dim);
        for (int k = 0; k < n; ++k)
            if (rb.add(rs.roots[k])) basis.push_back(k);
    }
    auto key_of = [&](const std::vector<int>& perm) {
        std::uint64_t key = 0;
        for (int b : basis) key = key * 256 + static_cast<std::uint64_t>(perm[b]);
        return key;
    };

    std::vector<std::vector<int>> gens;
    std::vector<Vec> gen_mats;
    for (int b = 0; b < n; ++b) {
        std::vector<int> perm(2 * n);
        for (int t = 0; t < 2 * n; ++t) {
            perm[t] = lookup(rs.roots, reflect(all[t], rs.roots[b]));
            if (perm[t] < 0) throw Error(ErrorKind::BadSpec, "root set not closed under its reflections");
        }
        gens.push_back(perm);
        Vec m(dim * dim);
        const Rational nn = dot(rs.roots[b], rs.roots[b]);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m[i * dim + j] = Rational(i == j ? 1 : 0) - 2 * rs.roots[b][i] * rs.roots[b][j] / nn;
        gen_mats.push_back(m);
    }

    std::unordered_map<std::uint64_t, int> index;
    std::vector<int> id(2 * n);
    std::iota(id.begin(), id.end(), 0);
    Vec idm(dim * dim, Rational(0));
    for (int i = 0; i < dim; ++i) idm[i * dim + i] = 1;
    g.perms_.push_back(id);
    g.matrices_.push_back(idm);
    index[key_of(id)] = 0;
    for (std::size_t e = 0; e < g.perms_.size(); ++e) {
        for (int s = 0; s < n; ++s) {
            std::vector<int> p(2 * n);
            for (int t = 0; t < 2 * n; ++t) p[t] = gens[s][g.perms_[e][t]];
            const auto key = key_of(p);
            if (index.count(key)) continue;
            if (g.perms_.size() >= cap) throw Error(ErrorKind::CapExceeded, "group order exceeds cap " + std::to_string(cap));
            Vec m(dim * dim, Rational(0));
            const Vec& a = gen_mats[s];
            const Vec& b = g.matrices_[e];
            for (int i = 0; i < dim; ++i)
                for (int k = 0; k < dim; ++k) {
                    if (a[i * dim + k] == 0) continue;
                    for (int j = 0; j < dim; ++j) m[i * dim + j] += a[i * dim + k] * b[k * dim + j];
                }
            index[key] = static_cast<int>(g.perms_.size());
            g.perms_.push_back(std::move(p));
            g.matrices_.push_back(std::move(m));
        }
    }
    const std::size_t order = g.perms_.size();
    g.table_.assign(order * order, 0);
    g.inverse_.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            std::uint64_t key = 0;
            for (int t : basis) key = key * 256 + static_cast<std::uint64_t>(g.perms_[a][g.perms_[b][t]]);
            const int c = index.at(key);
            g.table_[a * order + b] = c;
            if (c == 0) g.inverse_[a] = static_cast<int>(b);
        }
    for (int b = 0; b < n; ++b) g.reflections_.push_back(index.at(key_of(gens[b])));
    return g;
}

std::optional<int> GroupTable::root_of(int w) const {
    for (std::size_t k = 0; k < reflections_.size(); ++k)
        if (reflections_[k] == w) return static_cast<int>(k);
    return std::nullopt;
}

std::pair<int, int> GroupTable::root_image(int w, int root) const {
    const int t = perms_[w][root];
    const int n = static_cast<int>(roots_);
    return t < n ? std::pair{t, 1} : std::pair{t - n, -1};
}

std::optional<int> GroupTable::minus_identity() const {
    Vec m(dim_ * dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) m[i * dim_ + i] = -1;
    const int w = find(m);
    if (w < 0) return std::nullopt;
    return w;
}

int GroupTable::find(const Vec& matrix) const {
    for (std::size_t w = 0; w < matrices_.size(); ++w)
        if (matrices_[w] == matrix) return static_cast<int>(w);
    return -1;
}

Vec GroupTable::apply(int w, const Vec& v) const {
    Vec out(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out[i] += matrices_[w][i * dim_ + j] * v[j];
    return out;
}

std::shared_ptr<const CoxeterSystem> make_system(const RootSystem& rs, std::size_t cap) {
    auto sys = std::make_shared<CoxeterSystem>();
    sys->roots = rs;
    sys->group = GroupTable::generate(rs, cap);
    return sys;
}

std::shared_ptr<const CoxeterSystem> make_system(const std::string& spec, std::size_t cap) {
    return make_system(parse_root_system(spec), cap);
}

std::shared_ptr<const CoxeterSystem> with_multiplicity(const CoxeterSystem& sys, std::vector<Poly> values) {
    if (static_cast<int>(values.size()) != sys.roots.num_orbits)
        throw Error(ErrorKind::DimensionMismatch, "need one coupling per root orbit");
    for (const auto& v : values)
        if (!v.free_of_range(0, vars::kMaxAmbient)) throw Error(ErrorKind::BadSpec, "coupling may not depend on x");
    auto out = std::make_shared<CoxeterSystem>(sys);
    out->roots.multiplicity = std::move(values);
    return out;
}

GroupAlgebra ga_add(const GroupAlgebra& a, const GroupAlgebra& b) {
    GroupAlgebra out = a;
    for (const auto& [w, c] : b) {
        Poly& slot = out[w];
        slot += c;
        if (slot.is_zero()) out.erase(w);
    }
    return out;
}

GroupAlgebra ga_scale(const GroupAlgebra& a, const Poly& c) {
    GroupAlgebra out;
    if (c.is_zero()) return out;
    for (const auto& [w, v] : a) out[w] = v * c;
    return out;
}

GroupAlgebra ga_mul(const GroupTable& g, const GroupAlgebra& a, const GroupAlgebra& b) {
    GroupAlgebra out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) out[g.mul(u, v)].add_product(cu, cv);
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

GroupAlgebra ga_unit(int w) { return GroupAlgebra{{w, Poly(1)}}; }

GroupAlgebra exchange_element(const CoxeterSystem& sys, int i, int j) {
    const int dim = sys.dim();
    if (i < 0 || j < 0 || i >= dim || j >= dim) throw Error(ErrorKind::IndexOutOfRange, "exchange element index");
    GroupAlgebra out;
    if (i == j) out[GroupTable::identity()] = Poly(1);
    for (std::size_t k = 0; k < sys.roots.roots.size(); ++k) {
        const Vec& a = sys.roots.roots[k];
        const Rational f = 2 * a[i] * a[j] / dot(a, a);
        if (f == 0) continue;
        out[sys.group.reflection(k)] += sys.roots.coupling(k) * f;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

GroupAlgebra s_element(const CoxeterSystem& sys) {
    GroupAlgebra out;
    for (std::size_t k = 0; k < sys.roots.roots.size(); ++k) out[sys.group.reflection(k)] -= sys.roots.coupling(k);
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace dunkl
