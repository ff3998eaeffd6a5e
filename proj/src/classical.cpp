#include "dunkl/classical.hpp"

#include <algorithm>
#include <functional>

#include <stdexcept>

namespace dunkl::classical {

namespace {

void check_points(int points) {
    if (points < 0 || points > kMaxPoints) throw Error(ErrorKind::IndexOutOfRange, "at most 7 points");
}

int pair_pos(int i, int j, int points) {
    // pairs (0,1),(0,2),...,(0,m-1),(1,2),...
    return i * points - i * (i + 1) / 2 + (j - i - 1);
}

Poly X(int i) { return Poly::var(xv(i)); }
Poly P(int i) { return Poly::var(pv(i)); }

template <class F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
    F s(0);
    for (std::size_t k = 0; k < a.size(); ++k) s = s + a[k] * b[k];
    return s;
}

}  // namespace

PhasePoly m_poly(int i, int j, int points) {
    check_points(points);
    if (i < 0 || j < 0 || i >= points || j >= points || i == j) throw Error(ErrorKind::IndexOutOfRange, "M indices");
    return X(i) * P(j) - X(j) * P(i);
}

PhasePoly acl_poly(int i, int n) {
    check_points(n);
    if (i < 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "A index");
    PhasePoly a;
    for (int j = 0; j < n; ++j)
        if (j != i) a += P(j) * (X(j) * P(i) - X(i) * P(j));
    return a;
}

PhasePoly msq_poly(int m) {
    check_points(m);
    PhasePoly xx, pp, xp;
    for (int k = 0; k < m; ++k) {
        xx += X(k) * X(k);
        pp += P(k) * P(k);
        xp += X(k) * P(k);
    }
    return xx * pp - xp * xp;
}

PhasePoly p_squared(int n) {
    check_points(n);
    PhasePoly pp;
    for (int k = 0; k < n; ++k) pp += P(k) * P(k);
    return pp;
}

// ---------------------------------------------------------------- monomials

MMonomial::MMonomial(int points) : points(points) {
    check_points(points);
    exp.assign(static_cast<std::size_t>(points * (points - 1) / 2 > 0 ? points * (points - 1) / 2 : 0), 0);
}

MMonomial MMonomial::of(int points, std::initializer_list<std::pair<int, int>> factors) {
    MMonomial m(points);
    for (auto [i, j] : factors) ++m.at(i, j);
    return m;
}

int& MMonomial::at(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= points || i == j) throw Error(ErrorKind::IndexOutOfRange, "M indices");
    return exp[pair_pos(i, j, points)];
}

int MMonomial::at(int i, int j) const { return const_cast<MMonomial&>(*this).at(i, j); }

int MMonomial::degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
}

int MMonomial::crossings() const {
    int c = 0;
    for (int a = 0; a < points; ++a)
        for (int b = a + 1; b < points; ++b)
            for (int cc = b + 1; cc < points; ++cc)
                for (int d = cc + 1; d < points; ++d) c += at(a, cc) * at(b, d);
    return c;
}

bool MMonomial::crossing() const { return crossings() > 0; }

PhasePoly MMonomial::expand() const {
    PhasePoly out(1);
    for (int i = 0; i < points; ++i)
        for (int j = i + 1; j < points; ++j)
            if (const int e = at(i, j)) out = out * m_poly(i, j, points).pow(e);
    return out;
}

std::string MMonomial::to_string() const {
    std::string s;
    for (int i = 0; i < points; ++i)
        for (int j = i + 1; j < points; ++j) {
            const int e = at(i, j);
            if (!e) continue;
            if (!s.empty()) s += "*";
            s += "M(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (e > 1) s += "^" + std::to_string(e);
        }
    return s.empty() ? "1" : s;
}

MCombination rewrite_noncrossing(const MMonomial& m) {
    MCombination done;
    std::map<MMonomial, Rational> work;
    work[m] = 1;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const MMonomial& mono = node.key();
        const Rational c = node.mapped();
        const int cross = mono.crossings();
        if (cross == 0) {
            Rational& slot = done[mono];
            slot += c;
            if (slot == 0) done.erase(mono);
            continue;
        }
        // first crossing a < b < cc < d with arcs (a,cc), (b,d)
        const int n = mono.points;
        bool rewritten = false;
        for (int a = 0; a < n && !rewritten; ++a)
            for (int b = a + 1; b < n && !rewritten; ++b)
                for (int cc = b + 1; cc < n && !rewritten; ++cc)
                    for (int d = cc + 1; d < n && !rewritten; ++d) {
                        if (!mono.at(a, cc) || !mono.at(b, d)) continue;
                        MMonomial base = mono;
                        --base.at(a, cc);
                        --base.at(b, d);
                        MMonomial nested = base, disjoint = base;
                        ++disjoint.at(a, b);
                        ++disjoint.at(cc, d);
                        ++nested.at(a, d);
                        ++nested.at(b, cc);
                        for (const MMonomial* out : {&disjoint, &nested}) {
                            if (out->crossings() >= cross) throw std::logic_error("uncrossing did not reduce crossings");
                            Rational& slot = work[*out];
                            slot += c;
                            if (slot == 0) work.erase(*out);
                        }
                        rewritten = true;
                    }
    }
    return done;
}

PhasePoly expand(const MCombination& c) {
    PhasePoly out;
    for (const auto& [m, k] : c) out += m.expand() * k;
    return out;
}

std::vector<MMonomial> quotient_basis(int points, int degree) {
    std::vector<MMonomial> out;
    MMonomial m(points);
    const int pairs = static_cast<int>(m.exp.size());
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == pairs) {
            if (!m.crossing()) out.push_back(m);
            return;
        }
        const int cap = k == pairs - 1 ? std::min(left, 1) : left;
        for (int e = 0; e <= cap; ++e) {
            m.exp[k] = e;
            rec(k + 1, left - e);
        }
        m.exp[k] = 0;
    };
    rec(0, degree);
    std::stable_sort(out.begin(), out.end(), [](const MMonomial& a, const MMonomial& b) { return a.degree() < b.degree(); });
    return out;
}

// ---------------------------------------------------------------- null pairs

NullNormalization normalize_null_pair(const Vec& x, const Vec& p) {
    if (x.size() != p.size()) throw Error(ErrorKind::DimensionMismatch, "x and p lengths differ");
    const Rational xx = dot(x, x), xp = dot(x, p), pp = dot(p, p);
    if (xx == 0) throw Error(ErrorKind::DegenerateInput, "x . x = 0");
    if (xx * pp - xp * xp != 0) throw Error(ErrorKind::NotNull, "M^2 does not vanish");
    NullNormalization out{Rational(1), -xp / xx, x, p};
    for (std::size_t k = 0; k < p.size(); ++k) out.phat[k] = p[k] + out.mu * x[k];
    return out;
}

Gauss operator/(const Gauss& a, const Gauss& b) {
    const Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw Error(ErrorKind::ZeroDenominator, "division by zero in Q(i)");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

GaussNull normalize_null_pair(const GaussVec& x, const GaussVec& p) {
    if (x.size() != p.size()) throw Error(ErrorKind::DimensionMismatch, "x and p lengths differ");
    const Gauss xx = dot(x, x), xp = dot(x, p), pp = dot(p, p);
    if (xx.is_zero()) throw Error(ErrorKind::DegenerateInput, "x . x = 0");
    if (!(xx * pp - xp * xp).is_zero()) throw Error(ErrorKind::NotNull, "M^2 does not vanish");
    GaussNull out{Gauss(1), Gauss(0) - xp / xx, x, p};
    for (std::size_t k = 0; k < p.size(); ++k) out.phat[k] = p[k] + out.mu * x[k];
    return out;
}

std::pair<GaussVec, GaussVec> sample_null_pair(int points, std::mt19937_64& rng) {
    // on two points x.p = 0 = p.p forces x.x = 0
    if (points < 3 || points > kMaxPoints) throw Error(ErrorKind::BadDimension, "null pairs need 3..7 points");
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    auto rat = [&] { return make_rational(num(rng), den(rng)); };
    auto gauss = [&] {
        Gauss z;
        do z = Gauss(rat(), rat());
        while (z.is_zero());
        return z;
    };
    for (;;) {
        // isotropic p = lambda (u, i) with u a rational point of the unit sphere
        std::vector<Rational> t(points - 2);
        Rational tt(0);
        for (auto& v : t) {
            v = rat();
            tt += v * v;
        }
        GaussVec p(points);
        for (int k = 0; k + 2 < points; ++k) p[k] = Gauss(2 * t[k] / (1 + tt));
        p[points - 2] = Gauss((1 - tt) / (1 + tt));
        p[points - 1] = Gauss(0, 1);
        std::shuffle(p.begin(), p.end(), rng);
        const Gauss lambda = gauss();
        for (auto& v : p) v = lambda * v;
        int pivot = 0;
        while (p[pivot].is_zero()) ++pivot;
        GaussVec x(points);
        Gauss s;
        for (int k = 0; k < points; ++k)
            if (k != pivot) {
                x[k] = gauss();
                s = s + x[k] * p[k];
            }
        x[pivot] = Gauss(0) - s / p[pivot];
        if (dot(x, x).is_zero()) continue;
        // move off the normalized slice: x -> x / l, p -> l (p - m x)
        const Gauss l = gauss(), m = gauss();
        GaussVec xo(points), po(points);
        for (int k = 0; k < points; ++k) {
            xo[k] = x[k] / l;
            po[k] = l * (p[k] - m * x[k]);
        }
        return {xo, po};
    }
}

Gauss evaluate(const MMonomial& m, const GaussVec& x, const GaussVec& p) {
    Gauss v(1);
    for (int i = 0; i < m.points; ++i)
        for (int j = i + 1; j < m.points; ++j) {
            const Gauss mij = x[i] * p[j] - x[j] * p[i];
            for (int e = m.at(i, j); e > 0; --e) v = v * mij;
        }
    return v;
}

std::size_t null_variety_rank(const std::vector<MMonomial>& ms, std::size_t samples, std::uint64_t seed) {
    if (ms.empty()) return 0;
    const int points = ms.front().points;
    std::mt19937_64 rng(seed);
    std::vector<Vec> rows;
    const std::size_t count = std::max(samples, ms.size());
    for (std::size_t s = 0; s < count; ++s) {
        auto [x, p] = sample_null_pair(points, rng);
        const GaussNull nn = normalize_null_pair(x, p);
        if (!dot(nn.xhat, nn.phat).is_zero() || !dot(nn.phat, nn.phat).is_zero())
            throw std::logic_error("normalized null pair is off the slice");
        Vec re, im;
        for (const auto& m : ms) {
            const Gauss v = evaluate(m, nn.xhat, nn.phat);
            if (!(v == evaluate(m, x, p))) throw std::logic_error("normalization changed an M value");
            re.push_back(v.re);
            im.push_back(v.im);
        }
        rows.push_back(std::move(re));
        rows.push_back(std::move(im));
    }
    return rank(rows);
}

// ---------------------------------------------------------------- symbols

PhasePoly highest_symbol(const NormalMonomial& m, int n) {
    if (m.w != GroupTable::identity()) throw Error(ErrorKind::GroupPartNotIdentity, "highest symbol needs w = 1");
    PhasePoly out(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (const int e = m.l_exp[pair_index(i, j, n)]) out = out * m_poly(i, j, n).pow(e);
    for (int i = 0; i < n; ++i)
        if (m.k[i]) out = out * acl_poly(i, n).pow(m.k[i]);
    if (m.h) out = out * p_squared(n).pow(m.h);
    return out;
}

}  // namespace dunkl::classical
