#include "dunkl/linalg.hpp"

#include <algorithm>

namespace dunkl {

std::size_t rank(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
        Integer l = 1;
        for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Integer> ints(cols);
        bool nonzero = false;
        for (std::size_t c = 0; c < cols; ++c) {
            ints[c] = row[c].get_num() * (l / row[c].get_den());
            nonzero = nonzero || ints[c] != 0;
        }
        if (nonzero) m.push_back(std::move(ints));
    }
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                m[i][k] = m[r][c] * m[i][k] - m[i][c] * m[r][k];
                mpz_divexact(m[i][k].get_mpz_t(), m[i][k].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

Vec RowBasis::reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational f = v[pivots_[k]];
        if (f == 0) continue;
        for (std::size_t c = pivots_[k]; c < width_; ++c)
            if (rows_[k][c] != 0) v[c] -= f * rows_[k][c];
    }
    return v;
}

bool RowBasis::contains(const Vec& v) const {
    if (v.size() != width_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from basis width");
    const Vec w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](const Rational& q) { return q == 0; });
}

bool RowBasis::add(const Vec& v) {
    if (v.size() != width_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from basis width");
    Vec w = reduce(v);
    std::size_t p = 0;
    while (p < width_ && w[p] == 0) ++p;
    if (p == width_) return false;
    const Rational inv = 1 / w[p];
    for (std::size_t c = p; c < width_; ++c) w[c] *= inv;
    // keep earlier rows reduced against the new pivot
    for (auto& row : rows_) {
        const Rational f = row[p];
        if (f == 0) continue;
        for (std::size_t c = p; c < width_; ++c) row[c] -= f * w[c];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

}  // namespace dunkl
