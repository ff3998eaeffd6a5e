#pragma once

#include <cstddef>
#include <vector>

#include "dunkl/poly.hpp"

namespace dunkl {

using Vec = std::vector<Rational>;

/// Exact rank over Q.  Rows are cleared of denominators and reduced by
/// fraction-free (Bareiss) elimination over Z.
std::size_t rank(const std::vector<Vec>& rows);

/// Echelon basis grown one vector at a time; all vectors share a length.
class RowBasis {
public:
    explicit RowBasis(std::size_t width) : width_(width) {}

    /// Adds v if it is independent of the rows so far.  Returns whether it was.
    bool add(const Vec& v);
    /// True iff v lies in the span.
    bool contains(const Vec& v) const;
    std::size_t size() const noexcept { return rows_.size(); }
    std::size_t width() const noexcept { return width_; }

private:
    Vec reduce(Vec v) const;

    std::size_t width_;
    std::vector<Vec> rows_;          // reduced rows, pivot entry 1
    std::vector<std::size_t> pivots_;
};

/// Rank over any exact field type with the usual arithmetic, by plain
/// Gaussian elimination.  `is_zero` decides a zero entry.
template <class F, class IsZero>
std::size_t field_rank(std::vector<std::vector<F>> m, IsZero is_zero) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && is_zero(m[p][c])) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const F inv = F(1) / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            const F f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace dunkl
