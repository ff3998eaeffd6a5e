#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/linalg.hpp"
#include "dunkl/poly.hpp"

namespace dunkl {

/// Positive roots of a rational realization, with orbit labels and one
/// coupling per orbit.
struct RootSystem {
    std::string label;    // canonical spec string, e.g. "B2", "A1xA1", "G2@4"
    int rank = 0;
    int ambient = 0;
    std::vector<Vec> roots;
    std::vector<int> orbit;        // orbit id of each positive root
    int num_orbits = 0;
    std::vector<Poly> multiplicity;  // per orbit; the symbol g_k by default

    const Poly& coupling(std::size_t root) const { return multiplicity[orbit[root]]; }
};

/// Standard model of one irreducible kind; ambient 0 means the minimal
/// realization dimension.  Errors: UnsupportedField, BadDimension, BadSpec.
RootSystem build_root_system(const std::string& kind, int rank, int ambient = 0);
/// Orthogonal direct sum (block-diagonal embedding).
RootSystem product(const RootSystem& a, const RootSystem& b);
/// Pads every root with zeros up to `ambient`.
RootSystem with_ambient(const RootSystem& rs, int ambient);
/// Spec strings: factors like A2, B3, D4, G2, F4, I2_6 joined by 'x', with an
/// optional "@M" ambient suffix.
RootSystem parse_root_system(const std::string& spec);

/// The finite group generated by the reflections, fully enumerated.  Elements
/// are stored both as matrices and as signed permutations of the roots.
class GroupTable {
public:
    static GroupTable generate(const RootSystem& rs, std::size_t cap = 1200);

    std::size_t order() const noexcept { return matrices_.size(); }
    int dim() const noexcept { return dim_; }
    static constexpr int identity() { return 0; }

    /// Row-major dim x dim matrix.
    const Vec& matrix(int w) const { return matrices_.at(w); }
    Rational entry(int w, int i, int j) const { return matrices_[w][i * dim_ + j]; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + b]; }
    int inverse(int a) const { return inverse_[a]; }
    /// Index of the reflection s_alpha for positive root `root`.
    int reflection(std::size_t root) const { return reflections_.at(root); }
    /// Positive root whose reflection is w, if any.
    std::optional<int> root_of(int w) const;
    /// w(alpha_root) = sign * alpha_k; returns (k, sign).
    std::pair<int, int> root_image(int w, int root) const;
    /// Index of -Id if it lies in W.
    std::optional<int> minus_identity() const;
    /// Element with the given matrix, or -1.
    int find(const Vec& matrix) const;
    Vec apply(int w, const Vec& v) const;

private:
    int dim_ = 0;
    std::size_t roots_ = 0;
    std::vector<Vec> matrices_;
    std::vector<std::vector<int>> perms_;  // over roots then negatives
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> reflections_;
};

/// Root system together with its group; shared read-only by everything else.
struct CoxeterSystem {
    RootSystem roots;
    GroupTable group;

    int dim() const noexcept { return roots.ambient; }
};

std::shared_ptr<const CoxeterSystem> make_system(const RootSystem& rs, std::size_t cap = 1200);
std::shared_ptr<const CoxeterSystem> make_system(const std::string& spec, std::size_t cap = 1200);
/// Same group with other couplings (one per orbit).
std::shared_ptr<const CoxeterSystem> with_multiplicity(const CoxeterSystem& sys, std::vector<Poly> values);

/// Finitely supported element of Q[params] W, keyed by group index.
using GroupAlgebra = std::map<int, Poly>;

GroupAlgebra ga_add(const GroupAlgebra& a, const GroupAlgebra& b);
GroupAlgebra ga_scale(const GroupAlgebra& a, const Poly& c);
GroupAlgebra ga_mul(const GroupTable& g, const GroupAlgebra& a, const GroupAlgebra& b);
GroupAlgebra ga_unit(int w = GroupTable::identity());

/// S_ij = delta_ij + sum 2 g_a a_i a_j / (a,a) s_a, with 0-based i, j.
GroupAlgebra exchange_element(const CoxeterSystem& sys, int i, int j);
/// S = -sum g_a s_a.
GroupAlgebra s_element(const CoxeterSystem& sys);

}  // namespace dunkl
