#ifndef RECTSYZ_GRADED_IDEAL_HPP
#define RECTSYZ_GRADED_IDEAL_HPP

#include <map>
#include <vector>

#include "rectsyz/exact_linalg.hpp"
#include "rectsyz/poly_ring.hpp"

namespace rectsyz {

/// Exact basis of a subspace of a fixed graded piece of the polynomial ring:
/// canonical primitive-integer RREF rows over the degree-d monomial basis.
/// Every row is homogeneous for the torus action, so rows carry weights and
/// are indexed by them.
class GradedSubspace {
public:
    struct Row {
        std::vector<std::pair<int, BigInt>> entries;  // (monomial index, coeff), sorted
        WeightVector weight;

        int pivot() const noexcept { return entries.empty() ? -1 : entries.front().first; }
        const BigInt& pivot_coeff() const { return entries.front().second; }
    };

    explicit GradedSubspace(int degree) : degree_(degree) {}

    int degree() const noexcept { return degree_; }
    int dim() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    const std::vector<int>& row_indices_with_weight(const WeightVector& w) const;

    /// True iff the dense vector (over the same monomial basis) lies in the span.
    bool contains_vector(std::vector<BigInt> v) const;

    /// Builds the subspace spanned by the given dense vectors. Reduction is
    /// performed independently inside each torus-weight block; every spanning
    /// vector must be weight-homogeneous.
    static GradedSubspace from_spanning_dense(const MonomialBasis& basis,
                                              const std::vector<std::vector<BigInt>>& vectors);

private:
    int degree_;
    std::vector<Row> rows_;  // sorted by pivot column
    std::map<WeightVector, std::vector<int>> by_weight_;

    friend class ThickeningIdeal;
    static GradedSubspace from_weight_blocks(
        const MonomialBasis& basis,
        std::map<WeightVector, std::vector<std::vector<std::pair<int, BigInt>>>>& sparse_by_weight);
};

/// Smallest subspace of the graded piece containing f that is closed under all
/// infinitesimal row and column operations z_{pj} d/dz_{qj} and z_{ip} d/dz_{iq}
/// (p != q). For a highest-weight f this spans the irreducible representation
/// generated by f.
GradedSubspace lowering_closure(const PolyQ& f, int m, int n);

/// The ideal generated by the span of the b-th power of the leading a x a
/// minor under the GL x GL action, with cached graded pieces, monomial bases
/// and Hilbert function values. If a > min(m,n) the ideal is zero.
class ThickeningIdeal {
public:
    ThickeningIdeal(int a, int b, int m, int n);

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int num_vars() const noexcept { return m_ * n_; }
    int generator_degree() const noexcept { return a_ * b_; }
    bool is_zero_ideal() const noexcept { return zero_; }

    /// Build every basis, graded piece and shift table needed for internal
    /// degrees up to dmax. Not thread-safe; call before any concurrent reads.
    void ensure_built(int dmax);

    const MonomialBasis& monomials(int d);
    const GradedSubspace& graded_piece(int d);
    long long hilbert_function(int d);

    /// Degree-ab span of the generating representation (lowering closure).
    const GradedSubspace& generator_space();

    /// Flat table: index of monomial * z_var in the basis one degree up,
    /// at [mono_index * num_vars + var].
    const std::vector<int>& var_shift(int d);

private:
    int a_, b_, m_, n_;
    bool zero_ = false;
    std::map<int, MonomialBasis> bases_;
    std::map<int, GradedSubspace> pieces_;
    std::map<int, std::vector<int>> shifts_;
};

}  // namespace rectsyz

#endif
