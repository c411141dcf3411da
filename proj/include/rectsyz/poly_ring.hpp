#ifndef RECTSYZ_POLY_RING_HPP
#define RECTSYZ_POLY_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace rectsyz {

using BigRat = boost::multiprecision::cpp_rational;

/// Exponent vector over the variables z_{ij} of an m x n matrix, row-major:
/// variable k corresponds to entry (k / n, k % n).
using Exponents = std::vector<int>;

/// Torus weight of a monomial (or weight vector): row sums and column sums of
/// its exponent matrix.
struct WeightVector {
    std::vector<int> row;
    std::vector<int> col;

    bool operator==(const WeightVector&) const = default;
    auto operator<=>(const WeightVector&) const = default;

    long long degree() const noexcept;
    std::string to_string() const;
};

WeightVector monomial_weight(const Exponents& e, int m, int n);

/// All monomials of a fixed degree on the m x n matrix variables, in
/// graded row-major lexicographic order (largest exponent vector first).
/// Index lookups and a weight -> indices partition are precomputed.
class MonomialBasis {
public:
    MonomialBasis(int m, int n, int degree);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int degree() const noexcept { return degree_; }
    int size() const noexcept { return static_cast<int>(exponents_.size()); }

    const Exponents& exponents(int index) const { return exponents_[static_cast<std::size_t>(index)]; }
    int index_of(const Exponents& e) const;  // throws if absent
    const WeightVector& weight_of(int index) const {
        return weights_[static_cast<std::size_t>(index)];
    }

    /// Indices of the monomials carrying the given weight (empty if none).
    const std::vector<int>& indices_with_weight(const WeightVector& w) const;

    /// Index of e * z_k in the basis one degree up.
    static Exponents multiplied_by_var(Exponents e, int var);

private:
    int m_, n_, degree_;
    std::vector<Exponents> exponents_;             // sorted lex-descending
    std::vector<WeightVector> weights_;            // parallel to exponents_
    std::map<WeightVector, std::vector<int>> by_weight_;
};

/// Polynomial with exact rational coefficients over the matrix variables.
/// Keys are exponent vectors; no zero coefficients are stored.
class PolyQ {
public:
    PolyQ() = default;

    void add_term(const Exponents& e, const BigRat& c);
    const std::map<Exponents, BigRat>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    PolyQ operator*(const PolyQ& other) const;
    PolyQ operator+(const PolyQ& other) const;

    /// Total degree; requires a homogeneous nonzero polynomial.
    int degree() const;

private:
    std::map<Exponents, BigRat> terms_;
};

/// (det of the leading a x a submatrix of (z_{ij}))^b, expanded exactly.
/// Homogeneous of degree a*b; requires a <= min(m,n).
PolyQ highest_weight_generator(int a, int b, int m, int n);

}  // namespace rectsyz

#endif
