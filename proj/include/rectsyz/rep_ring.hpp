#ifndef RECTSYZ_REP_RING_HPP
#define RECTSYZ_REP_RING_HPP

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "rectsyz/partitions.hpp"

namespace rectsyz {

/// Label of an irreducible GL_m x GL_n representation S_row(C^m) (x) S_col(C^n).
struct SchurLabel {
    Partition row;
    Partition col;

    SchurLabel transposed() const { return {col, row}; }
    bool operator==(const SchurLabel&) const = default;
    auto operator<=>(const SchurLabel&) const = default;
};

/// Numeric Betti table: (homological degree i, internal degree j) -> dimension.
class BettiTable {
public:
    long long entry(int i, int j) const noexcept;
    void add(int i, int j, long long value);
    void set(int i, int j, long long value);

    const std::map<std::pair<int, int>, long long>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    int max_i() const noexcept;
    int max_j() const noexcept;

    bool operator==(const BettiTable&) const = default;

private:
    std::map<std::pair<int, int>, long long> entries_;  // no stored zeros
};

/// Element of Rep_GL[z,w]: formal sum of labelled terms with nonnegative
/// multiplicities; z tracks internal degree, w homological degree.
class EquivariantPolynomial {
public:
    struct Term {
        SchurLabel label;
        int zdeg = 0;
        int wdeg = 0;
        long long mult = 0;
    };

    void add_term(const SchurLabel& label, int zdeg, int wdeg, long long mult);
    long long multiplicity(const SchurLabel& label, int zdeg, int wdeg) const noexcept;

    EquivariantPolynomial& operator+=(const EquivariantPolynomial& other);

    /// Multiply by a polynomial in w alone: shifts homological degrees,
    /// distributing multiplicities.
    EquivariantPolynomial multiplied_by_w_poly(const IntPolynomial& p) const;

    /// Swap the two tensor factors of every label.
    EquivariantPolynomial transposed() const;

    /// Terms in a fixed deterministic order: (wdeg, zdeg, label) ascending.
    std::vector<Term> terms() const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool operator==(const EquivariantPolynomial&) const = default;

private:
    using Key = std::tuple<int, int, SchurLabel>;  // (wdeg, zdeg, label)
    std::map<Key, long long> terms_;
};

/// Dimension of the irreducible S_lambda of GL_rank, by the hook-content
/// formula with exact big-integer intermediates; 0 when l(lambda) > rank.
long long schur_dim(const Partition& lambda, int rank);

/// Number of semistandard tableaux of the given shape and content, by direct
/// enumeration. Entries of content must be nonnegative and sum to |shape|.
long long kostka(const Partition& shape, const std::vector<int>& content);

/// Cauchy decomposition of the degree-d part of Sym(C^m (x) C^n): the labels
/// (lambda, lambda) over partitions of d with at most min(m,n) parts.
std::vector<SchurLabel> cauchy_degree(int m, int n, long long d);

/// Replace every representation class by its dimension at ranks (m, n).
BettiTable evaluate_dimensions(const EquivariantPolynomial& p, int m, int n);

}  // namespace rectsyz

#endif
