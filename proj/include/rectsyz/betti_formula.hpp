#ifndef RECTSYZ_BETTI_FORMULA_HPP
#define RECTSYZ_BETTI_FORMULA_HPP

#include <utility>
#include <vector>

#include "rectsyz/rep_ring.hpp"

namespace rectsyz {

/// One even-homology summand of a strand complex: the ideal of the
/// rect_r x rect_s rectangle, with a multiplicity.
struct HomologySummand {
    int rect_r = 0;
    int rect_s = 0;
    long long multiplicity = 0;

    bool operator==(const HomologySummand&) const = default;
};

/// Strand polynomial h_{r x s} over ranks (m, n) with m >= n: the sum over
/// alpha inside the min(r,s) x (n-r) box and beta inside the (m-r) x min(r,s)
/// box of the label (lambda(r,s;alpha,beta), lambda(r,s;beta',alpha')) at
/// z^{rs+|alpha|+|beta|} w^{|alpha|+|beta|}. Empty ranges give zero.
EquivariantPolynomial h_rect(int r, int s, int m, int n);

/// Labels of the i-th term of the strand complex for the r x s rectangle over
/// ranks (m, n); the wdeg = i slice of h_rect.
std::vector<SchurLabel> x_terms(int r, int s, int m, int n, int i);

/// Homology of the strand complex in homological degree k: empty for odd k,
/// and for k = 2j the ideals of the (r+q) x (s+q) rectangles with
/// multiplicity P(q, min(r,s)-1, j-q), clipped to r+q <= min(m,n).
std::vector<HomologySummand> x_homology(int r, int s, int m, int n, int k);

/// Homological-shift polynomial of the q-th strand in the resolution of the
/// a x b thickening: w^{q^2+2q} times the Gauss polynomial of the
/// q x (min(a,b)-1) box evaluated at w^2.
IntPolynomial multiplicity_poly(int a, int b, int q);

/// Equivariant Betti polynomial of the a x b determinantal thickening in the
/// polynomial ring on m x n matrices. Inputs with m < n are normalized by
/// swapping ranks and transposing every label. Requires 1 <= a <= min(m,n).
EquivariantPolynomial betti_polynomial(int a, int b, int m, int n);

/// (projective dimension, regularity) read off the nonzero-dimension terms of
/// betti_polynomial at ranks (m, n).
std::pair<int, int> proj_dim_and_reg(int a, int b, int m, int n);

}  // namespace rectsyz

#endif
