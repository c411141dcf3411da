#include "rectsyz/betti_formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace rectsyz {

namespace {

void check_rect(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("rectangle sides must be positive");
}

}  // namespace

EquivariantPolynomial h_rect(int r, int s, int m, int n) {
    check_rect(r, s);
    if (m < 1 || n < 1) throw std::invalid_argument("ranks must be positive");
    EquivariantPolynomial out;
    if (n - r < 0 || m - r < 0) return out;  // S_lambda vanishes once l(lambda) > rank

    const int edge = std::min(r, s);
    const auto alphas = enumerate_in_rectangle(edge, n - r);
    const auto betas = enumerate_in_rectangle(m - r, edge);
    for (const Partition& alpha : alphas) {
        for (const Partition& beta : betas) {
            const int i = static_cast<int>(alpha.size() + beta.size());
            SchurLabel label{lambda_rect(r, s, alpha, beta),
                             lambda_rect(r, s, beta.conjugate(), alpha.conjugate())};
            out.add_term(label, r * s + i, i, 1);
        }
    }
    return out;
}

std::vector<SchurLabel> x_terms(int r, int s, int m, int n, int i) {
    check_rect(r, s);
    if (i < 0) throw std::invalid_argument("negative homological degree");
    std::vector<SchurLabel> out;
    if (n - r < 0 || m - r < 0) return out;

    const int edge = std::min(r, s);
    for (const Partition& alpha : enumerate_in_rectangle(edge, n - r)) {
        if (alpha.size() > i) continue;
        for (const Partition& beta : partitions_of_size(i - alpha.size(), m - r, edge)) {
            out.push_back({lambda_rect(r, s, alpha, beta),
                           lambda_rect(r, s, beta.conjugate(), alpha.conjugate())});
        }
    }
    return out;
}

std::vector<HomologySummand> x_homology(int r, int s, int m, int n, int k) {
    check_rect(r, s);
    if (k < 0) throw std::invalid_argument("negative homological degree");
    std::vector<HomologySummand> out;
    if (k % 2 == 1) return out;
    const int j = k / 2;
    for (int q = 0; q <= j; ++q) {
        if (r + q > std::min(m, n)) break;  // the ideal of a too-large rectangle is zero
        long long mult = count_in_rectangle(q, std::min(r, s) - 1, j - q);
        if (mult > 0) out.push_back({r + q, s + q, mult});
    }
    return out;
}

IntPolynomial multiplicity_poly(int a, int b, int q) {
    check_rect(a, b);
    if (q < 0) throw std::invalid_argument("negative strand index");
    return gauss_polynomial(q, std::min(a, b) - 1).in_square().shifted(q * q + 2 * q);
}

EquivariantPolynomial betti_polynomial(int a, int b, int m, int n) {
    check_rect(a, b);
    if (m < 1 || n < 1) throw std::invalid_argument("ranks must be positive");
    if (m < n) return betti_polynomial(a, b, n, m).transposed();
    if (a > n) throw std::invalid_argument("betti_polynomial requires a <= min(m,n)");

    EquivariantPolynomial out;
    for (int q = 0; q <= n - a; ++q) {
        EquivariantPolynomial strand =
            h_rect(a + q, b + q, m, n).multiplied_by_w_poly(multiplicity_poly(a, b, q));
        const std::size_t before = out.term_count() + strand.term_count();
        out += strand;
        if (out.term_count() != before)
            throw std::logic_error("strands for distinct q shifts may not share labelled terms");
    }
    return out;
}

std::pair<int, int> proj_dim_and_reg(int a, int b, int m, int n) {
    const EquivariantPolynomial p = betti_polynomial(a, b, m, n);
    int pd = 0, reg = 0;
    for (const auto& term : p.terms()) {
        if (schur_dim(term.label.row, m) == 0 || schur_dim(term.label.col, n) == 0) continue;
        pd = std::max(pd, term.wdeg);
        reg = std::max(reg, term.zdeg - term.wdeg);
    }
    return {pd, reg};
}

}  // namespace rectsyz
