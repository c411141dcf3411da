#include <doctest.h>

#include <algorithm>

#include "rectsyz/betti_formula.hpp"

using namespace rectsyz;

namespace {

const SchurLabel kSym2{Partition{2}, Partition{2}};
const SchurLabel kS3_S21{Partition{3}, Partition{2, 1}};
const SchurLabel kS21_S3{Partition{2, 1}, Partition{3}};
const SchurLabel kS31{Partition{3, 1}, Partition{3, 1}};
const SchurLabel kS33{Partition{3, 3}, Partition{3, 3}};

}  // namespace

TEST_CASE("h_rect golden cases at m = n = 2") {
    const EquivariantPolynomial h12 = h_rect(1, 2, 2, 2);
    CHECK(h12.term_count() == 4);
    CHECK(h12.multiplicity(kSym2, 2, 0) == 1);
    CHECK(h12.multiplicity(kS3_S21, 3, 1) == 1);
    CHECK(h12.multiplicity(kS21_S3, 3, 1) == 1);
    CHECK(h12.multiplicity(kS31, 4, 2) == 1);

    const EquivariantPolynomial h23 = h_rect(2, 3, 2, 2);
    CHECK(h23.term_count() == 1);
    CHECK(h23.multiplicity(kS33, 6, 0) == 1);

    CHECK(h_rect(3, 1, 2, 2).is_zero());  // r exceeds both ranks
}

TEST_CASE("x_terms") {
    const auto slice = x_terms(1, 2, 2, 2, 2);
    REQUIRE(slice.size() == 1);
    CHECK(slice[0] == kS31);

    CHECK(x_terms(1, 1, 2, 2, 3).empty());  // beyond min(r,s)(m+n-2r) = 2

    // slices of h_rect reassemble x_terms exactly, as multisets of labels
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (int m = 1; m <= 4; ++m)
                for (int n = 1; n <= m; ++n) {
                    const EquivariantPolynomial h = h_rect(r, s, m, n);
                    for (int i = 0; i <= 8; ++i) {
                        std::vector<SchurLabel> expect;
                        for (const auto& term : h.terms())
                            if (term.wdeg == i) {
                                CHECK(term.zdeg == r * s + i);
                                CHECK(term.mult == 1);
                                expect.push_back(term.label);
                            }
                        std::vector<SchurLabel> got = x_terms(r, s, m, n, i);
                        std::sort(expect.begin(), expect.end());
                        std::sort(got.begin(), got.end());
                        CHECK(got == expect);
                    }
                }
}

TEST_CASE("x_homology") {
    CHECK(x_homology(2, 3, 3, 3, 0) == std::vector<HomologySummand>{{2, 3, 1}});
    CHECK(x_homology(2, 3, 3, 3, 1).empty());
    CHECK(x_homology(1, 1, 2, 2, 2) == std::vector<HomologySummand>{{2, 2, 1}});
    CHECK(x_homology(1, 1, 3, 3, 2) == std::vector<HomologySummand>{{2, 2, 1}});
    // clipped: 1+q <= min(m,n) cuts the q = 2 summand at m = n = 2
    CHECK(x_homology(1, 2, 2, 2, 4).empty());
    CHECK(x_homology(1, 2, 3, 3, 4) == std::vector<HomologySummand>{{3, 4, 1}});
}

TEST_CASE("multiplicity_poly") {
    CHECK(multiplicity_poly(1, 2, 0) == IntPolynomial::constant(1));

    IntPolynomial w3;
    w3.add_term(3, 1);
    CHECK(multiplicity_poly(1, 2, 1) == w3);

    IntPolynomial w3w5;
    w3w5.add_term(3, 1);
    w3w5.add_term(5, 1);
    CHECK(multiplicity_poly(2, 2, 1) == w3w5);

    // b = 1 collapses the Gauss factor for every q
    for (int a = 1; a <= 4; ++a)
        for (int q = 0; q <= 4; ++q) {
            IntPolynomial shift;
            shift.add_term(q * q + 2 * q, 1);
            CHECK(multiplicity_poly(a, 1, q) == shift);
        }
}

TEST_CASE("betti_polynomial golden case a=1 b=2 m=n=2") {
    const EquivariantPolynomial p = betti_polynomial(1, 2, 2, 2);
    CHECK(p.term_count() == 5);
    CHECK(p.multiplicity(kSym2, 2, 0) == 1);
    CHECK(p.multiplicity(kS3_S21, 3, 1) == 1);
    CHECK(p.multiplicity(kS21_S3, 3, 1) == 1);
    CHECK(p.multiplicity(kS31, 4, 2) == 1);
    CHECK(p.multiplicity(kS33, 6, 3) == 1);  // h_{2x3} shifted by w^3

    const BettiTable t = evaluate_dimensions(p, 2, 2);
    CHECK(t.entries() == std::map<std::pair<int, int>, long long>{
                             {{0, 2}, 9}, {{1, 3}, 16}, {{2, 4}, 9}, {{3, 6}, 1}});
}

TEST_CASE("betti_polynomial single strand when a = n") {
    for (int b = 1; b <= 3; ++b) {
        CHECK(betti_polynomial(2, b, 2, 2) == h_rect(2, b, 2, 2));
        CHECK(betti_polynomial(3, b, 3, 3) == h_rect(3, b, 3, 3));
        CHECK(betti_polynomial(2, b, 3, 2) == h_rect(2, b, 3, 2));
    }
}

TEST_CASE("betti_polynomial maximal ideal a = b = 1, m = n = 2") {
    const BettiTable t = evaluate_dimensions(betti_polynomial(1, 1, 2, 2), 2, 2);
    CHECK(t.entries() == std::map<std::pair<int, int>, long long>{
                             {{0, 1}, 4}, {{1, 2}, 6}, {{2, 3}, 4}, {{3, 4}, 1}});
}

TEST_CASE("betti_polynomial normalizes m < n by transposing") {
    const EquivariantPolynomial p = betti_polynomial(1, 2, 2, 3);
    CHECK(p == betti_polynomial(1, 2, 3, 2).transposed());
    CHECK_THROWS_AS(betti_polynomial(3, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(betti_polynomial(3, 1, 3, 2), std::invalid_argument);
}

TEST_CASE("betti_polynomial term degrees and generators") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; n <= m; ++n) {
                    if (a > n) continue;
                    const EquivariantPolynomial p = betti_polynomial(a, b, m, n);
                    std::vector<int> col_a(static_cast<std::size_t>(a), b);
                    for (const auto& term : p.terms()) {
                        CHECK(term.zdeg >= term.wdeg);
                        CHECK(term.zdeg - term.wdeg >= a * b);
                        if (term.wdeg == 0) {
                            // minimal generators sit at z = ab with the rectangle label
                            CHECK(term.zdeg == a * b);
                            CHECK(term.label == SchurLabel{Partition(col_a), Partition(col_a)});
                        }
                    }
                }
}

TEST_CASE("proj_dim_and_reg") {
    CHECK(proj_dim_and_reg(1, 2, 2, 2) == std::pair<int, int>{3, 3});
    CHECK(proj_dim_and_reg(1, 1, 2, 2) == std::pair<int, int>{3, 1});
    CHECK(proj_dim_and_reg(2, 1, 2, 2) == std::pair<int, int>{0, 2});
    CHECK(proj_dim_and_reg(3, 2, 3, 3) == std::pair<int, int>{0, 6});
    CHECK(proj_dim_and_reg(2, 1, 3, 3) == std::pair<int, int>{3, 3});
}

TEST_CASE("strands have disjoint label sets across q") {
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int n = a; n <= 3; ++n)
                for (int m = n; m <= 3; ++m) {
                    std::vector<SchurLabel> seen;
                    for (int q = 0; q <= n - a; ++q)
                        for (const auto& term : h_rect(a + q, b + q, m, n).terms())
                            seen.push_back(term.label);
                    std::sort(seen.begin(), seen.end());
                    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
                }
}
