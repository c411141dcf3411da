#include <doctest.h>

#include <stdexcept>

#include "rectsyz/rep_ring.hpp"

using namespace rectsyz;

namespace {

// All contents of the given length summing to total.
void gen_contents(int length, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == length - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.push_back(v);
        gen_contents(length, total - v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> contents(int length, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_contents(length, total, cur, out);
    return out;
}

}  // namespace

TEST_CASE("schur_dim on rank 2") {
    for (int r = 0; r <= 6; ++r) {
        CHECK(schur_dim(Partition(std::vector<int>{r}), 2) == r + 1);  // Sym^r
        if (r >= 1) CHECK(schur_dim(Partition{r, r}, 2) == 1);
        if (r >= 1) CHECK(schur_dim(Partition{r, 1}, 2) == r);
    }
    CHECK(schur_dim(Partition{1, 1, 1}, 2) == 0);
    CHECK(schur_dim(Partition{}, 3) == 1);
}

TEST_CASE("schur_dim determinant powers are one-dimensional") {
    for (int n = 1; n <= 4; ++n)
        for (int b = 1; b <= 4; ++b) {
            std::vector<int> parts(static_cast<std::size_t>(n), b);
            CHECK(schur_dim(Partition(parts), n) == 1);
        }
}

TEST_CASE("kostka examples") {
    CHECK(kostka(Partition{2}, {1, 1}) == 1);
    CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka(Partition{4, 2, 1}, {4, 2, 1}) == 1);  // highest weight content
    CHECK(kostka(Partition{}, {}) == 1);
    CHECK_THROWS_AS(kostka(Partition{2}, {1}), std::invalid_argument);
}

TEST_CASE("schur_dim equals the kostka sum over contents") {
    for (int n = 1; n <= 4; ++n)
        for (int size = 0; size <= 6; ++size)
            for (const Partition& lambda : partitions_of_size(size, size, size)) {
                long long total = 0;
                for (const auto& content : contents(n, size)) total += kostka(lambda, content);
                CHECK(total == schur_dim(lambda, n));
            }
}

TEST_CASE("cauchy_degree") {
    const auto labels = cauchy_degree(2, 2, 2);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0] == SchurLabel{Partition{2}, Partition{2}});
    CHECK(labels[1] == SchurLabel{Partition{1, 1}, Partition{1, 1}});
    CHECK(cauchy_degree(3, 2, 0) == std::vector<SchurLabel>{SchurLabel{{}, {}}});

    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (long long d = 0; d <= 6; ++d) {
                long long total = 0;
                for (const SchurLabel& label : cauchy_degree(m, n, d))
                    total += schur_dim(label.row, m) * schur_dim(label.col, n);
                CHECK(total == binomial(static_cast<long long>(m) * n + d - 1, d));
            }
}

TEST_CASE("equivariant polynomial bookkeeping") {
    EquivariantPolynomial p;
    const SchurLabel lab{Partition{2}, Partition{2}};
    p.add_term(lab, 2, 0, 1);
    p.add_term(lab, 2, 0, 2);
    CHECK(p.multiplicity(lab, 2, 0) == 3);
    CHECK(p.term_count() == 1);

    IntPolynomial shift;
    shift.add_term(3, 1);
    shift.add_term(5, 1);
    const EquivariantPolynomial q = p.multiplied_by_w_poly(shift);
    CHECK(q.multiplicity(lab, 2, 3) == 3);
    CHECK(q.multiplicity(lab, 2, 5) == 3);
    CHECK(q.term_count() == 2);

    const SchurLabel asym{Partition{3}, Partition{2, 1}};
    EquivariantPolynomial r;
    r.add_term(asym, 3, 1, 1);
    CHECK(r.transposed().multiplicity({Partition{2, 1}, Partition{3}}, 3, 1) == 1);

    CHECK_THROWS_AS(p.add_term(lab, 2, 0, -1), std::invalid_argument);
}

TEST_CASE("evaluate_dimensions") {
    EquivariantPolynomial p;
    p.add_term({Partition{2}, Partition{2}}, 2, 0, 1);
    p.add_term({Partition{3}, Partition{2, 1}}, 3, 1, 1);
    p.add_term({Partition{2, 1}, Partition{3}}, 3, 1, 1);
    p.add_term({Partition{1, 1, 1}, Partition{3}}, 3, 1, 5);  // vanishes at rank 2

    const BettiTable t = evaluate_dimensions(p, 2, 2);
    CHECK(t.entry(0, 2) == 9);
    CHECK(t.entry(1, 3) == 16);
    CHECK(t.entry(2, 2) == 0);

    CHECK(evaluate_dimensions(EquivariantPolynomial{}, 2, 2).empty());

    // additivity
    EquivariantPolynomial q;
    q.add_term({Partition{2}, Partition{2}}, 2, 0, 4);
    EquivariantPolynomial sum = p;
    sum += q;
    const BettiTable ts = evaluate_dimensions(sum, 2, 2);
    CHECK(ts.entry(0, 2) == evaluate_dimensions(p, 2, 2).entry(0, 2) +
                                evaluate_dimensions(q, 2, 2).entry(0, 2));
}

TEST_CASE("betti table bookkeeping") {
    BettiTable t;
    t.add(1, 3, 16);
    t.add(1, 3, -16);
    CHECK(t.empty());
    t.set(0, 2, 9);
    t.set(3, 6, 1);
    CHECK(t.max_i() == 3);
    CHECK(t.max_j() == 6);
    t.set(3, 6, 0);
    CHECK(t.entries().size() == 1);
}
