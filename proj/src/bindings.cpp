#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rectsyz/betti_formula.hpp"
#include "rectsyz/koszul.hpp"

namespace py = pybind11;
using namespace rectsyz;

namespace {

Partition as_partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict table_to_dict(const BettiTable& table) {
    py::dict out;
    for (const auto& [key, value] : table.entries())
        out[py::make_tuple(key.first, key.second)] = value;
    return out;
}

py::list poly_to_list(const EquivariantPolynomial& poly) {
    py::list out;
    for (const auto& term : poly.terms()) {
        py::dict item;
        item["row"] = term.label.row.parts();
        item["col"] = term.label.col.parts();
        item["z"] = term.zdeg;
        item["w"] = term.wdeg;
        item["mult"] = term.mult;
        out.append(item);
    }
    return out;
}

py::dict int_poly_to_dict(const IntPolynomial& p) {
    py::dict out;
    for (auto [e, c] : p.coeffs()) out[py::int_(e)] = c;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Betti tables of determinantal thickening ideals: closed-form "
              "equivariant formula and exact Koszul-homology oracle";

    m.def(
        "conjugate",
        [](const std::vector<int>& p) { return as_partition(p).conjugate().parts(); },
        py::arg("partition"), "Transpose of the Young diagram.");
    m.def(
        "contains",
        [](const std::vector<int>& lam, const std::vector<int>& mu) {
            return as_partition(lam).contains(as_partition(mu));
        },
        py::arg("lam"), py::arg("mu"));
    m.def(
        "enumerate_in_rectangle",
        [](int r, int s) {
            std::vector<std::vector<int>> out;
            for (const Partition& p : enumerate_in_rectangle(r, s)) out.push_back(p.parts());
            return out;
        },
        py::arg("r"), py::arg("s"));
    m.def("count_in_rectangle", &count_in_rectangle, py::arg("r"), py::arg("s"), py::arg("size"));
    m.def(
        "gauss_polynomial", [](int r, int s) { return int_poly_to_dict(gauss_polynomial(r, s)); },
        py::arg("r"), py::arg("s"), "Coefficients of the Gauss polynomial, keyed by exponent.");
    m.def(
        "lambda_rect",
        [](int r, int s, const std::vector<int>& alpha, const std::vector<int>& beta) {
            return lambda_rect(r, s, as_partition(alpha), as_partition(beta)).parts();
        },
        py::arg("r"), py::arg("s"), py::arg("alpha"), py::arg("beta"));

    m.def(
        "schur_dim", [](const std::vector<int>& p, int rank) { return schur_dim(as_partition(p), rank); },
        py::arg("partition"), py::arg("rank"));
    m.def(
        "kostka",
        [](const std::vector<int>& shape, const std::vector<int>& content) {
            return kostka(as_partition(shape), content);
        },
        py::arg("shape"), py::arg("content"));
    m.def(
        "cauchy_degree",
        [](int m, int n, long long d) {
            std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
            for (const SchurLabel& label : cauchy_degree(m, n, d))
                out.emplace_back(label.row.parts(), label.col.parts());
            return out;
        },
        py::arg("m"), py::arg("n"), py::arg("d"));

    m.def(
        "h_rect", [](int r, int s, int m, int n) { return poly_to_list(h_rect(r, s, m, n)); },
        py::arg("r"), py::arg("s"), py::arg("m"), py::arg("n"));
    m.def(
        "x_terms",
        [](int r, int s, int m, int n, int i) {
            std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
            for (const SchurLabel& label : x_terms(r, s, m, n, i))
                out.emplace_back(label.row.parts(), label.col.parts());
            return out;
        },
        py::arg("r"), py::arg("s"), py::arg("m"), py::arg("n"), py::arg("i"));
    m.def(
        "x_homology",
        [](int r, int s, int m, int n, int k) {
            std::vector<std::tuple<int, int, long long>> out;
            for (const HomologySummand& h : x_homology(r, s, m, n, k))
                out.emplace_back(h.rect_r, h.rect_s, h.multiplicity);
            return out;
        },
        py::arg("r"), py::arg("s"), py::arg("m"), py::arg("n"), py::arg("k"));
    m.def(
        "multiplicity_poly",
        [](int a, int b, int q) { return int_poly_to_dict(multiplicity_poly(a, b, q)); },
        py::arg("a"), py::arg("b"), py::arg("q"));
    m.def(
        "betti_polynomial",
        [](int a, int b, int m, int n) { return poly_to_list(betti_polynomial(a, b, m, n)); },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"),
        "Equivariant Betti polynomial as a list of labelled terms.");
    m.def(
        "betti_table_formula",
        [](int a, int b, int m, int n) {
            return table_to_dict(evaluate_dimensions(betti_polynomial(a, b, m, n), m, n));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"),
        "Numeric Betti table {(i, j): value} from the closed formula.");
    m.def(
        "proj_dim_and_reg", [](int a, int b, int m, int n) { return proj_dim_and_reg(a, b, m, n); },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"));

    m.def(
        "hilbert_function",
        [](int a, int b, int m, int n, int d) {
            ThickeningIdeal ideal(a, b, m, n);
            return ideal.hilbert_function(d);
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"), py::arg("d"));
    m.def(
        "generator_space_dim",
        [](int a, int b, int m, int n) {
            ThickeningIdeal ideal(a, b, m, n);
            return ideal.is_zero_ideal() ? 0 : ideal.generator_space().dim();
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"),
        "Dimension of the span of the generating representation.");
    m.def(
        "koszul_betti",
        [](int a, int b, int m, int n, int i, int j, long long cell_budget, int threads) {
            ThickeningIdeal ideal(a, b, m, n);
            return koszul_betti(ideal, i, j, {cell_budget, threads});
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"), py::arg("i"), py::arg("j"),
        py::arg("cell_budget") = 50'000'000LL, py::arg("threads") = 0);
    m.def(
        "betti_table_oracle",
        [](int a, int b, int m, int n, int max_i, int max_j, long long cell_budget, int threads) {
            ThickeningIdeal ideal(a, b, m, n);
            return table_to_dict(koszul_betti_table(ideal, max_i, max_j, {cell_budget, threads}));
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"), py::arg("max_i"), py::arg("max_j"),
        py::arg("cell_budget") = 50'000'000LL, py::arg("threads") = 0,
        "Numeric Betti table {(i, j): value} from the Koszul oracle.");
    m.def(
        "weight_refined_betti",
        [](int a, int b, int m, int n, int i, int j, const std::vector<int>& row_weight,
           const std::vector<int>& col_weight) {
            ThickeningIdeal ideal(a, b, m, n);
            return weight_refined_betti(ideal, i, j, WeightVector{row_weight, col_weight});
        },
        py::arg("a"), py::arg("b"), py::arg("m"), py::arg("n"), py::arg("i"), py::arg("j"),
        py::arg("row_weight"), py::arg("col_weight"));
    m.def("euler_check", &euler_check, py::arg("r"), py::arg("s"), py::arg("m"), py::arg("n"),
          py::arg("dmax"));
}
