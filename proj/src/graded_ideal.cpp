#include "rectsyz/graded_ideal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rectsyz {

const std::vector<int>& GradedSubspace::row_indices_with_weight(const WeightVector& w) const {
    static const std::vector<int> kEmpty;
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? kEmpty : it->second;
}

bool GradedSubspace::contains_vector(std::vector<BigInt> v) const {
    for (const Row& row : rows_) {
        const int p = row.pivot();
        if (p < 0 || v[static_cast<std::size_t>(p)] == 0) continue;
        const BigInt& a = row.pivot_coeff();
        const BigInt b = v[static_cast<std::size_t>(p)];  // copy: v changes below
        for (BigInt& x : v) x *= a;
        for (const auto& [col, coeff] : row.entries) v[static_cast<std::size_t>(col)] -= b * coeff;
    }
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

GradedSubspace GradedSubspace::from_weight_blocks(
    const MonomialBasis& basis,
    std::map<WeightVector, std::vector<std::vector<std::pair<int, BigInt>>>>& sparse_by_weight) {
    GradedSubspace out(basis.degree());
    for (auto& [weight, sparse_rows] : sparse_by_weight) {
        const std::vector<int>& block_cols = basis.indices_with_weight(weight);
        std::map<int, int> local;  // global monomial index -> block column
        for (std::size_t k = 0; k < block_cols.size(); ++k)
            local[block_cols[k]] = static_cast<int>(k);

        std::vector<std::vector<BigInt>> dense(sparse_rows.size(),
                                               std::vector<BigInt>(block_cols.size(), 0));
        for (std::size_t r = 0; r < sparse_rows.size(); ++r)
            for (const auto& [col, coeff] : sparse_rows[r]) {
                auto it = local.find(col);
                if (it == local.end())
                    throw std::logic_error("spanning vector is not weight-homogeneous");
                dense[r][static_cast<std::size_t>(it->second)] = coeff;
            }

        for (auto& reduced : integer_rref(std::move(dense))) {
            Row row;
            row.weight = weight;
            for (std::size_t k = 0; k < reduced.size(); ++k)
                if (reduced[k] != 0) row.entries.emplace_back(block_cols[k], std::move(reduced[k]));
            if (!row.entries.empty()) out.rows_.push_back(std::move(row));
        }
    }
    std::sort(out.rows_.begin(), out.rows_.end(),
              [](const Row& x, const Row& y) { return x.pivot() < y.pivot(); });
    for (int r = 0; r < out.dim(); ++r)
        out.by_weight_[out.rows_[static_cast<std::size_t>(r)].weight].push_back(r);
    return out;
}

GradedSubspace GradedSubspace::from_spanning_dense(const MonomialBasis& basis,
                                                   const std::vector<std::vector<BigInt>>& vectors) {
    std::map<WeightVector, std::vector<std::vector<std::pair<int, BigInt>>>> by_weight;
    for (const auto& v : vectors) {
        std::vector<std::pair<int, BigInt>> sparse;
        for (int idx = 0; idx < basis.size(); ++idx)
            if (v[static_cast<std::size_t>(idx)] != 0) sparse.emplace_back(idx, v[static_cast<std::size_t>(idx)]);
        if (sparse.empty()) continue;
        const WeightVector& w = basis.weight_of(sparse.front().first);
        by_weight[w].push_back(std::move(sparse));
    }
    return from_weight_blocks(basis, by_weight);
}

namespace {

void normalize_content(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) {
        if (x != 0) g = g == 0 ? BigInt(abs(x)) : BigInt(gcd(g, abs(x)));
        if (g == 1) return;
    }
    if (g > 1)
        for (BigInt& x : v) x /= g;
}

// Echelon set maintained during the closure search.
struct EchelonSet {
    std::vector<std::vector<BigInt>> rows;  // each primitive, distinct pivots, sorted
    std::vector<int> pivots;

    // Reduces v against the rows; if independent, inserts the reduced vector
    // and returns its index, otherwise -1.
    int insert(std::vector<BigInt> v) {
        normalize_content(v);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::size_t p = static_cast<std::size_t>(pivots[r]);
            if (v[p] == 0) continue;
            const BigInt a = rows[r][p];
            const BigInt b = v[p];
            for (std::size_t k = 0; k < v.size(); ++k) v[k] = a * v[k] - b * rows[r][k];
            normalize_content(v);
        }
        int pivot = -1;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) {
                pivot = static_cast<int>(k);
                break;
            }
        if (pivot < 0) return -1;
        auto pos = std::upper_bound(pivots.begin(), pivots.end(), pivot);
        const std::size_t at = static_cast<std::size_t>(pos - pivots.begin());
        pivots.insert(pos, pivot);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
        return static_cast<int>(at);
    }
};

}  // namespace

GradedSubspace lowering_closure(const PolyQ& f, int m, int n) {
    if (f.is_zero()) throw std::invalid_argument("lowering_closure of the zero polynomial");
    const int degree = f.degree();
    const MonomialBasis basis(m, n, degree);

    // Clear denominators: the operators preserve integrality.
    BigInt denom_lcm = 1;
    for (const auto& [e, c] : f.terms())
        denom_lcm = lcm(denom_lcm, denominator(c));
    std::vector<BigInt> start(static_cast<std::size_t>(basis.size()), 0);
    for (const auto& [e, c] : f.terms()) {
        BigRat scaled = c * BigRat(denom_lcm);
        start[static_cast<std::size_t>(basis.index_of(e))] = numerator(scaled);
    }

    // E(p <- q) applied to v: sum over pairing index t of z_{p,t} d/dz_{q,t}
    // (rows) or z_{t,p} d/dz_{t,q} (columns).
    auto apply_op = [&](const std::vector<BigInt>& v, bool row_op, int p, int q) {
        std::vector<BigInt> out(v.size(), 0);
        const int pair_count = row_op ? n : m;
        for (int idx = 0; idx < basis.size(); ++idx) {
            const BigInt& c = v[static_cast<std::size_t>(idx)];
            if (c == 0) continue;
            const Exponents& e = basis.exponents(idx);
            for (int t = 0; t < pair_count; ++t) {
                const int from = row_op ? q * n + t : t * n + q;
                const int to = row_op ? p * n + t : t * n + p;
                const int exp = e[static_cast<std::size_t>(from)];
                if (exp == 0) continue;
                Exponents shifted = e;
                --shifted[static_cast<std::size_t>(from)];
                ++shifted[static_cast<std::size_t>(to)];
                out[static_cast<std::size_t>(basis.index_of(shifted))] += c * exp;
            }
        }
        return out;
    };

    EchelonSet echelon;
    std::deque<std::vector<BigInt>> queue;
    if (int at = echelon.insert(std::move(start)); at >= 0)
        queue.push_back(echelon.rows[static_cast<std::size_t>(at)]);
    while (!queue.empty()) {
        const std::vector<BigInt> v = std::move(queue.front());
        queue.pop_front();
        for (int rowside = 1; rowside >= 0; --rowside) {
            const int count = rowside ? m : n;
            for (int p = 0; p < count; ++p)
                for (int q = 0; q < count; ++q) {
                    if (p == q) continue;
                    if (int at = echelon.insert(apply_op(v, rowside == 1, p, q)); at >= 0)
                        queue.push_back(echelon.rows[static_cast<std::size_t>(at)]);
                }
        }
    }

    return GradedSubspace::from_spanning_dense(basis, echelon.rows);
}

ThickeningIdeal::ThickeningIdeal(int a, int b, int m, int n) : a_(a), b_(b), m_(m), n_(n) {
    if (a < 1 || b < 1) throw std::invalid_argument("thickening parameters must be positive");
    if (m < 1 || n < 1) throw std::invalid_argument("matrix shape must be positive");
    zero_ = a > std::min(m, n);
}

void ThickeningIdeal::ensure_built(int dmax) {
    for (int d = 0; d <= dmax; ++d) {
        monomials(d);
        graded_piece(d);
        if (d < dmax) var_shift(d);
    }
}

const MonomialBasis& ThickeningIdeal::monomials(int d) {
    auto it = bases_.find(d);
    if (it == bases_.end()) it = bases_.emplace(d, MonomialBasis(m_, n_, d)).first;
    return it->second;
}

const std::vector<int>& ThickeningIdeal::var_shift(int d) {
    auto it = shifts_.find(d);
    if (it != shifts_.end()) return it->second;

    const MonomialBasis& from = monomials(d);
    const MonomialBasis& to = monomials(d + 1);
    std::vector<int> table(static_cast<std::size_t>(from.size()) * static_cast<std::size_t>(num_vars()));
    for (int idx = 0; idx < from.size(); ++idx)
        for (int v = 0; v < num_vars(); ++v)
            table[static_cast<std::size_t>(idx) * static_cast<std::size_t>(num_vars()) +
                  static_cast<std::size_t>(v)] =
                to.index_of(MonomialBasis::multiplied_by_var(from.exponents(idx), v));
    return shifts_.emplace(d, std::move(table)).first->second;
}

const GradedSubspace& ThickeningIdeal::graded_piece(int d) {
    auto it = pieces_.find(d);
    if (it != pieces_.end()) return it->second;
    if (d < 0) throw std::invalid_argument("negative degree");

    if (zero_ || d < generator_degree()) {
        return pieces_.emplace(d, GradedSubspace(d)).first->second;
    }
    if (d == generator_degree()) return generator_space();

    // I_d = V * I_{d-1} once d exceeds the generator degree.
    const GradedSubspace& prev = graded_piece(d - 1);
    const MonomialBasis& basis = monomials(d);
    const std::vector<int>& shift = var_shift(d - 1);

    std::map<WeightVector, std::vector<std::vector<std::pair<int, BigInt>>>> by_weight;
    for (const auto& row : prev.rows()) {
        for (int v = 0; v < num_vars(); ++v) {
            std::vector<std::pair<int, BigInt>> product;
            product.reserve(row.entries.size());
            for (const auto& [col, coeff] : row.entries)
                product.emplace_back(
                    shift[static_cast<std::size_t>(col) * static_cast<std::size_t>(num_vars()) +
                          static_cast<std::size_t>(v)],
                    coeff);
            std::sort(product.begin(), product.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            by_weight[basis.weight_of(product.front().first)].push_back(std::move(product));
        }
    }
    GradedSubspace piece = GradedSubspace::from_weight_blocks(basis, by_weight);
    return pieces_.emplace(d, std::move(piece)).first->second;
}

long long ThickeningIdeal::hilbert_function(int d) {
    if (d < 0) return 0;
    return graded_piece(d).dim();
}

const GradedSubspace& ThickeningIdeal::generator_space() {
    if (zero_) throw std::logic_error("zero ideal has no generator space");
    auto it = pieces_.find(generator_degree());
    if (it != pieces_.end()) return it->second;
    const PolyQ gen = highest_weight_generator(a_, b_, m_, n_);
    monomials(generator_degree());
    GradedSubspace span = lowering_closure(gen, m_, n_);
    return pieces_.emplace(generator_degree(), std::move(span)).first->second;
}

}  // namespace rectsyz
