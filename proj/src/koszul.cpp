#include "rectsyz/koszul.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "rectsyz/betti_formula.hpp"
#include "rectsyz/parallel.hpp"
#include "rectsyz/partitions.hpp"

namespace rectsyz {

namespace {

struct Int64Narrow {};

long long to_i64(const BigInt& x) {
    if (x > std::numeric_limits<long long>::max() || x < -std::numeric_limits<long long>::max())
        throw Int64Narrow{};
    return static_cast<long long>(x);
}

WeightVector subset_weight(const std::vector<int>& vars, int m, int n) {
    WeightVector w;
    w.row.assign(static_cast<std::size_t>(m), 0);
    w.col.assign(static_cast<std::size_t>(n), 0);
    for (int v : vars) {
        ++w.row[static_cast<std::size_t>(v / n)];
        ++w.col[static_cast<std::size_t>(v % n)];
    }
    return w;
}

bool try_subtract(const WeightVector& a, const WeightVector& b, WeightVector& out) {
    out = a;
    for (std::size_t i = 0; i < out.row.size(); ++i) {
        out.row[i] -= b.row[i];
        if (out.row[i] < 0) return false;
    }
    for (std::size_t i = 0; i < out.col.size(); ++i) {
        out.col[i] -= b.col[i];
        if (out.col[i] < 0) return false;
    }
    return true;
}

template <class Fn>
void for_each_subset(int nvars, int size, Fn&& fn) {
    if (size > nvars) return;
    std::vector<int> vars(static_cast<std::size_t>(size));
    std::iota(vars.begin(), vars.end(), 0);
    for (;;) {
        fn(static_cast<const std::vector<int>&>(vars));
        int k = size - 1;
        while (k >= 0 && vars[static_cast<std::size_t>(k)] == nvars - size + k) --k;
        if (k < 0) return;
        ++vars[static_cast<std::size_t>(k)];
        for (int t = k + 1; t < size; ++t)
            vars[static_cast<std::size_t>(t)] = vars[static_cast<std::size_t>(t) - 1] + 1;
    }
}

struct ColumnKey {
    std::uint64_t mask;
    int monomial;
    bool operator==(const ColumnKey&) const = default;
};

struct ColumnKeyHash {
    std::size_t operator()(const ColumnKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.mask * 1000003ULL ^ static_cast<std::uint64_t>(k.monomial));
    }
};

struct LevelResult {
    long long dim = 0;
    long long rank = 0;
};

// Dimension of Λ^l V ⊗ I_{j-l} in weight wv and the rank of the Koszul
// differential out of it (into Λ^{l-1} V ⊗ S_{j-l+1}).
LevelResult level_dim_rank(ThickeningIdeal& ideal, int l, int j, const WeightVector& wv,
                           const KoszulOptions& opts) {
    const int nvars = ideal.num_vars();
    if (l < 0 || l > nvars) return {};
    const int d = j - l;
    if (d < ideal.generator_degree() || ideal.is_zero_ideal()) return {};

    // The domain dimension is bounded by binom(nvars, l) times the graded
    // piece; refuse plainly infeasible level sizes before enumerating.
    if (binomial(nvars, l) > opts.cell_budget)
        throw BudgetExceeded(binomial(nvars, l), opts.cell_budget);

    const GradedSubspace& piece = ideal.graded_piece(d);

    struct DomainGroup {
        std::uint64_t mask;
        std::vector<int> vars;
        std::vector<int> row_indices;
    };
    std::vector<DomainGroup> domain;
    long long dim = 0;
    for_each_subset(nvars, l, [&](const std::vector<int>& vars) {
        WeightVector target;
        if (!try_subtract(wv, subset_weight(vars, ideal.m(), ideal.n()), target)) return;
        const std::vector<int>& rows = piece.row_indices_with_weight(target);
        if (rows.empty()) return;
        std::uint64_t mask = 0;
        for (int v : vars) mask |= 1ULL << v;
        domain.push_back({mask, vars, rows});
        dim += static_cast<long long>(rows.size());
    });
    if (dim == 0) return {};
    if (l == 0) return {dim, 0};  // the map out of homological degree 0 is zero

    const std::vector<int>& shift = ideal.var_shift(d);

    // Assemble the matrix sparsely; column order is irrelevant for the rank.
    std::unordered_map<ColumnKey, int, ColumnKeyHash> columns;
    std::vector<std::vector<std::pair<int, const BigInt*>>> sparse;
    sparse.reserve(static_cast<std::size_t>(dim));
    for (const DomainGroup& group : domain) {
        for (int row_index : group.row_indices) {
            const GradedSubspace::Row& g = piece.rows()[static_cast<std::size_t>(row_index)];
            std::vector<std::pair<int, const BigInt*>> row;
            row.reserve(g.entries.size() * static_cast<std::size_t>(l));
            for (int k = 0; k < l; ++k) {
                const int v = group.vars[static_cast<std::size_t>(k)];
                const std::uint64_t mask = group.mask & ~(1ULL << v);
                const bool negative = k % 2 == 1;  // sign (-1)^{k+1} with k one-based
                for (const auto& [mono, coeff] : g.entries) {
                    const int shifted =
                        shift[static_cast<std::size_t>(mono) * static_cast<std::size_t>(nvars) +
                              static_cast<std::size_t>(v)];
                    auto [it, inserted] =
                        columns.try_emplace({mask, shifted}, static_cast<int>(columns.size()));
                    row.emplace_back(negative ? -(it->second + 1) : it->second + 1, &coeff);
                }
            }
            sparse.push_back(std::move(row));
        }
    }

    const long long cols = static_cast<long long>(columns.size());
    const long long cells = dim * cols;
    if (cells > opts.cell_budget) throw BudgetExceeded(cells, opts.cell_budget);

    try {
        std::vector<std::vector<long long>> dense(static_cast<std::size_t>(dim),
                                                  std::vector<long long>(static_cast<std::size_t>(cols), 0));
        for (std::size_t r = 0; r < sparse.size(); ++r)
            for (const auto& [signed_col, coeff] : sparse[r]) {
                const long long value = to_i64(*coeff);
                if (signed_col > 0)
                    dense[r][static_cast<std::size_t>(signed_col - 1)] = value;
                else
                    dense[r][static_cast<std::size_t>(-signed_col - 1)] = -value;
            }
        return {dim, exact_rank(std::move(dense))};
    } catch (const Int64Narrow&) {
        std::vector<std::vector<BigInt>> dense(static_cast<std::size_t>(dim),
                                               std::vector<BigInt>(static_cast<std::size_t>(cols), 0));
        for (std::size_t r = 0; r < sparse.size(); ++r)
            for (const auto& [signed_col, coeff] : sparse[r]) {
                if (signed_col > 0)
                    dense[r][static_cast<std::size_t>(signed_col - 1)] = *coeff;
                else
                    dense[r][static_cast<std::size_t>(-signed_col - 1)] = -*coeff;
            }
        return {dim, exact_rank_big(dense)};
    }
}

// Homology dimensions H_0..H_lmax of the weight-wv block in internal degree j.
std::vector<long long> column_homology(ThickeningIdeal& ideal, int j, int lmax,
                                       const WeightVector& wv, const KoszulOptions& opts) {
    std::vector<LevelResult> levels(static_cast<std::size_t>(lmax) + 2);
    for (int l = 0; l <= lmax + 1; ++l)
        levels[static_cast<std::size_t>(l)] = level_dim_rank(ideal, l, j, wv, opts);
    std::vector<long long> h(static_cast<std::size_t>(lmax) + 1, 0);
    for (int l = 0; l <= lmax; ++l) {
        const auto& cur = levels[static_cast<std::size_t>(l)];
        const auto& above = levels[static_cast<std::size_t>(l) + 1];
        h[static_cast<std::size_t>(l)] = cur.dim - cur.rank - above.rank;
        if (h[static_cast<std::size_t>(l)] < 0)
            throw std::logic_error("negative homology dimension: rank bookkeeping broken");
    }
    return h;
}

std::vector<int> padded(const Partition& p, int length) {
    std::vector<int> out(static_cast<std::size_t>(length), 0);
    for (int i = 0; i < p.length(); ++i) out[static_cast<std::size_t>(i)] = p.part(i);
    return out;
}

// Number of distinct rearrangements of the padded weight vector.
long long orbit_size(const std::vector<int>& values) {
    long long remaining = static_cast<long long>(values.size());
    long long count = 1;
    std::map<int, int> mult;
    for (int v : values) ++mult[v];
    for (const auto& [value, k] : mult) {
        if (__builtin_mul_overflow(count, binomial(remaining, k), &count))
            throw std::overflow_error("weight orbit count exceeds 64-bit range");
        remaining -= k;
    }
    return count;
}

// Accumulates the whole column of B_{*,j} for 0 <= i <= lmax into out.
void add_column(ThickeningIdeal& ideal, int j, int lmax, const KoszulOptions& opts, BettiTable& out) {
    struct Task {
        WeightVector wv;
        long long orbit;
    };
    std::vector<Task> tasks;
    for (const Partition& rp : partitions_of_size(j, ideal.m(), j)) {
        const std::vector<int> row = padded(rp, ideal.m());
        const long long row_orbit = orbit_size(row);
        for (const Partition& cp : partitions_of_size(j, ideal.n(), j)) {
            const std::vector<int> col = padded(cp, ideal.n());
            tasks.push_back({WeightVector{row, col}, row_orbit * orbit_size(col)});
        }
    }
    std::vector<std::vector<long long>> results(tasks.size());
    parallel_for(tasks.size(), opts.threads, [&](std::size_t t) {
        results[t] = column_homology(ideal, j, lmax, tasks[t].wv, opts);
    });
    for (std::size_t t = 0; t < tasks.size(); ++t)
        for (int l = 0; l <= lmax; ++l)
            out.add(l, j, tasks[t].orbit * results[t][static_cast<std::size_t>(l)]);
}

int column_level_cap(ThickeningIdeal& ideal, int i, int j) {
    return std::min({i, j - ideal.generator_degree(), ideal.num_vars()});
}

// Exterior-power bases are encoded as 64-bit masks.
void check_variable_count(const ThickeningIdeal& ideal) {
    if (ideal.num_vars() > 64)
        throw std::invalid_argument("the Koszul oracle supports at most 64 matrix entries");
}

}  // namespace

long long koszul_betti(ThickeningIdeal& ideal, int i, int j, const KoszulOptions& opts) {
    check_variable_count(ideal);
    if (i < 0 || j < 0 || ideal.is_zero_ideal()) return 0;
    if (i > ideal.num_vars() || j - i < ideal.generator_degree()) return 0;
    ideal.ensure_built(j);
    BettiTable column;
    add_column(ideal, j, column_level_cap(ideal, i, j), opts, column);
    return column.entry(i, j);
}

long long weight_refined_betti(ThickeningIdeal& ideal, int i, int j, const WeightVector& wv,
                               const KoszulOptions& opts) {
    if (static_cast<int>(wv.row.size()) != ideal.m() || static_cast<int>(wv.col.size()) != ideal.n())
        throw std::invalid_argument("weight vector shape does not match the matrix shape");
    const long long row_sum = std::accumulate(wv.row.begin(), wv.row.end(), 0LL);
    const long long col_sum = std::accumulate(wv.col.begin(), wv.col.end(), 0LL);
    if (row_sum != j || col_sum != j)
        throw std::invalid_argument("weight entries must sum to the internal degree");
    check_variable_count(ideal);
    if (i < 0 || j < 0 || ideal.is_zero_ideal()) return 0;
    if (i > ideal.num_vars() || j - i < ideal.generator_degree()) return 0;

    ideal.ensure_built(j);
    const LevelResult mid = level_dim_rank(ideal, i, j, wv, opts);
    const LevelResult above = level_dim_rank(ideal, i + 1, j, wv, opts);
    const long long h = mid.dim - mid.rank - above.rank;
    if (h < 0) throw std::logic_error("negative homology dimension: rank bookkeeping broken");
    return h;
}

BettiTable koszul_betti_table(ThickeningIdeal& ideal, int max_i, int max_j, const KoszulOptions& opts) {
    check_variable_count(ideal);
    BettiTable out;
    if (ideal.is_zero_ideal() || max_i < 0 || max_j < 0) return out;
    ideal.ensure_built(max_j);
    for (int j = ideal.generator_degree(); j <= max_j; ++j) {
        const int lmax = column_level_cap(ideal, max_i, j);
        if (lmax < 0) continue;
        add_column(ideal, j, lmax, opts, out);
    }
    return out;
}

bool euler_check(int r, int s, int m, int n, int dmax) {
    if (r < 1 || s < 1 || m < 1 || n < 1) throw std::invalid_argument("sides and ranks must be positive");
    if (dmax < 0) throw std::invalid_argument("negative degree bound");

    const long long nvars = static_cast<long long>(m) * n;
    auto sym_dim = [&](long long e) { return e < 0 ? 0 : binomial(nvars + e - 1, e); };

    // Left side: alternating sum of the strand term dimensions.
    const int edge = std::min(r, s);
    const int imax = std::max(0, edge * (m + n - 2 * r));
    std::vector<long long> term_dims(static_cast<std::size_t>(imax) + 1, 0);
    for (int i = 0; i <= imax; ++i)
        for (const SchurLabel& label : x_terms(r, s, m, n, i))
            term_dims[static_cast<std::size_t>(i)] += schur_dim(label.row, m) * schur_dim(label.col, n);

    // Right side: Hilbert functions of the even-homology summands.
    std::map<std::pair<int, int>, ThickeningIdeal> ideals;
    std::vector<std::vector<HomologySummand>> homology;
    const int jmax = std::max(0, (std::min(m, n) - r) * edge);
    for (int hj = 0; hj <= jmax; ++hj) {
        homology.push_back(x_homology(r, s, m, n, 2 * hj));
        for (const HomologySummand& summand : homology.back()) {
            auto key = std::make_pair(summand.rect_r, summand.rect_s);
            auto it = ideals.find(key);
            if (it == ideals.end())
                it = ideals.emplace(key, ThickeningIdeal(summand.rect_r, summand.rect_s, m, n)).first;
            it->second.ensure_built(dmax);
        }
    }

    for (int d = 0; d <= dmax; ++d) {
        long long lhs = 0;
        for (int i = 0; i <= imax; ++i) {
            const long long free_dim =
                term_dims[static_cast<std::size_t>(i)] * sym_dim(d - (static_cast<long long>(r) * s + i));
            lhs += i % 2 == 0 ? free_dim : -free_dim;
        }
        long long rhs = 0;  // odd homology vanishes, so all signs are +1
        for (const auto& summands : homology)
            for (const HomologySummand& summand : summands)
                rhs += summand.multiplicity *
                       ideals.at({summand.rect_r, summand.rect_s}).hilbert_function(d);
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace rectsyz
