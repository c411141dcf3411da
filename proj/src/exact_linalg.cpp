#include "rectsyz/exact_linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rectsyz {

namespace {

struct Int64Overflow {};

// One-step Bareiss update in 128-bit, throwing if the exact result leaves
// 64-bit range (the asymmetric minimum is excluded so |entry| stays valid).
inline long long bareiss_cell(long long pivot, long long cur, long long lead, long long top,
                              long long prev) {
    __int128 t = static_cast<__int128>(pivot) * cur - static_cast<__int128>(lead) * top;
    __int128 q = t / prev;  // division is exact in Bareiss elimination
    if (q > std::numeric_limits<long long>::max() || q < -std::numeric_limits<long long>::max())
        throw Int64Overflow{};
    return static_cast<long long>(q);
}

long long rank_i64(std::vector<std::vector<long long>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    auto mag = [](long long v) {
        return v < 0 ? 0ULL - static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    };
    std::size_t rank = 0;
    long long prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        // smallest nonzero pivot keeps intermediate entries small
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            if (pivot == rows || mag(m[r][c]) < mag(m[pivot][c])) pivot = r;
        }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const long long p = m[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const long long lead = m[r][c];
            if (lead == 0) {
                for (std::size_t k = c + 1; k < cols; ++k)
                    if (m[r][k] != 0) m[r][k] = bareiss_cell(p, m[r][k], 0, 0, prev);
            } else {
                for (std::size_t k = c + 1; k < cols; ++k)
                    m[r][k] = bareiss_cell(p, m[r][k], lead, m[rank][k], prev);
                m[r][c] = 0;
            }
        }
        prev = p;
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace

long long exact_rank_big(std::vector<std::vector<BigInt>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            if (pivot == rows || abs(m[r][c]) < abs(m[pivot][c])) pivot = r;
        }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const BigInt p = m[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const BigInt lead = m[r][c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                if (m[r][k] == 0 && lead == 0) continue;
                m[r][k] = (p * m[r][k] - lead * m[rank][k]) / prev;
            }
            m[r][c] = 0;
        }
        prev = p;
        ++rank;
    }
    return static_cast<long long>(rank);
}

long long exact_rank(std::vector<std::vector<long long>> matrix) {
    std::vector<std::vector<long long>> scratch = matrix;
    try {
        return rank_i64(scratch);
    } catch (const Int64Overflow&) {
        std::vector<std::vector<BigInt>> big(matrix.size());
        for (std::size_t r = 0; r < matrix.size(); ++r)
            big[r].assign(matrix[r].begin(), matrix[r].end());
        return exact_rank_big(big);
    }
}

namespace {

void normalize_primitive(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const BigInt& x : row) {
        if (x != 0) g = g == 0 ? BigInt(abs(x)) : BigInt(gcd(g, abs(x)));
        if (g == 1) break;
    }
    if (g == 0) return;
    BigInt lead = 0;
    for (const BigInt& x : row)
        if (x != 0) {
            lead = x;
            break;
        }
    if (lead < 0) g = -g;
    if (g != 1)
        for (BigInt& x : row) x /= g;
}

int pivot_col(const std::vector<BigInt>& row) {
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k] != 0) return static_cast<int>(k);
    return -1;
}

}  // namespace

std::vector<std::vector<BigInt>> integer_rref(std::vector<std::vector<BigInt>> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        normalize_primitive(rows[rank]);
        const BigInt p = rows[rank][c];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const BigInt lead = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = p * rows[r][k] - lead * rows[rank][k];
            normalize_primitive(rows[r]);
        }
        ++rank;
    }
    rows.resize(rank);
    for (auto& row : rows) normalize_primitive(row);
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return pivot_col(x) < pivot_col(y); });
    return rows;
}

bool in_row_span(const std::vector<std::vector<BigInt>>& rref_rows, std::vector<BigInt> v) {
    for (const auto& row : rref_rows) {
        const int p = pivot_col(row);
        if (p < 0) continue;
        const std::size_t pc = static_cast<std::size_t>(p);
        if (v[pc] == 0) continue;
        const BigInt& a = row[pc];
        const BigInt b = v[pc];  // copy: v changes below
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a * v[k] - b * row[k];
        normalize_primitive(v);
    }
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

}  // namespace rectsyz
