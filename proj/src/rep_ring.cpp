#include "rectsyz/rep_ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rectsyz {

using BigInt = boost::multiprecision::cpp_int;

long long BettiTable::entry(int i, int j) const noexcept {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long value) {
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace({i, j}, value);
    if (!inserted) {
        if (__builtin_add_overflow(it->second, value, &it->second))
            throw std::overflow_error("Betti entry exceeds 64-bit range");
        if (it->second == 0) entries_.erase(it);
    }
}

void BettiTable::set(int i, int j, long long value) {
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

int BettiTable::max_i() const noexcept {
    int m = 0;
    for (const auto& [key, value] : entries_) m = std::max(m, key.first);
    return m;
}

int BettiTable::max_j() const noexcept {
    int m = 0;
    for (const auto& [key, value] : entries_) m = std::max(m, key.second);
    return m;
}

void EquivariantPolynomial::add_term(const SchurLabel& label, int zdeg, int wdeg, long long mult) {
    if (zdeg < 0 || wdeg < 0) throw std::invalid_argument("negative degree in equivariant term");
    if (mult < 0) throw std::invalid_argument("negative multiplicity in equivariant term");
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace({wdeg, zdeg, label}, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

long long EquivariantPolynomial::multiplicity(const SchurLabel& label, int zdeg, int wdeg) const noexcept {
    auto it = terms_.find({wdeg, zdeg, label});
    return it == terms_.end() ? 0 : it->second;
}

EquivariantPolynomial& EquivariantPolynomial::operator+=(const EquivariantPolynomial& other) {
    for (const auto& [key, mult] : other.terms_) {
        const auto& [w, z, label] = key;
        add_term(label, z, w, mult);
    }
    return *this;
}

EquivariantPolynomial EquivariantPolynomial::multiplied_by_w_poly(const IntPolynomial& p) const {
    EquivariantPolynomial out;
    for (const auto& [key, mult] : terms_) {
        const auto& [w, z, label] = key;
        for (auto [k, c] : p.coeffs()) out.add_term(label, z, w + k, mult * c);
    }
    return out;
}

EquivariantPolynomial EquivariantPolynomial::transposed() const {
    EquivariantPolynomial out;
    for (const auto& [key, mult] : terms_) {
        const auto& [w, z, label] = key;
        out.add_term(label.transposed(), z, w, mult);
    }
    return out;
}

std::vector<EquivariantPolynomial::Term> EquivariantPolynomial::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [key, mult] : terms_) {
        const auto& [w, z, label] = key;
        out.push_back({label, z, w, mult});
    }
    return out;
}

long long schur_dim(const Partition& lambda, int rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    if (lambda.length() > rank) return 0;
    if (lambda.empty()) return 1;

    const Partition conj = lambda.conjugate();
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            num *= rank + j - i;                                    // content factor
            den *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;   // hook length
        }
    }
    BigInt dim = num / den;
    if (dim * den != num) throw std::logic_error("hook-content division not exact");
    if (dim > std::numeric_limits<long long>::max())
        throw std::overflow_error("schur_dim exceeds 64-bit range");
    return static_cast<long long>(dim);
}

namespace {

// Depth-first fill of the shape in row-major order; rows weakly increase,
// columns strictly increase, value v used content[v] times.
long long count_ssyt(const Partition& shape, std::vector<int>& remaining,
                     std::vector<std::vector<int>>& grid, int row, int col) {
    if (row == shape.length()) return 1;
    int next_row = row, next_col = col + 1;
    if (next_col == shape.part(row)) {
        next_row = row + 1;
        next_col = 0;
    }
    int lo = col > 0 ? grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col) - 1] : 1;
    if (row > 0 && col < shape.part(row - 1))
        lo = std::max(lo, grid[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col)] + 1);
    long long total = 0;
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[static_cast<std::size_t>(v) - 1] == 0) continue;
        --remaining[static_cast<std::size_t>(v) - 1];
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        total += count_ssyt(shape, remaining, grid, next_row, next_col);
        ++remaining[static_cast<std::size_t>(v) - 1];
    }
    return total;
}

}  // namespace

long long kostka(const Partition& shape, const std::vector<int>& content) {
    long long content_sum = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("kostka content must be nonnegative");
        content_sum += c;
    }
    if (content_sum != shape.size()) throw std::invalid_argument("kostka content must sum to |shape|");
    if (shape.empty()) return 1;
    if (shape.length() > static_cast<int>(content.size())) return 0;

    std::vector<int> remaining = content;
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.length()));
    for (int i = 0; i < shape.length(); ++i)
        grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.part(i)), 0);
    return count_ssyt(shape, remaining, grid, 0, 0);
}

std::vector<SchurLabel> cauchy_degree(int m, int n, long long d) {
    if (m < 1 || n < 1) throw std::invalid_argument("cauchy_degree needs positive ranks");
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<SchurLabel> out;
    for (const Partition& lambda : partitions_of_size(d, std::min(m, n), static_cast<int>(d)))
        out.push_back({lambda, lambda});
    return out;
}

BettiTable evaluate_dimensions(const EquivariantPolynomial& p, int m, int n) {
    BettiTable table;
    for (const auto& term : p.terms()) {
        long long dim = 0, value = 0;
        if (__builtin_mul_overflow(schur_dim(term.label.row, m), schur_dim(term.label.col, n), &dim) ||
            __builtin_mul_overflow(dim, term.mult, &value))
            throw std::overflow_error("Betti entry exceeds 64-bit range");
        table.add(term.wdeg, term.zdeg, value);
    }
    return table;
}

}  // namespace rectsyz
