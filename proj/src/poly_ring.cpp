#include "rectsyz/poly_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rectsyz {

long long WeightVector::degree() const noexcept {
    return std::accumulate(row.begin(), row.end(), 0LL);
}

std::string WeightVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << ")|(";
    for (std::size_t i = 0; i < col.size(); ++i) os << (i ? "," : "") << col[i];
    os << ')';
    return os.str();
}

WeightVector monomial_weight(const Exponents& e, int m, int n) {
    WeightVector w;
    w.row.assign(static_cast<std::size_t>(m), 0);
    w.col.assign(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < static_cast<int>(e.size()); ++k) {
        w.row[static_cast<std::size_t>(k / n)] += e[static_cast<std::size_t>(k)];
        w.col[static_cast<std::size_t>(k % n)] += e[static_cast<std::size_t>(k)];
    }
    return w;
}

namespace {

void gen_exponents(int var, int remaining, Exponents& cur, std::vector<Exponents>& out) {
    if (var + 1 == static_cast<int>(cur.size())) {
        cur[static_cast<std::size_t>(var)] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[static_cast<std::size_t>(var)] = e;
        gen_exponents(var + 1, remaining - e, cur, out);
    }
    cur[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(int m, int n, int degree) : m_(m), n_(n), degree_(degree) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix shape must be positive");
    if (degree < 0) throw std::invalid_argument("negative degree");
    Exponents cur(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
    if (cur.empty()) throw std::invalid_argument("no variables");
    gen_exponents(0, degree, cur, exponents_);
    weights_.reserve(exponents_.size());
    for (int idx = 0; idx < size(); ++idx) {
        weights_.push_back(monomial_weight(exponents_[static_cast<std::size_t>(idx)], m, n));
        by_weight_[weights_.back()].push_back(idx);
    }
}

int MonomialBasis::index_of(const Exponents& e) const {
    // exponents_ is sorted lexicographically descending
    auto it = std::lower_bound(exponents_.begin(), exponents_.end(), e,
                               [](const Exponents& a, const Exponents& b) { return a > b; });
    if (it == exponents_.end() || *it != e) throw std::invalid_argument("monomial not in basis");
    return static_cast<int>(it - exponents_.begin());
}

const std::vector<int>& MonomialBasis::indices_with_weight(const WeightVector& w) const {
    static const std::vector<int> kEmpty;
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? kEmpty : it->second;
}

Exponents MonomialBasis::multiplied_by_var(Exponents e, int var) {
    ++e[static_cast<std::size_t>(var)];
    return e;
}

void PolyQ::add_term(const Exponents& e, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolyQ PolyQ::operator*(const PolyQ& other) const {
    PolyQ out;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            Exponents e = e1;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

PolyQ PolyQ::operator+(const PolyQ& other) const {
    PolyQ out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

int PolyQ::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        const int d = std::accumulate(e.begin(), e.end(), 0);
        if (deg == -1) deg = d;
        if (d != deg) throw std::logic_error("polynomial is not homogeneous");
    }
    return deg;
}

PolyQ highest_weight_generator(int a, int b, int m, int n) {
    if (a < 1 || b < 1) throw std::invalid_argument("thickening parameters must be positive");
    if (a > std::min(m, n)) throw std::invalid_argument("minor size exceeds matrix shape");

    // Leibniz expansion of the leading a x a minor.
    PolyQ det;
    std::vector<int> perm(static_cast<std::size_t>(a));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t k = i + 1; k < perm.size(); ++k)
                if (perm[i] > perm[k]) ++inversions;
        Exponents e(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);
        for (int i = 0; i < a; ++i)
            e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] += 1;
        det.add_term(e, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    PolyQ power;
    power.add_term(Exponents(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0), 1);
    for (int k = 0; k < b; ++k) power = power * det;
    return power;
}

}  // namespace rectsyz
