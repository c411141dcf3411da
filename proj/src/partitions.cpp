#include "rectsyz/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rectsyz {

namespace {

void validate_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::vector<int> normalized(std::vector<int> parts) {
    validate_parts(parts);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial arithmetic");
    return r;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(normalized(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(normalized(std::move(parts))) {}

long long Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const noexcept {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(first_part()), 0);
    for (int j = 0; j < first_part(); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j + 1) ++count;
        out[static_cast<std::size_t>(j)] = count;
    }
    Partition result;
    result.parts_ = std::move(out);  // already weakly decreasing, no zeros
    return result;
}

bool Partition::contains(const Partition& mu) const noexcept {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < length(); ++i) {
        if (i) os << ',';
        os << parts_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

IntPolynomial IntPolynomial::constant(long long c) {
    IntPolynomial p;
    p.add_term(0, c);
    return p;
}

void IntPolynomial::add_term(int exponent, long long coeff) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) coeffs_.erase(it);
    }
}

long long IntPolynomial::coeff(int exponent) const noexcept {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

int IntPolynomial::degree() const noexcept {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    IntPolynomial out = *this;
    for (auto [e, c] : other.coeffs_) out.add_term(e, c);
    return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    IntPolynomial out;
    for (auto [e1, c1] : coeffs_)
        for (auto [e2, c2] : other.coeffs_) out.add_term(e1 + e2, checked_mul(c1, c2));
    return out;
}

IntPolynomial IntPolynomial::shifted(int k) const {
    IntPolynomial out;
    for (auto [e, c] : coeffs_) out.add_term(e + k, c);
    return out;
}

IntPolynomial IntPolynomial::in_square() const {
    IntPolynomial out;
    for (auto [e, c] : coeffs_) out.add_term(2 * e, c);
    return out;
}

long long IntPolynomial::evaluate_at_one() const {
    long long sum = 0;
    for (auto [e, c] : coeffs_) sum = checked_add(sum, c);
    return sum;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : coeffs_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        long long a = c < 0 ? -c : c;
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a;
            os << var;
            if (e != 1) os << '^' << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

void gen_partitions(long long size, int max_parts, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (size == 0) {
        out.push_back(stack.empty() ? Partition{} : Partition(stack));
        return;
    }
    if (max_parts == 0) return;
    int hi = static_cast<int>(std::min<long long>(max_part, size));
    for (int p = hi; p >= 1; --p) {
        stack.push_back(p);
        gen_partitions(size - p, max_parts - 1, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of_size(long long size, int max_parts, int max_part) {
    if (size < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(size, std::max(max_parts, 0), std::max(max_part, 0), stack, out);
    return out;
}

std::vector<Partition> enumerate_in_rectangle(int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("negative rectangle side");
    std::vector<Partition> out;
    for (long long i = 0; i <= static_cast<long long>(r) * s; ++i) {
        auto grade = partitions_of_size(i, r, s);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

long long count_in_rectangle(int r, int s, long long i) {
    if (r < 0 || s < 0) throw std::invalid_argument("negative rectangle side");
    if (i < 0 || i > static_cast<long long>(r) * s) return 0;
    return gauss_polynomial(r, s).coeff(static_cast<int>(i));
}

IntPolynomial gauss_polynomial(int r, int s) {
    if (r < 0 || s < 0) throw std::invalid_argument("negative rectangle side");
    // G(r,s) = G(r-1,s) + w^r G(r,s-1): split on whether the partition has r parts.
    std::vector<IntPolynomial> column(static_cast<std::size_t>(r) + 1);
    for (int rr = 0; rr <= r; ++rr) column[static_cast<std::size_t>(rr)] = IntPolynomial::constant(1);
    for (int ss = 1; ss <= s; ++ss) {
        for (int rr = 1; rr <= r; ++rr) {
            column[static_cast<std::size_t>(rr)] =
                column[static_cast<std::size_t>(rr) - 1] + column[static_cast<std::size_t>(rr)].shifted(rr);
        }
    }
    return column[static_cast<std::size_t>(r)];
}

Partition lambda_rect(int r, int s, const Partition& alpha, const Partition& beta) {
    if (r < 1 || s < 1) throw std::invalid_argument("lambda_rect needs a nonempty rectangle");
    if (alpha.length() > r) throw std::invalid_argument("lambda_rect: alpha has more than r parts");
    if (beta.first_part() > s) throw std::invalid_argument("lambda_rect: beta has parts wider than s");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(r) + static_cast<std::size_t>(beta.length()));
    for (int i = 0; i < r; ++i) parts.push_back(s + alpha.part(i));
    for (int i = 0; i < beta.length(); ++i) parts.push_back(beta.part(i));
    return Partition(std::move(parts));
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        // exact at every step: result * (n-k+i) is divisible by i
        result = checked_mul(result, n - k + i) / i;
    }
    return result;
}

}  // namespace rectsyz
