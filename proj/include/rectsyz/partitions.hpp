#ifndef RECTSYZ_PARTITIONS_HPP
#define RECTSYZ_PARTITIONS_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace rectsyz {

/// Integer partition: weakly decreasing positive parts, trailing zeros never stored.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const noexcept { return static_cast<int>(parts_.size()); }
    long long size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    /// 0-based part access; indices past the length read as 0.
    int part(int i) const noexcept;
    int first_part() const noexcept { return part(0); }
    const std::vector<int>& parts() const noexcept { return parts_; }

    Partition conjugate() const;
    bool contains(const Partition& mu) const noexcept;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;  // "(3,2,1)", "()" for empty

private:
    std::vector<int> parts_;
};

/// Dense-free univariate polynomial with integer coefficients (no stored zeros).
/// Arithmetic throws std::overflow_error instead of wrapping silently.
class IntPolynomial {
public:
    IntPolynomial() = default;
    static IntPolynomial constant(long long c);

    void add_term(int exponent, long long coeff);
    long long coeff(int exponent) const noexcept;
    int degree() const noexcept;  // -1 for the zero polynomial
    bool is_zero() const noexcept { return coeffs_.empty(); }

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;

    IntPolynomial shifted(int k) const;    // multiply by w^k
    IntPolynomial in_square() const;       // substitute w -> w^2
    long long evaluate_at_one() const;

    const std::map<int, long long>& coeffs() const noexcept { return coeffs_; }
    std::string to_string(const std::string& var = "w") const;

    bool operator==(const IntPolynomial&) const = default;

private:
    std::map<int, long long> coeffs_;
};

/// All partitions of the given size with at most max_parts parts, each at most
/// max_part, listed with first parts decreasing.
std::vector<Partition> partitions_of_size(long long size, int max_parts, int max_part);

/// All partitions fitting in an r x s box, graded by size and within a grade
/// ordered with first parts decreasing. Count is binomial(r+s, r).
std::vector<Partition> enumerate_in_rectangle(int r, int s);

/// P(r,s;i): number of partitions of i inside the r x s box.
long long count_in_rectangle(int r, int s, long long i);

/// Gauss polynomial: coefficient of w^i is count_in_rectangle(r,s,i).
IntPolynomial gauss_polynomial(int r, int s);

/// The partition (s+alpha_1, ..., s+alpha_r, beta_1, beta_2, ...): an r x s
/// rectangle with alpha attached to the right and beta below.
/// Requires l(alpha) <= r and beta_1 <= s.
Partition lambda_rect(int r, int s, const Partition& alpha, const Partition& beta);

long long binomial(long long n, long long k);

}  // namespace rectsyz

#endif
