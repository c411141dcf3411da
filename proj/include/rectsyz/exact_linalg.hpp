#ifndef RECTSYZ_EXACT_LINALG_HPP
#define RECTSYZ_EXACT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace rectsyz {

using BigInt = boost::multiprecision::cpp_int;

/// Rank of an integer matrix, exactly. Runs fraction-free (division-exact)
/// Gaussian elimination in 64-bit arithmetic and transparently redoes the
/// computation with arbitrary-precision integers if an intermediate would
/// overflow. Consumes its argument.
long long exact_rank(std::vector<std::vector<long long>> matrix);

/// Fraction-free elimination over arbitrary-precision integers. Destructive.
long long exact_rank_big(std::vector<std::vector<BigInt>>& matrix);

/// Canonical reduced row echelon basis of the row span of an integer matrix:
/// the unique RREF over the rationals, with each row scaled to a primitive
/// integer vector with positive pivot. Rows come back sorted by pivot column.
std::vector<std::vector<BigInt>> integer_rref(std::vector<std::vector<BigInt>> rows);

/// True iff v lies in the span of the given echelon rows (as from integer_rref).
bool in_row_span(const std::vector<std::vector<BigInt>>& rref_rows, std::vector<BigInt> v);

}  // namespace rectsyz

#endif
