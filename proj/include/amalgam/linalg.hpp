#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "amalgam/matrix.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/rational.hpp"

namespace amalgam {

// Exact determinants. All throw DimensionError on non-square input.

/// Fraction-free single-step (Bareiss) elimination with row pivoting.
Integer det(const Matrix<Integer>& m);

/// Integer-valued input goes through Bareiss; anything else through rational elimination.
Rational det(const Matrix<Rational>& m);

/// Minor expansion for n <= 6, fraction-free elimination with exact division above.
Poly det(const Matrix<Poly>& m);

/// Laplace expansion by rows over column subsets (memoised; O(n 2^n) products).
Poly det_laplace(const Matrix<Poly>& m);

/// Bareiss elimination in the polynomial ring; each division is exact.
Poly det_bareiss(const Matrix<Poly>& m);

/// Determinant of the square matrix whose i-th row is row `rows[i]` of `m` (0-based, order
/// significant, duplicates give zero). The list length must equal m.cols().
template <class T>
T det_minor_ordered(const Matrix<T>& m, std::span<const std::size_t> rows) {
    if (rows.size() != m.cols()) {
        throw DimensionError("minor needs " + std::to_string(m.cols()) + " row indices, got " +
                             std::to_string(rows.size()));
    }
    return det(m.select_rows(rows));
}

/// Exact inverse by Gauss-Jordan elimination. Throws SingularError.
Matrix<Rational> inverse(const Matrix<Rational>& m);

/// Basis of the right kernel {c : m c = 0}, one vector per free column of the reduced row
/// echelon form (that column's coordinate is 1). Empty for full column rank.
std::vector<std::vector<Rational>> right_kernel(const Matrix<Rational>& m);

std::size_t rank(const Matrix<Rational>& m);

}  // namespace amalgam
