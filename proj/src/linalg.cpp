#include "amalgam/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace amalgam {

namespace {

void require_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) {
        throw DimensionError("determinant of a non-square " + std::to_string(rows) + "x" +
                             std::to_string(cols) + " matrix");
    }
}

// Returns false if column k has no nonzero entry at or below row k.
template <class T>
bool pivot_down(Matrix<T>& a, std::size_t k, int& sign) {
    if (a(k, k) != 0) return true;
    for (std::size_t i = k + 1; i < a.rows(); ++i) {
        if (a(i, k) != 0) {
            a.swap_rows(i, k);
            sign = -sign;
            return true;
        }
    }
    return false;
}

bool pivot_down(Matrix<Poly>& a, std::size_t k, int& sign) {
    if (!a(k, k).is_zero()) return true;
    for (std::size_t i = k + 1; i < a.rows(); ++i) {
        if (!a(i, k).is_zero()) {
            a.swap_rows(i, k);
            sign = -sign;
            return true;
        }
    }
    return false;
}

}  // namespace

Integer det(const Matrix<Integer>& m) {
    require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Matrix<Integer> a = m;
    Integer prev = 1;
    int sign = 1;
    Integer t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!pivot_down(a, k, sign)) return 0;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational det(const Matrix<Rational>& m) {
    require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    const bool integral = std::all_of(m.entries().begin(), m.entries().end(),
                                      [](const Rational& q) { return q.get_den() == 1; });
    if (integral) {
        return Rational(det(m.map([](const Rational& q) { return Integer(q.get_num()); })));
    }
    Matrix<Rational> a = m;
    Rational out = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (!pivot_down(a, k, sign)) return 0;
        out *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return sign * out;
}

Poly det_laplace(const Matrix<Poly>& m) {
    require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    if (n > 20) throw ResourceError("minor expansion limited to 20x20");
    // minors[S] = det of the first |S| rows restricted to the columns in S.
    std::vector<Poly> minors(std::size_t{1} << n);
    minors[0] = Poly(1);
    for (std::uint32_t set = 0; set + 1 < minors.size(); ++set) {
        if (minors[set].is_zero()) continue;
        const std::size_t r = static_cast<std::size_t>(std::popcount(set));
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint32_t bit = 1u << c;
            if ((set & bit) || m(r, c).is_zero()) continue;
            // sign (-1)^(number of already-used columns to the right of c)
            const int greater = std::popcount(set >> (c + 1));
            Poly term = m(r, c) * minors[set];
            if (greater % 2) {
                minors[set | bit] -= term;
            } else {
                minors[set | bit] += term;
            }
        }
    }
    return minors.back();
}

Poly det_bareiss(const Matrix<Poly>& m) {
    require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    Matrix<Poly> a = m;
    Poly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (!pivot_down(a, k, sign)) return Poly(0) * a(0, 0);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t.divide_exact(prev);
            }
            a(i, k) = Poly(0);
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

Poly det(const Matrix<Poly>& m) {
    require_square(m.rows(), m.cols());
    return m.rows() <= 6 ? det_laplace(m) : det_bareiss(m);
}

Matrix<Rational> inverse(const Matrix<Rational>& m) {
    if (!m.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<Rational> a = m;
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularError("matrix is singular");
        a.swap_rows(p, k);
        inv.swap_rows(p, k);
        const Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(Matrix<Rational>& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, row);
        const Rational piv = a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) /= piv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> right_kernel(const Matrix<Rational>& m) {
    Matrix<Rational> a = m;
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Matrix<Rational>& m) {
    Matrix<Rational> a = m;
    return rref(a).size();
}

}  // namespace amalgam
