#include "amalgam/fayers.hpp"

#include <algorithm>

#include "amalgam/errors.hpp"
#include "amalgam/linalg.hpp"

namespace amalgam {

int pairing(const Tableau& alpha, const Tableau& beta) {
    const auto& sa = alpha.shape();
    if (!sa.is_rectangular() || beta.shape() != sa.conjugate()) {
        throw ShapeError("pairing needs tableaux of conjugate rectangular shapes");
    }
    const std::size_t m = sa.num_rows();
    const std::size_t n = sa.num_cols();
    const std::size_t total = alpha.size();
    // column index of each entry in alpha and in beta
    std::vector<std::size_t> col_a(total + 1);
    std::vector<std::size_t> col_b(total + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) col_a[alpha.at(i, j)] = j;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) col_b[beta.at(i, j)] = j;
    // γ[i][j] collects the entries lying in column j of alpha and column i of beta
    Tableau::Rows gamma(m, std::vector<std::uint32_t>(n, 0));
    for (std::uint32_t v = 1; v <= total; ++v) {
        auto& cell = gamma[col_b[v]][col_a[v]];
        if (cell != 0) return 0;  // two entries share a column of alpha and a column of beta
        cell = v;
    }
    // m*n entries landed in m*n distinct cells, so every intersection is a singleton
    return sign(Tableau(std::move(gamma)));
}

BasisMatrix fayers_matrix(std::size_t m, std::size_t n, std::size_t cap) {
    TableauBasis basis = enumerate_syt(m, n, cap);
    std::vector<Tableau> cols;
    cols.reserve(basis.size());
    for (const auto& a : basis) cols.push_back(conjugate(a));
    Matrix<std::int64_t> f(basis.size(), basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) f(i, j) = pairing(basis[i], cols[j]);
    return BasisMatrix{m, n, std::move(basis), std::move(cols), std::move(f)};
}

BasisMatrix phi_from_fayers(const BasisMatrix& fayers) {
    const std::size_t k = fayers.row_basis.size();
    std::vector<int> eps_left(k);
    std::vector<int> eps_right(k);
    for (std::size_t i = 0; i < k; ++i) {
        eps_left[i] = sign(fayers.row_basis[i]);
        eps_right[i] = sign(conjugate(fayers.col_basis[i]));
    }
    Matrix<Rational> efe(k, k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) efe(i, j) = eps_left[i] * fayers.entries(i, j) * eps_right[j];
    if (abs(det(efe)) != 1) throw ConsistencyError("E F E is not unimodular");
    const Matrix<Rational> inv_t = inverse(efe).transpose();
    Matrix<std::int64_t> phi(k, k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Rational& q = inv_t(i, j);
            if (!is_integral(q) || !q.get_num().fits_slong_p()) throw ConsistencyError("non-integral Phi entry");
            phi(i, j) = q.get_num().get_si();
        }
    }
    return BasisMatrix{fayers.m, fayers.n, fayers.row_basis, fayers.col_basis, std::move(phi)};
}

BasisMatrix phi_matrix(std::size_t m, std::size_t n, std::size_t cap) {
    return phi_from_fayers(fayers_matrix(m, n, cap));
}

Integer hook_product(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw ShapeError("hook product needs m, n >= 1");
    if (m < n) std::swap(m, n);
    Integer h = 1;
    for (std::size_t i = 0; i < n; ++i) {
        h *= factorial(static_cast<unsigned>(m + i));
        h /= factorial(static_cast<unsigned>(i));
    }
    return h;
}

}  // namespace amalgam
