#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "amalgam/matrix.hpp"
#include "amalgam/rational.hpp"
#include "amalgam/tableaux.hpp"

namespace amalgam {

/// Fayers number ⟨alpha, beta⟩ for alpha of shape n^m and beta of the conjugate shape m^n.
///
/// Builds the candidate γ with γ[i][j] = the single element of column j of alpha intersected
/// with column i of beta. Returns 0 if some intersection does not have exactly one element,
/// otherwise sign(γ). Throws ShapeError unless the shapes are conjugate rectangles.
int pairing(const Tableau& alpha, const Tableau& beta);

/// Rows indexed by the standard tableaux α_i of shape n^m in canonical order, columns by
/// β_i = α_i'. Entries are small integers.
struct BasisMatrix {
    std::size_t m = 0;
    std::size_t n = 0;
    TableauBasis row_basis;
    std::vector<Tableau> col_basis;
    Matrix<std::int64_t> entries;
};

/// F_{i,j} = ⟨α_i, β_j⟩.
BasisMatrix fayers_matrix(std::size_t m, std::size_t n, std::size_t cap = kDefaultSytCap);

/// Φ = (E F E)^{-T} with E_left = diag ε(α_i) and E_right = diag ε(β_j'), i.e. the sign of
/// β_j read back as a tableau of shape n^m.
BasisMatrix phi_matrix(std::size_t m, std::size_t n, std::size_t cap = kDefaultSytCap);

/// Same as phi_matrix, reusing an already computed F.
BasisMatrix phi_from_fayers(const BasisMatrix& fayers);

/// H_{m,n} = ∏_{i=0}^{n-1} (m+i)!/i! with m >= n (arguments are swapped otherwise): the hook
/// product of the m x n rectangle.
Integer hook_product(std::size_t m, std::size_t n);

}  // namespace amalgam
