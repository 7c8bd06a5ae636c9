#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "amalgam/fayers.hpp"
#include "amalgam/matrix.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/random.hpp"
#include "amalgam/rational.hpp"
#include "amalgam/tableaux.hpp"

namespace amalgam {

inline constexpr std::size_t kDefaultPermCap = 10;

/// A (mn x m) and B (mn x n), the two inputs of an amalgamated product.
template <class T>
struct AmalgamPair {
    std::size_t m = 0;
    std::size_t n = 0;
    Matrix<T> a;
    Matrix<T> b;
};

/// Infers m = a.cols(), n = b.cols() and checks a.rows() == b.rows() == m*n.
template <class T>
AmalgamPair<T> make_amalgam_pair(Matrix<T> a, Matrix<T> b) {
    const std::size_t m = a.cols();
    const std::size_t n = b.cols();
    if (m == 0 || n == 0 || a.rows() != m * n || b.rows() != m * n) {
        throw ShapeError("amalgam needs A of size mn x m and B of size mn x n");
    }
    return AmalgamPair<T>{m, n, std::move(a), std::move(b)};
}

/// Entries a{i}_{j} and b{i}_{j} (1-based) as independent indeterminates over one universe.
AmalgamPair<Poly> symbolic_pair(std::size_t m, std::size_t n);

/// Integer entries uniform in [-9, 9], drawn A row-major then B row-major.
AmalgamPair<Rational> random_pair(std::size_t m, std::size_t n, SeededEntries& rng);

/// A⋆B: row r is the Kronecker product of row r of A with row r of B, with the A index varying
/// fastest: column j + k*m (0-based) holds a_{r,j} * b_{r,k}.
template <class T>
Matrix<T> star(const AmalgamPair<T>& p);

/// Embeds C ⊗ D: A stacks n copies of C; B repeats each row of D m times in turn.
template <class T>
AmalgamPair<T> kron_embed(const Matrix<T>& c, const Matrix<T>& d);

/// ∏ over the columns of t of det M_{col}, rows taken in positional order (labels are 1-based
/// row numbers). Every column of t must have M.cols() entries.
template <class T>
T tableau_minor_product(const Matrix<T>& m, const Tableau& t);

template <class T>
struct ExpansionTerm {
    std::int64_t coef = 0;
    Tableau alpha;
    Tableau beta;
    T value;  ///< A_alpha * B_beta, without the coefficient
};

template <class T>
struct TermExpansion {
    std::vector<ExpansionTerm<T>> terms;
    T total;
};

/// det(A⋆B) as Σ Φ_{α,β} A_α B_β over the nonzero entries of Φ. Uses phi_matrix(m, n) unless a
/// coefficient matrix is supplied (the CLI's negative control passes a corrupted one).
template <class T>
TermExpansion<T> phi_expansion(const AmalgamPair<T>& p, const BasisMatrix* phi = nullptr,
                               std::size_t cap = kDefaultSytCap);

struct PermSumOptions {
    std::size_t perm_cap = kDefaultPermCap;  ///< largest mn accepted
    unsigned threads = 1;
};

/// Σ_{σ ∈ Σ_mn} ε(σ) A_{σα} B_{σβ}. Columns of the relabelled tableaux keep positional order.
/// Throws ResourceError when mn exceeds the permutation cap.
template <class T>
T perm_sum(const AmalgamPair<T>& p, const Tableau& alpha, const Tableau& beta, const PermSumOptions& opts = {});

/// The integer κ with perm_sum = κ · det(A⋆B), measured on random integer pairs. Two draws with
/// nonzero determinant must agree (ConsistencyError otherwise); 20 consecutive singular draws
/// raise DegenerateInputError.
Integer kappa(std::size_t m, std::size_t n, const Tableau& alpha, const Tableau& beta, std::uint64_t seed,
              const PermSumOptions& opts = {});

extern template Matrix<Rational> star(const AmalgamPair<Rational>&);
extern template Matrix<Poly> star(const AmalgamPair<Poly>&);
extern template AmalgamPair<Rational> kron_embed(const Matrix<Rational>&, const Matrix<Rational>&);
extern template AmalgamPair<Poly> kron_embed(const Matrix<Poly>&, const Matrix<Poly>&);
extern template Rational tableau_minor_product(const Matrix<Rational>&, const Tableau&);
extern template Poly tableau_minor_product(const Matrix<Poly>&, const Tableau&);
extern template TermExpansion<Rational> phi_expansion(const AmalgamPair<Rational>&, const BasisMatrix*,
                                                      std::size_t);
extern template TermExpansion<Poly> phi_expansion(const AmalgamPair<Poly>&, const BasisMatrix*, std::size_t);
extern template Rational perm_sum(const AmalgamPair<Rational>&, const Tableau&, const Tableau&,
                                  const PermSumOptions&);
extern template Poly perm_sum(const AmalgamPair<Poly>&, const Tableau&, const Tableau&, const PermSumOptions&);

}  // namespace amalgam
