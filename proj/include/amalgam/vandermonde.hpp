#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amalgam/amalgam.hpp"
#include "amalgam/matrix.hpp"
#include "amalgam/poly.hpp"
#include "amalgam/rational.hpp"
#include "amalgam/tableaux.hpp"

namespace amalgam {

enum class MonomialOrder {
    kron,    ///< mixed radix, first coordinate fastest
    deglex,  ///< total degree, ties by descending lexicographic exponent
};

struct VdmSpec {
    std::vector<std::size_t> degrees;  ///< N_1..N_r, each >= 1
    std::optional<std::size_t> split;  ///< k with 1 <= k < r
    MonomialOrder order = MonomialOrder::kron;

    /// Throws ShapeError for an empty degree list, a zero degree or a split out of range.
    void validate() const;
    std::size_t dimension() const { return degrees.size(); }
    /// ∏ N_i, the number of monomials (and of points in the square case).
    std::size_t count() const;
    /// m = N_1..N_k and n = N_{k+1}..N_r; requires a split.
    std::size_t m() const;
    std::size_t n() const;
    VdmSpec first() const;
    VdmSpec second() const;
};

/// Points: one vector of r coordinates per row.
template <class T>
using PointSet = std::vector<std::vector<T>>;

std::vector<Exponent> monomials(const VdmSpec& spec);

/// Row i holds the monomials evaluated at point i. Any number of points; each must have
/// spec.dimension() coordinates (ShapeError otherwise).
template <class T>
Matrix<T> build_vdm(const VdmSpec& spec, const PointSet<T>& pts);

/// The pair whose amalgam is the Vandermonde matrix: A over the first k coordinates, B over the
/// rest. Needs kron order (ArgumentError otherwise) and ∏N_i points (ShapeError).
template <class T>
AmalgamPair<T> vdm_amalgam(const VdmSpec& spec, const PointSet<T>& pts);

/// Expansion over pairs of standard tableaux. Each term's beta has shape n^m; its rows index the
/// minors of the second factor.
template <class T>
TermExpansion<T> vdm_expand_tableaux(const VdmSpec& spec, const PointSet<T>& pts, std::size_t cap = kDefaultSytCap);

/// Permutation-sum form divided by the hook product.
template <class T>
T vdm_expand_perm(const VdmSpec& spec, const PointSet<T>& pts, const PermSumOptions& opts = {});

/// Points x1..x_count, y1.., z1.. over one universe (letters x, y, z, w, then c5, c6, ...).
PointSet<Poly> symbolic_points(std::size_t r, std::size_t count);
std::string coordinate_letter(std::size_t c);

/// Factored text of one expansion term, e.g. "(x2-x1)(x4-x3)(y3-y1)(y4-y2)". Univariate factors
/// are printed as products of differences; a multivariate factor as V[1,2,3,4](x,y).
std::string factored_term(const VdmSpec& spec, const Tableau& alpha, const Tableau& beta);

/// Signed sum of factored terms, zero terms (by value) omitted.
template <class T>
std::string factored_expansion(const VdmSpec& spec, const TermExpansion<T>& e);

// Homogeneous Vandermonde matrices.

/// Monomials of total degree <= N in r variables: ascending degree, descending lex within one.
std::vector<Exponent> hom_monomials(std::size_t N, std::size_t r);
std::size_t hom_count(std::size_t N, std::size_t r);

/// Needs exactly hom_count(N, r) points (ShapeError).
template <class T>
Matrix<T> build_vdm_hom(std::size_t N, std::size_t r, const PointSet<T>& pts);

/// Exact basis of {c : M c = 0}; paired with hom_monomials each vector is a polynomial vanishing
/// at every point.
std::vector<std::vector<Rational>> hom_kernel(const Matrix<Rational>& m);

/// Coefficient extraction from the symbolic amalgam of two (mn x m), (mn x n) matrices with
/// entries a{i}_{j}, b{i}_{j}. Each extracted variable has degree one; every row that loses a
/// variable must lose exactly one a and one b entry. The surviving entries are replaced using
/// `substitution` (polynomials over `target`).
struct Extraction {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::string> variables;
    std::map<std::string, Poly, std::less<>> substitution;
    VarSetPtr target;
};

struct ExtractedTerm {
    Rational coef;
    Tableau alpha;
    Tableau beta;
    std::vector<Poly> factors;  ///< non-constant factors, one per surviving minor
    Poly value;                 ///< coef times the product of factors
};

struct ExtractedExpansion {
    std::vector<ExtractedTerm> terms;  ///< nonzero terms only
    Poly total;
};

/// Rows and columns of the amalgam that survive the extraction, and the sign relating the
/// coefficient to the determinant of that minor.
struct ExtractionMinor {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    int sign = 1;
};

ExtractionMinor extraction_minor(const Extraction& ex);

/// Term-by-term extraction on the tableau expansion, then substitution.
ExtractedExpansion hom_via_amalgam_minor(const Extraction& ex, std::size_t cap = kDefaultSytCap);

/// The same coefficient computed directly: sign times det of the substituted minor.
Poly extraction_direct(const Extraction& ex);

/// Applies a substitution (e.g. x2 -> x1) to every factor and drops vanishing terms.
ExtractedExpansion specialize(const ExtractedExpansion& e, const std::map<std::string, Poly, std::less<>>& values);

/// Text "c * (f1)(f2)... + ..." of an extracted expansion.
std::string to_text(const ExtractedExpansion& e);

/// Six points p_i = (x_i, y_i) in two variable families; the conic determinant from a = (1,x,x^2),
/// b = (1,y,y^2) after removing rows 7..9 and the columns of a_{i,2}b_{i,3}, a_{i,3}b_{i,2},
/// a_{i,3}b_{i,3}.
Extraction separated_conic_extraction();
/// a = b = (1, x, y), removing the repeated columns x, y, xy. With `sixth_at_origin` x6 = y6 = 0.
Extraction mixed_conic_extraction(bool sixth_at_origin);

extern template Matrix<Rational> build_vdm(const VdmSpec&, const PointSet<Rational>&);
extern template Matrix<Poly> build_vdm(const VdmSpec&, const PointSet<Poly>&);
extern template AmalgamPair<Rational> vdm_amalgam(const VdmSpec&, const PointSet<Rational>&);
extern template AmalgamPair<Poly> vdm_amalgam(const VdmSpec&, const PointSet<Poly>&);
extern template TermExpansion<Rational> vdm_expand_tableaux(const VdmSpec&, const PointSet<Rational>&, std::size_t);
extern template TermExpansion<Poly> vdm_expand_tableaux(const VdmSpec&, const PointSet<Poly>&, std::size_t);
extern template Rational vdm_expand_perm(const VdmSpec&, const PointSet<Rational>&, const PermSumOptions&);
extern template Poly vdm_expand_perm(const VdmSpec&, const PointSet<Poly>&, const PermSumOptions&);
extern template std::string factored_expansion(const VdmSpec&, const TermExpansion<Rational>&);
extern template std::string factored_expansion(const VdmSpec&, const TermExpansion<Poly>&);
extern template Matrix<Rational> build_vdm_hom(std::size_t, std::size_t, const PointSet<Rational>&);
extern template Matrix<Poly> build_vdm_hom(std::size_t, std::size_t, const PointSet<Poly>&);

}  // namespace amalgam
