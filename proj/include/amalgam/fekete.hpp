#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "amalgam/rational.hpp"

namespace amalgam::fekete {

using Complex = std::complex<double>;

struct Interval {
    double a = 0;
    double b = 0;
};

struct Disk {
    Complex center;
    double radius = 0;
};

/// Finite set of points in C^dim.
struct Cloud {
    std::vector<std::vector<Complex>> points;
};

struct CompactSet;

struct Product {
    std::vector<CompactSet> factors;
};

struct CompactSet {
    std::variant<Interval, Disk, Cloud, Product> kind;

    /// Throws DomainError for empty or unbounded descriptors.
    void validate() const;
    std::size_t dimension() const;
};

CompactSet interval(double a, double b);
CompactSet disk(Complex center, double radius);
CompactSet product(std::vector<CompactSet> factors);

/// {"kind": "interval", "a": -2, "b": 2}, {"kind": "disk", "center": [re, im], "radius": 1},
/// {"kind": "product", "factors": [...]}, {"kind": "cloud", "points": [[z, ...], ...]}.
/// Coordinates are numbers or [re, im] pairs.
CompactSet from_json(const nlohmann::json& j);
nlohmann::json to_json(const CompactSet& k);

/// D = (N_1...N_r / 2)(N_1 + ... + N_r - r), the total degree of the Vandermonde determinant.
Rational degree_D(const std::vector<std::size_t>& degrees);

/// log|det V| for points in C^r under the kron monomial order of `degrees` (LU with partial
/// pivoting). -infinity for a singular matrix.
double log_abs_det(const std::vector<std::size_t>& degrees, const std::vector<std::vector<Complex>>& points);

struct SearchOptions {
    std::size_t budget = 12;  ///< exchange sweeps per start; 4 per refinement level
    std::uint64_t seed = 0;
    std::size_t starts = 4;
    unsigned threads = 1;
};

struct SearchResult {
    std::vector<std::vector<Complex>> points;
    double log_det = 0;  ///< log|det V| at `points`
};

/// Multistart coordinate-exchange ascent of |det V| over K. Deterministic given the descriptor,
/// degrees and options; a larger budget never gives a smaller result for the same seed.
SearchResult fekete_search(const CompactSet& k, const std::vector<std::size_t>& degrees, const SearchOptions& opts);

struct EstimateRow {
    std::size_t N = 0;
    std::vector<std::size_t> degrees;
    Rational D;
    double log_det = 0;
    double estimate = 0;  ///< |det V|^(1/D)
};

struct TransfiniteEstimate {
    std::vector<Rational> weights;
    std::vector<EstimateRow> rows;
    SearchResult best;  ///< configuration for the last admissible N
    double estimate() const { return rows.back().estimate; }
};

/// Runs the search for every N in `n_list` with all w_i N integral and D > 0. Throws
/// ArgumentError when none qualifies and ShapeError when the weight count differs from the
/// dimension of K. Each N uses the seed derived from (opts.seed, N).
TransfiniteEstimate transfinite_estimate(const CompactSet& k, const std::vector<Rational>& w,
                                         const std::vector<std::size_t>& n_list, const SearchOptions& opts);

struct MultiplicativityReport {
    std::size_t N = 0;
    double lhs = 0;  ///< estimate on K1 x K2
    double t1 = 0;
    double t2 = 0;
    Rational exponent1;  ///< |w'| / |w|
    Rational exponent2;
    double rhs = 0;  ///< t1^exponent1 * t2^exponent2
    double product_log_det = 0;
    double product_estimate = 0;  ///< normalised |det V| at the paired factor configurations
    bool exact_identity = false;  ///< det V = det(V')^n det(V'')^m on the dyadic-snapped points
    bool exact_complex = false;   ///< identity checked as |det|^2 because some point is non-real
    bool exact_nonzero = false;
};

/// Estimates t_w(K1 x K2), t_w'(K1) and t_w''(K2) independently at one N and checks the paired
/// configuration z_{i + (j-1)m} = (z'_i, z''_j) in exact arithmetic.
MultiplicativityReport multiplicativity_check(const CompactSet& k1, const CompactSet& k2, const std::vector<Rational>& w,
                                              std::size_t N, const SearchOptions& opts);

/// Exact check of det V(paired) = det(V')^n det(V'')^m with each point rounded to a multiple of
/// 2^-16. Returns {holds, complex_mode, nonzero}.
struct ExactCheck {
    bool holds = false;
    bool complex_mode = false;
    bool nonzero = false;
};
ExactCheck exact_product_identity(const std::vector<std::size_t>& deg1, const std::vector<std::vector<Complex>>& p1,
                                  const std::vector<std::size_t>& deg2, const std::vector<std::vector<Complex>>& p2);

/// Pairs factor configurations: point i + j*m is (p1[i], p2[j]).
std::vector<std::vector<Complex>> pair_configurations(const std::vector<std::vector<Complex>>& p1,
                                                      const std::vector<std::vector<Complex>>& p2);

/// "N,D,log_abs_det,estimate" header plus one line per row.
std::string to_csv(const TransfiniteEstimate& e);

}  // namespace amalgam::fekete
