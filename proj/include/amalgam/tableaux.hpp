#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/rational.hpp"

namespace amalgam {

inline constexpr std::size_t kDefaultSytCap = 10'000;

/// A partition: weakly decreasing positive row lengths.
class Shape {
public:
    explicit Shape(std::vector<std::size_t> parts);
    /// n^m: `rows` rows of `cols` boxes.
    static Shape rectangle(std::size_t rows, std::size_t cols);

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t num_rows() const { return parts_.size(); }
    std::size_t num_cols() const { return parts_.front(); }
    std::size_t size() const;
    bool is_rectangular() const;
    Shape conjugate() const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<std::size_t> parts_;
};

/// One-line notation: perm[k - 1] is the image of k. Values are 1..N.
using Permutation = std::vector<std::uint32_t>;

/// Sign of a permutation, via its cycle decomposition. Throws ArgumentError if not a bijection.
int permutation_sign(const Permutation& perm);

/// A filling of a Young diagram with 1..N, each once. Not necessarily standard.
class Tableau {
public:
    using Rows = std::vector<std::vector<std::uint32_t>>;

    explicit Tableau(Rows rows);

    const Shape& shape() const { return shape_; }
    const Rows& rows() const { return rows_; }
    std::size_t size() const { return shape_.size(); }
    std::uint32_t at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }

    bool is_standard() const;
    /// Entries read down column 1, then column 2, and so on.
    std::vector<std::uint32_t> column_word() const;

    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

private:
    Shape shape_;
    Rows rows_;
};

/// 1_{n^m}: cell (i, j) (0-based) holds 1 + i + j*rows.
Tableau trivial_tableau(std::size_t rows, std::size_t cols);

/// Number of standard tableaux of shape n^m by the hook length formula.
Integer syt_count(std::size_t rows, std::size_t cols);

/// The standard tableaux of a rectangular shape in canonical order: ascending column word.
class TableauBasis {
public:
    TableauBasis(std::size_t rows, std::size_t cols, std::vector<Tableau> tableaux);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return list_.size(); }
    const Tableau& operator[](std::size_t i) const { return list_[i]; }
    const std::vector<Tableau>& tableaux() const { return list_; }
    std::optional<std::size_t> index_of(const Tableau& t) const;

    auto begin() const { return list_.begin(); }
    auto end() const { return list_.end(); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Tableau> list_;
    std::map<std::vector<std::uint32_t>, std::size_t> index_;
};

/// All standard tableaux of shape n^m (m = rows, n = cols), by backtracking in column-major cell
/// order. Throws ResourceError when the count exceeds `cap`.
TableauBasis enumerate_syt(std::size_t rows, std::size_t cols, std::size_t cap = kDefaultSytCap);

/// Reflection across the main diagonal.
Tableau conjugate(const Tableau& t);

/// ε(t): sign of the permutation carrying 1_λ to t, i.e. of t's column word.
int sign(const Tableau& t);

/// Cell-wise relabelling e -> sigma(e). Throws ShapeError on a size mismatch.
Tableau apply_perm(const Permutation& sigma, const Tableau& t);

/// Entries of column `i` top to bottom, in positional order (0-based index).
std::vector<std::uint32_t> column(const Tableau& t, std::size_t i);
/// Entries of row `j` left to right, in positional order (0-based index).
std::vector<std::uint32_t> row(const Tableau& t, std::size_t j);

/// Per-row entry sums, top row first.
std::vector<std::uint64_t> row_sum_key(const Tableau& t);

/// Dominance of entry truncations: for every k, the shape of the entries <= k in `a`
/// dominates that of `b`. Throws ShapeError if the shapes differ.
bool dominates(const Tableau& a, const Tableau& b);

/// Text form: rows separated by ';', entries by ','. Example: "1,4;2,5;3,6".
std::string to_text(const Tableau& t);
Tableau parse_tableau(std::string_view text);

}  // namespace amalgam
