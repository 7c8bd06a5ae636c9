#include "amalgam/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "amalgam/errors.hpp"

namespace amalgam {

Shape::Shape(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ShapeError("shape has no rows");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw ShapeError("shape has an empty row");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw ShapeError("shape rows must weakly decrease");
    }
}

Shape Shape::rectangle(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw ShapeError("rectangle needs at least one row and column");
    return Shape(std::vector<std::size_t>(rows, cols));
}

std::size_t Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

bool Shape::is_rectangular() const { return parts_.front() == parts_.back(); }

Shape Shape::conjugate() const {
    std::vector<std::size_t> out(parts_.front(), 0);
    for (auto len : parts_)
        for (std::size_t j = 0; j < len; ++j) ++out[j];
    return Shape(std::move(out));
}

int permutation_sign(const Permutation& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    for (auto v : perm) {
        if (v < 1 || v > n || seen[v - 1]) throw ArgumentError("not a permutation of 1..n");
        seen[v - 1] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    int sign = 1;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t k = start; !seen[k]; k = perm[k] - 1) {
            seen[k] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

namespace {

Shape shape_of(const Tableau::Rows& rows) {
    std::vector<std::size_t> parts;
    for (const auto& r : rows) parts.push_back(r.size());
    return Shape(std::move(parts));
}

}  // namespace

Tableau::Tableau(Rows rows) : shape_(shape_of(rows)), rows_(std::move(rows)) {
    const std::size_t n = shape_.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& r : rows_) {
        for (auto v : r) {
            if (v < 1 || v > n || seen[v]) {
                throw ShapeError("tableau entries must be 1.." + std::to_string(n) + " each used once");
            }
            seen[v] = true;
        }
    }
}

bool Tableau::is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> Tableau::column_word() const {
    std::vector<std::uint32_t> word;
    word.reserve(size());
    for (std::size_t j = 0; j < shape_.num_cols(); ++j)
        for (std::size_t i = 0; i < rows_.size() && j < rows_[i].size(); ++i) word.push_back(rows_[i][j]);
    return word;
}

Tableau trivial_tableau(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw ShapeError("rectangle needs at least one row and column");
    Tableau::Rows cells(rows, std::vector<std::uint32_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) cells[i][j] = static_cast<std::uint32_t>(1 + i + j * rows);
    return Tableau(std::move(cells));
}

Integer syt_count(std::size_t rows, std::size_t cols) {
    // hook of cell (i, j) in an m x n rectangle: (n - j) + (m - i) - 1
    Integer hooks = 1;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) hooks *= static_cast<unsigned long>((cols - j) + (rows - i) - 1);
    return factorial(static_cast<unsigned>(rows * cols)) / hooks;
}

TableauBasis::TableauBasis(std::size_t rows, std::size_t cols, std::vector<Tableau> tableaux)
    : rows_(rows), cols_(cols), list_(std::move(tableaux)) {
    for (std::size_t i = 0; i < list_.size(); ++i) {
        if (list_[i].shape() != Shape::rectangle(rows, cols)) throw ShapeError("basis tableau has the wrong shape");
        if (!index_.emplace(list_[i].column_word(), i).second) throw ShapeError("duplicate tableau in basis");
    }
}

std::optional<std::size_t> TableauBasis::index_of(const Tableau& t) const {
    auto it = index_.find(t.column_word());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

struct SytSearch {
    std::size_t rows;
    std::size_t cols;
    std::vector<std::uint32_t> cell;  // column-major
    std::vector<bool> used;
    std::vector<Tableau>* out;

    void run(std::size_t k) {
        const std::size_t n = rows * cols;
        if (k == n) {
            Tableau::Rows t(rows, std::vector<std::uint32_t>(cols));
            for (std::size_t c = 0; c < n; ++c) t[c % rows][c / rows] = cell[c];
            out->emplace_back(std::move(t));
            return;
        }
        const std::size_t i = k % rows;
        const std::size_t j = k / rows;
        std::uint32_t lo = 0;
        if (i > 0) lo = std::max(lo, cell[k - 1]);
        if (j > 0) lo = std::max(lo, cell[k - rows]);
        // the (i+1)(j+1) cells weakly above-left hold values <= v, the (rows-i)(cols-j) cells
        // weakly below-right hold values >= v
        const auto floor = static_cast<std::uint32_t>((i + 1) * (j + 1));
        const auto ceil = static_cast<std::uint32_t>(n - (rows - i) * (cols - j) + 1);
        for (std::uint32_t v = std::max<std::uint32_t>(lo + 1, floor); v <= ceil; ++v) {
            if (used[v]) continue;
            used[v] = true;
            cell[k] = v;
            run(k + 1);
            used[v] = false;
        }
    }
};

}  // namespace

TableauBasis enumerate_syt(std::size_t rows, std::size_t cols, std::size_t cap) {
    const Integer count = syt_count(rows, cols);
    if (count > static_cast<unsigned long>(cap)) {
        throw ResourceError("shape " + std::to_string(cols) + "^" + std::to_string(rows) + " has " +
                            to_string(count) + " standard tableaux, above the cap of " + std::to_string(cap));
    }
    std::vector<Tableau> found;
    found.reserve(count.get_ui());
    SytSearch search{rows, cols, std::vector<std::uint32_t>(rows * cols, 0),
                     std::vector<bool>(rows * cols + 1, false), &found};
    search.run(0);
    return TableauBasis(rows, cols, std::move(found));
}

Tableau conjugate(const Tableau& t) {
    const auto& parts = t.shape().parts();
    Tableau::Rows out(parts.front());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts[i]; ++j) out[j].push_back(t.rows()[i][j]);
    return Tableau(std::move(out));
}

int sign(const Tableau& t) { return permutation_sign(t.column_word()); }

Tableau apply_perm(const Permutation& sigma, const Tableau& t) {
    if (sigma.size() != t.size()) {
        throw ShapeError("permutation of " + std::to_string(sigma.size()) + " letters applied to a tableau of size " +
                         std::to_string(t.size()));
    }
    Tableau::Rows out = t.rows();
    for (auto& r : out)
        for (auto& v : r) v = sigma[v - 1];
    return Tableau(std::move(out));
}

std::vector<std::uint32_t> column(const Tableau& t, std::size_t i) {
    if (i >= t.shape().num_cols()) throw IndexError("column " + std::to_string(i) + " out of range");
    std::vector<std::uint32_t> out;
    for (const auto& r : t.rows()) {
        if (i < r.size()) out.push_back(r[i]);
    }
    return out;
}

std::vector<std::uint32_t> row(const Tableau& t, std::size_t j) {
    if (j >= t.shape().num_rows()) throw IndexError("row " + std::to_string(j) + " out of range");
    return t.rows()[j];
}

std::vector<std::uint64_t> row_sum_key(const Tableau& t) {
    std::vector<std::uint64_t> key;
    for (const auto& r : t.rows()) key.push_back(std::accumulate(r.begin(), r.end(), std::uint64_t{0}));
    return key;
}

bool dominates(const Tableau& a, const Tableau& b) {
    if (a.shape() != b.shape()) throw ShapeError("dominance needs tableaux of the same shape");
    const std::size_t rows = a.shape().num_rows();
    for (std::uint32_t k = 1; k <= a.size(); ++k) {
        std::size_t prefix_a = 0;
        std::size_t prefix_b = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            const auto& ra = a.rows()[i];
            const auto& rb = b.rows()[i];
            prefix_a += static_cast<std::size_t>(std::count_if(ra.begin(), ra.end(), [k](auto v) { return v <= k; }));
            prefix_b += static_cast<std::size_t>(std::count_if(rb.begin(), rb.end(), [k](auto v) { return v <= k; }));
            if (prefix_a < prefix_b) return false;
        }
    }
    return true;
}

std::string to_text(const Tableau& t) {
    std::string out;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i > 0) out += ';';
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(t.rows()[i][j]);
        }
    }
    return out;
}

Tableau parse_tableau(std::string_view text) {
    Tableau::Rows rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find(';', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        std::vector<std::uint32_t> r;
        std::size_t p = 0;
        while (p <= line.size()) {
            const auto e = std::min(line.find(',', p), line.size());
            std::string_view tok = line.substr(p, e - p);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            std::uint32_t v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ParseError("malformed tableau '" + std::string(text) + "'");
            }
            r.push_back(v);
            p = e + 1;
        }
        rows.push_back(std::move(r));
        pos = end + 1;
    }
    try {
        return Tableau(std::move(rows));
    } catch (const ShapeError& e) {
        throw ParseError("tableau '" + std::string(text) + "': " + e.what());
    }
}

}  // namespace amalgam
