#include "amalgam/amalgam.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_map>

#include "amalgam/errors.hpp"
#include "amalgam/linalg.hpp"

namespace amalgam {

AmalgamPair<Poly> symbolic_pair(std::size_t m, std::size_t n) {
    const std::size_t rows = m * n;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= m; ++j) names.push_back("a" + std::to_string(i) + "_" + std::to_string(j));
    for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t k = 1; k <= n; ++k) names.push_back("b" + std::to_string(i) + "_" + std::to_string(k));
    const auto vars = make_vars(names);
    Matrix<Poly> a(rows, m);
    Matrix<Poly> b(rows, n);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = Poly::variable(vars, names[i * m + j]);
        for (std::size_t k = 0; k < n; ++k) b(i, k) = Poly::variable(vars, names[rows * m + i * n + k]);
    }
    return make_amalgam_pair(std::move(a), std::move(b));
}

AmalgamPair<Rational> random_pair(std::size_t m, std::size_t n, SeededEntries& rng) {
    const std::size_t rows = m * n;
    Matrix<Rational> a(rows, m);
    Matrix<Rational> b(rows, n);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = rng.entry();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < n; ++k) b(i, k) = rng.entry();
    return make_amalgam_pair(std::move(a), std::move(b));
}

template <class T>
Matrix<T> star(const AmalgamPair<T>& p) {
    const std::size_t size = p.m * p.n;
    Matrix<T> out(size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t k = 0; k < p.n; ++k)
            for (std::size_t j = 0; j < p.m; ++j) out(r, j + k * p.m) = p.a(r, j) * p.b(r, k);
    return out;
}

template <class T>
AmalgamPair<T> kron_embed(const Matrix<T>& c, const Matrix<T>& d) {
    if (!c.square() || !d.square()) throw DimensionError("Kronecker embedding needs square matrices");
    const std::size_t m = c.rows();
    const std::size_t n = d.rows();
    Matrix<T> a(m * n, m);
    Matrix<T> b(m * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t r = i + j * m;
            for (std::size_t p = 0; p < m; ++p) a(r, p) = c(i, p);
            for (std::size_t q = 0; q < n; ++q) b(r, q) = d(j, q);
        }
    }
    return make_amalgam_pair(std::move(a), std::move(b));
}

namespace {

std::vector<std::size_t> zero_based(const std::vector<std::uint32_t>& labels) {
    std::vector<std::size_t> rows;
    rows.reserve(labels.size());
    for (auto v : labels) rows.push_back(v - 1);
    return rows;
}

template <class T>
bool is_zero(const T& x) {
    return x == 0;
}
template <>
bool is_zero(const Poly& x) {
    return x.is_zero();
}

}  // namespace

template <class T>
T tableau_minor_product(const Matrix<T>& m, const Tableau& t) {
    const std::size_t ncols = t.shape().num_cols();
    T prod(1);
    for (std::size_t i = 0; i < ncols; ++i) {
        const auto labels = column(t, i);
        if (labels.size() != m.cols()) {
            throw ShapeError("tableau column of length " + std::to_string(labels.size()) + " against a matrix with " +
                             std::to_string(m.cols()) + " columns");
        }
        const auto rows = zero_based(labels);
        for (auto r : rows) {
            if (r >= m.rows()) throw IndexError("tableau entry exceeds the matrix row count");
        }
        prod *= det_minor_ordered(m, std::span<const std::size_t>(rows));
        if (is_zero(prod)) return prod;
    }
    return prod;
}

template <class T>
TermExpansion<T> phi_expansion(const AmalgamPair<T>& p, const BasisMatrix* phi, std::size_t cap) {
    std::optional<BasisMatrix> owned;
    if (!phi) {
        owned = phi_matrix(p.m, p.n, cap);
        phi = &*owned;
    }
    if (phi->m != p.m || phi->n != p.n) throw ShapeError("coefficient matrix built for another shape");
    const std::size_t k = phi->row_basis.size();
    std::vector<T> a_vals;
    std::vector<T> b_vals;
    a_vals.reserve(k);
    b_vals.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        a_vals.push_back(tableau_minor_product(p.a, phi->row_basis[i]));
        b_vals.push_back(tableau_minor_product(p.b, phi->col_basis[i]));
    }
    TermExpansion<T> out;
    out.total = T(0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t c = phi->entries(i, j);
            if (c == 0) continue;
            T value = a_vals[i] * b_vals[j];
            T scaled = value;
            scaled *= Rational(c);
            out.total += scaled;
            out.terms.push_back(ExpansionTerm<T>{c, phi->row_basis[i], phi->col_basis[j], std::move(value)});
        }
    }
    return out;
}

namespace {

// Lexicographic successor with sign bookkeeping; returns false after the last permutation.
bool next_permutation_signed(std::vector<std::uint32_t>& p, std::size_t fixed_prefix, int& sign) {
    const std::size_t n = p.size();
    if (n < 2) return false;
    std::size_t i = n - 1;
    while (i > fixed_prefix && p[i - 1] >= p[i]) --i;
    if (i <= fixed_prefix) return false;
    std::size_t j = n - 1;
    while (p[j] <= p[i - 1]) --j;
    std::swap(p[i - 1], p[j]);
    std::reverse(p.begin() + static_cast<std::ptrdiff_t>(i), p.end());
    const std::size_t suffix = n - i;
    if ((1 + suffix / 2) % 2 == 1) sign = -sign;
    return true;
}

// Determinants of row-ordered minors with the rows given as a set plus the sign of the order.
template <class T>
class MinorCache {
public:
    explicit MinorCache(const Matrix<T>& m) : m_(m) {}

    // rows are 0-based and distinct
    T ordered(const std::uint32_t* rows, std::size_t len) {
        std::uint32_t mask = 0;
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < len; ++a) {
            mask |= 1u << rows[a];
            for (std::size_t b = a + 1; b < len; ++b) inversions += rows[a] > rows[b] ? 1 : 0;
        }
        auto it = cache_.find(mask);
        if (it == cache_.end()) {
            std::vector<std::size_t> sorted;
            for (std::uint32_t bits = mask; bits; bits &= bits - 1) sorted.push_back(static_cast<std::size_t>(std::countr_zero(bits)));
            it = cache_.emplace(mask, det_minor_ordered(m_, std::span<const std::size_t>(sorted))).first;
        }
        if (inversions % 2 == 0) return it->second;
        T neg = it->second;
        neg *= Rational(-1);
        return neg;
    }

private:
    const Matrix<T>& m_;
    std::unordered_map<std::uint32_t, T> cache_;
};

// Columns of a tableau as label lists (0-based rows), flattened column after column.
std::vector<std::uint32_t> flat_columns(const Tableau& t) {
    std::vector<std::uint32_t> out;
    for (auto v : t.column_word()) out.push_back(v - 1);
    return out;
}

template <class T>
T perm_block(const AmalgamPair<T>& p, const std::vector<std::uint32_t>& alpha_cols,
             const std::vector<std::uint32_t>& beta_cols, std::uint32_t first) {
    const std::size_t total = p.m * p.n;
    MinorCache<T> a_cache(p.a);
    MinorCache<T> b_cache(p.b);
    // sigma in one-line form over 0-based labels, starting with `first` and the rest ascending
    std::vector<std::uint32_t> sigma;
    sigma.push_back(first);
    for (std::uint32_t v = 0; v < total; ++v) {
        if (v != first) sigma.push_back(v);
    }
    int sign = (first % 2 == 0) ? 1 : -1;
    std::vector<std::uint32_t> rows_a(p.m);
    std::vector<std::uint32_t> rows_b(p.n);
    T sum(0);
    do {
        T term(sign);
        for (std::size_t c = 0; c < p.n && !is_zero(term); ++c) {
            for (std::size_t k = 0; k < p.m; ++k) rows_a[k] = sigma[alpha_cols[c * p.m + k]];
            term *= a_cache.ordered(rows_a.data(), p.m);
        }
        for (std::size_t c = 0; c < p.m && !is_zero(term); ++c) {
            for (std::size_t k = 0; k < p.n; ++k) rows_b[k] = sigma[beta_cols[c * p.n + k]];
            term *= b_cache.ordered(rows_b.data(), p.n);
        }
        if (!is_zero(term)) sum += term;
    } while (next_permutation_signed(sigma, 1, sign));
    return sum;
}

}  // namespace

template <class T>
T perm_sum(const AmalgamPair<T>& p, const Tableau& alpha, const Tableau& beta, const PermSumOptions& opts) {
    const std::size_t total = p.m * p.n;
    if (total > opts.perm_cap) {
        throw ResourceError("permutation sum over " + std::to_string(total) + "! terms exceeds the cap of " +
                            std::to_string(opts.perm_cap) + "!");
    }
    if (total > 31) throw ResourceError("permutation sums are limited to 31 rows");
    if (alpha.shape() != Shape::rectangle(p.m, p.n) || beta.shape() != Shape::rectangle(p.n, p.m)) {
        throw ShapeError("alpha must have shape n^m and beta shape m^n");
    }
    const auto alpha_cols = flat_columns(alpha);
    const auto beta_cols = flat_columns(beta);
    // Blocks are the permutations sharing a first value; partial sums are reduced in block order.
    std::vector<T> partial(total, T(0));
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (std::uint32_t f = 0; f < total; ++f) partial[f] = perm_block(p, alpha_cols, beta_cols, f);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint32_t f = w; f < total; f += workers) partial[f] = perm_block(p, alpha_cols, beta_cols, f);
            });
        }
    }
    T sum(0);
    for (auto& s : partial) sum += s;
    return sum;
}

Integer kappa(std::size_t m, std::size_t n, const Tableau& alpha, const Tableau& beta, std::uint64_t seed,
              const PermSumOptions& opts) {
    SeededEntries rng(seed);
    auto draw = [&]() -> Integer {
        for (int attempt = 0; attempt < 20; ++attempt) {
            const auto p = random_pair(m, n, rng);
            const Rational d = det(star(p));
            if (d == 0) continue;
            const Rational ratio = perm_sum(p, alpha, beta, opts) / d;
            if (!is_integral(ratio)) throw ConsistencyError("permutation sum is not an integer multiple of det");
            return ratio.get_num();
        }
        throw DegenerateInputError("20 consecutive random pairs had det(A*B) = 0");
    };
    const Integer first = draw();
    const Integer second = draw();
    if (first != second) {
        throw ConsistencyError("kappa differs between draws: " + to_string(first) + " vs " + to_string(second));
    }
    return first;
}

template Matrix<Rational> star(const AmalgamPair<Rational>&);
template Matrix<Poly> star(const AmalgamPair<Poly>&);
template AmalgamPair<Rational> kron_embed(const Matrix<Rational>&, const Matrix<Rational>&);
template AmalgamPair<Poly> kron_embed(const Matrix<Poly>&, const Matrix<Poly>&);
template Rational tableau_minor_product(const Matrix<Rational>&, const Tableau&);
template Poly tableau_minor_product(const Matrix<Poly>&, const Tableau&);
template TermExpansion<Rational> phi_expansion(const AmalgamPair<Rational>&, const BasisMatrix*, std::size_t);
template TermExpansion<Poly> phi_expansion(const AmalgamPair<Poly>&, const BasisMatrix*, std::size_t);
template Rational perm_sum(const AmalgamPair<Rational>&, const Tableau&, const Tableau&, const PermSumOptions&);
template Poly perm_sum(const AmalgamPair<Poly>&, const Tableau&, const Tableau&, const PermSumOptions&);

}  // namespace amalgam
