#include "amalgam/vandermonde.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "amalgam/errors.hpp"
#include "amalgam/fayers.hpp"
#include "amalgam/linalg.hpp"

namespace amalgam {

void VdmSpec::validate() const {
    if (degrees.empty()) throw ShapeError("degree list is empty");
    for (auto d : degrees) {
        if (d == 0) throw ShapeError("degrees must be at least 1");
    }
    if (split && (*split < 1 || *split >= degrees.size())) {
        throw ShapeError("split " + std::to_string(*split) + " outside 1.." + std::to_string(degrees.size() - 1));
    }
}

std::size_t VdmSpec::count() const {
    return std::accumulate(degrees.begin(), degrees.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t VdmSpec::m() const { return first().count(); }
std::size_t VdmSpec::n() const { return second().count(); }

VdmSpec VdmSpec::first() const {
    validate();
    if (!split) throw ArgumentError("the Vandermonde spec has no split");
    return VdmSpec{{degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(*split)}, std::nullopt, order};
}

VdmSpec VdmSpec::second() const {
    validate();
    if (!split) throw ArgumentError("the Vandermonde spec has no split");
    return VdmSpec{{degrees.begin() + static_cast<std::ptrdiff_t>(*split), degrees.end()}, std::nullopt, order};
}

namespace {

unsigned total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// ascending degree, then descending lex
bool graded_before(const Exponent& a, const Exponent& b) {
    const unsigned da = total(a);
    const unsigned db = total(b);
    if (da != db) return da < db;
    return a > b;
}

template <class T>
T power(const T& x, unsigned e) {
    T out(1);
    for (unsigned i = 0; i < e; ++i) out = out * x;
    return out;
}

template <class T>
Matrix<T> evaluate_monomials(const std::vector<Exponent>& mons, const PointSet<T>& pts, std::size_t r) {
    Matrix<T> out(pts.size(), mons.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != r) {
            throw ShapeError("point " + std::to_string(i + 1) + " has " + std::to_string(pts[i].size()) +
                             " coordinates, expected " + std::to_string(r));
        }
        std::vector<std::vector<T>> powers(r);
        for (std::size_t c = 0; c < r; ++c) {
            unsigned top = 0;
            for (const auto& e : mons) top = std::max(top, e[c]);
            powers[c].push_back(T(1));
            for (unsigned k = 1; k <= top; ++k) powers[c].push_back(powers[c].back() * pts[i][c]);
        }
        for (std::size_t j = 0; j < mons.size(); ++j) {
            T v(1);
            for (std::size_t c = 0; c < r; ++c) {
                if (mons[j][c] > 0) v = v * powers[c][mons[j][c]];
            }
            out(i, j) = std::move(v);
        }
    }
    return out;
}

}  // namespace

std::vector<Exponent> monomials(const VdmSpec& spec) {
    spec.validate();
    const std::size_t r = spec.dimension();
    std::vector<Exponent> out;
    out.reserve(spec.count());
    for (std::size_t idx = 0; idx < spec.count(); ++idx) {
        Exponent e(r);
        std::size_t rest = idx;
        for (std::size_t c = 0; c < r; ++c) {
            e[c] = static_cast<std::uint32_t>(rest % spec.degrees[c]);
            rest /= spec.degrees[c];
        }
        out.push_back(std::move(e));
    }
    if (spec.order == MonomialOrder::deglex) std::stable_sort(out.begin(), out.end(), graded_before);
    return out;
}

template <class T>
Matrix<T> build_vdm(const VdmSpec& spec, const PointSet<T>& pts) {
    return evaluate_monomials(monomials(spec), pts, spec.dimension());
}

template <class T>
AmalgamPair<T> vdm_amalgam(const VdmSpec& spec, const PointSet<T>& pts) {
    spec.validate();
    if (spec.order != MonomialOrder::kron) {
        throw ArgumentError("the amalgam factorisation needs the kron monomial order");
    }
    const VdmSpec left = spec.first();
    const VdmSpec right = spec.second();
    if (pts.size() != spec.count()) {
        throw ShapeError("expected " + std::to_string(spec.count()) + " points, got " + std::to_string(pts.size()));
    }
    const std::size_t k = *spec.split;
    PointSet<T> p1;
    PointSet<T> p2;
    for (const auto& p : pts) {
        if (p.size() != spec.dimension()) throw ShapeError("point has the wrong number of coordinates");
        p1.emplace_back(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
        p2.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(k), p.end());
    }
    return make_amalgam_pair(build_vdm(left, p1), build_vdm(right, p2));
}

template <class T>
TermExpansion<T> vdm_expand_tableaux(const VdmSpec& spec, const PointSet<T>& pts, std::size_t cap) {
    auto e = phi_expansion(vdm_amalgam(spec, pts), nullptr, cap);
    for (auto& t : e.terms) t.beta = conjugate(t.beta);
    return e;
}

template <class T>
T vdm_expand_perm(const VdmSpec& spec, const PointSet<T>& pts, const PermSumOptions& opts) {
    const auto p = vdm_amalgam(spec, pts);
    const Tableau one = trivial_tableau(p.m, p.n);
    T sum = perm_sum(p, one, conjugate(one), opts);
    sum *= Rational(1, hook_product(p.m, p.n));
    return sum;
}

std::string coordinate_letter(std::size_t c) {
    static const char* letters[] = {"x", "y", "z", "w"};
    if (c < 4) return letters[c];
    return "c" + std::to_string(c + 1) + "_";
}

PointSet<Poly> symbolic_points(std::size_t r, std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 1; i <= count; ++i) names.push_back(coordinate_letter(c) + std::to_string(i));
    const auto vars = make_vars(names);
    PointSet<Poly> pts(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t c = 0; c < r; ++c) pts[i].push_back(Poly::variable(vars, names[c * count + i]));
    return pts;
}

namespace {

std::string minor_text(const VdmSpec& sub, std::size_t first_coord, const std::vector<std::uint32_t>& labels) {
    std::string out;
    if (sub.dimension() == 1) {
        const std::string z = coordinate_letter(first_coord);
        // pairs ordered by the later label descending, then the earlier ascending
        for (std::size_t j = labels.size(); j-- > 1;) {
            for (std::size_t i = 0; i < j; ++i) {
                out += "(" + z + std::to_string(labels[j]) + "-" + z + std::to_string(labels[i]) + ")";
            }
        }
        return out;
    }
    out = "V[";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
    out += "](";
    for (std::size_t c = 0; c < sub.dimension(); ++c) out += (c ? "," : "") + coordinate_letter(first_coord + c);
    return out + ")";
}

template <class T>
bool value_is_zero(const T& v) {
    return v == 0;
}
template <>
bool value_is_zero(const Poly& v) {
    return v.is_zero();
}

}  // namespace

std::string factored_term(const VdmSpec& spec, const Tableau& alpha, const Tableau& beta) {
    const VdmSpec left = spec.first();
    const VdmSpec right = spec.second();
    std::string out;
    for (std::size_t i = 0; i < alpha.shape().num_cols(); ++i) out += minor_text(left, 0, column(alpha, i));
    for (std::size_t j = 0; j < beta.shape().num_rows(); ++j) out += minor_text(right, *spec.split, row(beta, j));
    return out;
}

template <class T>
std::string factored_expansion(const VdmSpec& spec, const TermExpansion<T>& e) {
    std::string out;
    for (const auto& t : e.terms) {
        if (value_is_zero(t.value)) continue;
        const bool neg = t.coef < 0;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        const auto mag = neg ? -t.coef : t.coef;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += factored_term(spec, t.alpha, t.beta);
    }
    return out.empty() ? "0" : out;
}

std::vector<Exponent> hom_monomials(std::size_t N, std::size_t r) {
    if (r == 0) throw ShapeError("homogeneous Vandermonde needs at least one variable");
    std::vector<Exponent> out;
    Exponent e(r, 0);
    // all exponent vectors with entries <= N, filtered by total degree
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t c, unsigned left) {
        if (c == r) {
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[c] = k;
            fill(c + 1, left - k);
        }
        e[c] = 0;
    };
    fill(0, static_cast<unsigned>(N));
    std::sort(out.begin(), out.end(), graded_before);
    return out;
}

std::size_t hom_count(std::size_t N, std::size_t r) {
    // binomial(N + r, r)
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), N + r, r);
    return b.get_ui();
}

template <class T>
Matrix<T> build_vdm_hom(std::size_t N, std::size_t r, const PointSet<T>& pts) {
    const std::size_t need = hom_count(N, r);
    if (pts.size() != need) {
        throw ShapeError("homogeneous Vandermonde of degree " + std::to_string(N) + " in " + std::to_string(r) +
                         " variables needs " + std::to_string(need) + " points, got " + std::to_string(pts.size()));
    }
    return evaluate_monomials(hom_monomials(N, r), pts, r);
}

std::vector<std::vector<Rational>> hom_kernel(const Matrix<Rational>& m) { return right_kernel(m); }

namespace {

struct EntryName {
    bool is_a;
    std::size_t row;  // 1-based
    std::size_t col;  // 1-based
};

EntryName parse_entry(const std::string& name, const Extraction& ex) {
    auto bad = [&] { return NameError("'" + name + "' is not an amalgam entry name"); };
    if (name.size() < 4 || (name[0] != 'a' && name[0] != 'b')) throw bad();
    const auto us = name.find('_');
    if (us == std::string::npos) throw bad();
    std::size_t row = 0;
    std::size_t col = 0;
    const char* s = name.data();
    auto r1 = std::from_chars(s + 1, s + us, row);
    auto r2 = std::from_chars(s + us + 1, s + name.size(), col);
    if (r1.ec != std::errc() || r1.ptr != s + us || r2.ec != std::errc() || r2.ptr != s + name.size()) throw bad();
    const bool is_a = name[0] == 'a';
    const std::size_t width = is_a ? ex.m : ex.n;
    if (row < 1 || row > ex.m * ex.n || col < 1 || col > width) throw bad();
    return {is_a, row, col};
}

struct RowChoice {
    std::size_t a_col = 0;
    std::size_t b_col = 0;
};

std::map<std::size_t, RowChoice> extracted_rows(const Extraction& ex) {
    std::map<std::size_t, RowChoice> rows;
    for (const auto& name : ex.variables) {
        const auto e = parse_entry(name, ex);
        auto& slot = rows[e.row];
        std::size_t& target = e.is_a ? slot.a_col : slot.b_col;
        if (target != 0) throw ArgumentError("row " + std::to_string(e.row) + " has two extracted entries of one kind");
        target = e.col;
    }
    for (const auto& [r, c] : rows) {
        if (c.a_col == 0 || c.b_col == 0) {
            throw ArgumentError("row " + std::to_string(r) + " must lose exactly one a and one b entry");
        }
    }
    return rows;
}

}  // namespace

ExtractionMinor extraction_minor(const Extraction& ex) {
    const auto chosen = extracted_rows(ex);
    const std::size_t size = ex.m * ex.n;
    std::vector<bool> row_gone(size, false);
    std::vector<bool> col_gone(size, false);
    for (const auto& [r, c] : chosen) {
        const std::size_t col = (c.a_col - 1) + (c.b_col - 1) * ex.m;
        if (col_gone[col]) throw ArgumentError("two extracted rows use the same amalgam column");
        row_gone[r - 1] = true;
        col_gone[col] = true;
    }
    ExtractionMinor out;
    for (std::size_t i = 0; i < size; ++i) {
        if (!row_gone[i]) out.rows.push_back(i);
        if (!col_gone[i]) out.cols.push_back(i);
    }
    // sign of the full permutation sending removed rows to their columns and kept rows to kept
    // columns in order
    Permutation pi(size);
    for (const auto& [r, c] : chosen) pi[r - 1] = static_cast<std::uint32_t>((c.a_col - 1) + (c.b_col - 1) * ex.m + 1);
    for (std::size_t k = 0; k < out.rows.size(); ++k) pi[out.rows[k]] = static_cast<std::uint32_t>(out.cols[k] + 1);
    out.sign = permutation_sign(pi);
    return out;
}

Poly extraction_direct(const Extraction& ex) {
    const auto minor = extraction_minor(ex);
    const auto full = star(symbolic_pair(ex.m, ex.n));
    const auto sub = full.submatrix(minor.rows, minor.cols);
    const auto values = sub.map([&](const Poly& p) { return p.substitute(ex.substitution, ex.target); });
    Poly d = det(values);
    return minor.sign > 0 ? d : -d;
}

ExtractedExpansion hom_via_amalgam_minor(const Extraction& ex, std::size_t cap) {
    const auto chosen = extracted_rows(ex);
    const auto pair = symbolic_pair(ex.m, ex.n);
    const auto phi = phi_matrix(ex.m, ex.n, cap);

    // Extracted, substituted determinant of one column minor, cached by side and labels.
    std::map<std::pair<bool, std::vector<std::uint32_t>>, Poly> cache;
    auto factor = [&](bool is_a, const std::vector<std::uint32_t>& labels) -> const Poly& {
        auto key = std::make_pair(is_a, labels);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const auto& mat = is_a ? pair.a : pair.b;
        std::vector<std::size_t> rows;
        std::vector<std::pair<std::string, unsigned>> vars;
        for (auto l : labels) {
            rows.push_back(l - 1);
            auto c = chosen.find(l);
            if (c == chosen.end()) continue;
            const std::size_t col = is_a ? c->second.a_col : c->second.b_col;
            vars.emplace_back(std::string(is_a ? "a" : "b") + std::to_string(l) + "_" + std::to_string(col), 1u);
        }
        Poly d = det_minor_ordered(mat, std::span<const std::size_t>(rows));
        if (!vars.empty()) d = d.coefficient(vars);
        return cache.emplace(std::move(key), d.substitute(ex.substitution, ex.target)).first->second;
    };

    ExtractedExpansion out;
    out.total = Poly::constant(ex.target, 0);
    const std::size_t k = phi.row_basis.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t c = phi.entries(i, j);
            if (c == 0) continue;
            Rational coef(c);
            std::vector<Poly> factors;
            bool zero = false;
            auto take = [&](bool is_a, const Tableau& t) {
                for (std::size_t col = 0; col < t.shape().num_cols() && !zero; ++col) {
                    const Poly& f = factor(is_a, column(t, col));
                    if (f.is_zero()) {
                        zero = true;
                    } else if (f.is_constant()) {
                        coef *= f.constant_term();
                    } else {
                        factors.push_back(f);
                    }
                }
            };
            take(true, phi.row_basis[i]);
            take(false, phi.col_basis[j]);
            if (zero) continue;
            Poly value = Poly::constant(ex.target, coef);
            for (const auto& f : factors) value = value * f;
            out.total += value;
            out.terms.push_back(ExtractedTerm{coef, phi.row_basis[i], phi.col_basis[j], std::move(factors), std::move(value)});
        }
    }
    return out;
}

ExtractedExpansion specialize(const ExtractedExpansion& e, const std::map<std::string, Poly, std::less<>>& values) {
    ExtractedExpansion out;
    const auto& target = e.total.vars();
    // identity on every variable not listed
    std::map<std::string, Poly, std::less<>> full;
    if (target) {
        for (const auto& name : target->names()) full.emplace(name, Poly::variable(target, name));
    }
    for (const auto& [k, v] : values) full[k] = v;
    out.total = e.total.substitute(full, target);
    for (const auto& t : e.terms) {
        ExtractedTerm s{t.coef, t.alpha, t.beta, {}, Poly()};
        bool zero = false;
        for (const auto& f : t.factors) {
            Poly g = f.substitute(full, target);
            if (g.is_zero()) {
                zero = true;
                break;
            }
            if (g.is_constant()) {
                s.coef *= g.constant_term();
            } else {
                s.factors.push_back(std::move(g));
            }
        }
        if (zero) continue;
        s.value = Poly::constant(target, s.coef);
        for (const auto& f : s.factors) s.value = s.value * f;
        out.terms.push_back(std::move(s));
    }
    return out;
}

std::string to_text(const ExtractedExpansion& e) {
    std::string out;
    for (const auto& t : e.terms) {
        const bool neg = t.coef < 0;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? "\n  - " : "\n  + ";
        }
        const Rational mag = neg ? Rational(-t.coef) : t.coef;
        if (mag != 1 || t.factors.empty()) out += to_string(mag) + (t.factors.empty() ? "" : "*");
        for (const auto& f : t.factors) out += "(" + f.to_string() + ")";
    }
    return out.empty() ? "0" : out;
}

namespace {

Extraction conic_base() {
    Extraction ex;
    ex.m = 3;
    ex.n = 3;
    std::vector<std::string> names;
    for (const char* letter : {"x", "y"})
        for (int i = 1; i <= 6; ++i) names.push_back(letter + std::to_string(i));
    ex.target = make_vars(names);
    return ex;
}

std::string entry(char side, int row, int col) {
    return std::string(1, side) + std::to_string(row) + "_" + std::to_string(col);
}

}  // namespace

Extraction separated_conic_extraction() {
    Extraction ex = conic_base();
    ex.variables = {"a9_3", "a8_3", "a7_2", "b7_3", "b8_3", "b9_2"};
    for (int i = 1; i <= 6; ++i) {
        const Poly x = Poly::variable(ex.target, "x" + std::to_string(i));
        const Poly y = Poly::variable(ex.target, "y" + std::to_string(i));
        ex.substitution[entry('a', i, 1)] = Poly::constant(ex.target, 1);
        ex.substitution[entry('a', i, 2)] = x;
        ex.substitution[entry('a', i, 3)] = x * x;
        ex.substitution[entry('b', i, 1)] = Poly::constant(ex.target, 1);
        ex.substitution[entry('b', i, 2)] = y;
        ex.substitution[entry('b', i, 3)] = y * y;
    }
    return ex;
}

Extraction mixed_conic_extraction(bool sixth_at_origin) {
    Extraction ex = conic_base();
    ex.variables = {"a9_2", "a8_1", "a7_1", "b9_3", "b8_3", "b7_2"};
    for (int i = 1; i <= 6; ++i) {
        const bool origin = sixth_at_origin && i == 6;
        const Poly x = origin ? Poly::constant(ex.target, 0) : Poly::variable(ex.target, "x" + std::to_string(i));
        const Poly y = origin ? Poly::constant(ex.target, 0) : Poly::variable(ex.target, "y" + std::to_string(i));
        for (char side : {'a', 'b'}) {
            ex.substitution[entry(side, i, 1)] = Poly::constant(ex.target, 1);
            ex.substitution[entry(side, i, 2)] = x;
            ex.substitution[entry(side, i, 3)] = y;
        }
    }
    return ex;
}

template Matrix<Rational> build_vdm(const VdmSpec&, const PointSet<Rational>&);
template Matrix<Poly> build_vdm(const VdmSpec&, const PointSet<Poly>&);
template AmalgamPair<Rational> vdm_amalgam(const VdmSpec&, const PointSet<Rational>&);
template AmalgamPair<Poly> vdm_amalgam(const VdmSpec&, const PointSet<Poly>&);
template TermExpansion<Rational> vdm_expand_tableaux(const VdmSpec&, const PointSet<Rational>&, std::size_t);
template TermExpansion<Poly> vdm_expand_tableaux(const VdmSpec&, const PointSet<Poly>&, std::size_t);
template Rational vdm_expand_perm(const VdmSpec&, const PointSet<Rational>&, const PermSumOptions&);
template Poly vdm_expand_perm(const VdmSpec&, const PointSet<Poly>&, const PermSumOptions&);
template std::string factored_expansion(const VdmSpec&, const TermExpansion<Rational>&);
template std::string factored_expansion(const VdmSpec&, const TermExpansion<Poly>&);
template Matrix<Rational> build_vdm_hom(std::size_t, std::size_t, const PointSet<Rational>&);
template Matrix<Poly> build_vdm_hom(std::size_t, std::size_t, const PointSet<Poly>&);

}  // namespace amalgam
