#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amalgam/rational.hpp"

namespace amalgam {

/// Ordered, duplicate-free list of indeterminate names. Shared (immutable) between polynomials.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws NameError for names outside the universe.
    std::size_t index(std::string_view name) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names);

using Exponent = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with rational coefficients.
///
/// A polynomial is either bound to a variable universe or unbound. Unbound polynomials are
/// constants (default-constructed zero, or built from a Rational); they adopt the universe of
/// the other operand in mixed arithmetic. Combining two different bound universes is a
/// NameError. Terms are kept in a map ordered lexicographically on exponent vectors; no stored
/// coefficient is zero.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor): constants mix freely
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static Poly constant(VarSetPtr vars, const Rational& c);
    static Poly variable(VarSetPtr vars, std::string_view name);
    static Poly monomial(VarSetPtr vars, Exponent exp, const Rational& coef);

    const VarSetPtr& vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    unsigned total_degree() const;
    /// Highest power of `var` occurring in any term.
    unsigned degree_in(std::string_view var) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Formal partial derivative. Throws NameError if `var` is not in the universe.
    Poly diff(std::string_view var) const;

    /// Iterated coefficient extraction: the part of the polynomial multiplying
    /// ∏ var^degree, with those variables removed. Variables must be distinct.
    Poly coefficient(std::span<const std::pair<std::string, unsigned>> assignments) const;

    /// Exact evaluation. Every variable occurring in a term must be assigned; assigning a
    /// name outside the universe is a NameError.
    Rational evaluate(const std::map<std::string, Rational, std::less<>>& point) const;

    /// Replaces variables by polynomials over `target`. Variables occurring in a term must all
    /// be mapped.
    Poly substitute(const std::map<std::string, Poly, std::less<>>& values,
                    const VarSetPtr& target) const;

    /// Quotient of an exact division (lex-order reduction). Throws DomainError if `d` does not
    /// divide this polynomial.
    Poly divide_exact(const Poly& d) const;

    /// Human-readable form, greatest term first: "3*x^2*y - 1/2*z + 4".
    std::string to_string() const;

private:
    void bind_to(const VarSetPtr& vars);
    void unify(Poly& other);
    void add_term(const Exponent& e, const Rational& c);

    VarSetPtr vars_;
    std::map<Exponent, Rational> terms_;
};

}  // namespace amalgam
