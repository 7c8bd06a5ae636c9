#include "amalgam/rational.hpp"

#include <cctype>
#include <cmath>

#include "amalgam/errors.hpp"

namespace amalgam {

namespace {

bool is_integer_text(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') throw bad();
    if (num.front() == '+') num.remove_prefix(1);
    Rational q;
    q.get_num().set_str(std::string(num), 10);
    q.get_den().set_str(std::string(den), 10);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Rational from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made exact");
    return Rational(x);  // mpq_set_d is exact
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace amalgam
