#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace amalgam {

// Reduced rationals with positive denominator. gmpxx arithmetic keeps results canonical;
// values built by hand must go through canonical() before comparison.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "-3", "5/7", "+2/4" (reduced on return). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Exact conversion of a finite double (every double is a dyadic rational).
Rational from_double(double x);

Integer factorial(unsigned n);

}  // namespace amalgam
