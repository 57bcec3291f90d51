#pragma once

#include <gmpxx.h>

#include <string>

#include "rcb/errors.hpp"

namespace rcb {

// Exact backend scalar: arbitrary-precision rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

// Serialized form: "p/q" with decimal integers, q > 0, or plain "p".
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

}  // namespace rcb
