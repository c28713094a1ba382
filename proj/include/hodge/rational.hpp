#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hodge {

// Exact rational scalar. All parameter coordinates, form values and
// filtration levels in this library are rationals; no floating point.
using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

// Canonicalized fraction; the two-argument mpq_class constructor does
// not reduce and GMP requires canonical form.
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q);
long to_long(const Rational& q);  // requires is_integer

// Largest integer n with n <= q.
long rational_floor(const Rational& q);
// Smallest integer n with q <= n.
long rational_ceil(const Rational& q);

int sign_of(const Rational& q);

}  // namespace hodge
