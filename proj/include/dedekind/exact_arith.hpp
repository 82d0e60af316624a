#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dedekind {

// Arbitrary-precision signed integer and exact rational. Rationals are kept
// in lowest terms with positive denominator at all times (gmp canonical form).
using BigInt = mpz_class;
using Rational = mpq_class;

struct NotCoprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::invalid_argument {
    DivisionByZero() : std::invalid_argument("division by zero") {}
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-negative gcd; gcd(0,0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

struct ExtendedGcd {
    BigInt g;  // gcd(a, b), non-negative
    BigInt u;  // u*a + v*b = g
    BigInt v;
};

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b);

// Unique w in [0, modulus) with a*w == 1 (mod modulus); 0 when modulus == 1.
// Throws NotCoprime unless gcd(a, modulus) == 1.
BigInt mod_inverse(const BigInt& a, const BigInt& modulus);

// Checked division; throws DivisionByZero instead of trapping like mpq does.
Rational rat_div(const Rational& a, const Rational& b);

// Greatest integer <= x.
BigInt rat_floor(const Rational& x);

Rational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p/q", a plain integer "p", or an exact decimal "d.ddd", each with
// an optional leading sign.
Rational parse_rational(std::string_view text);

// "p/q", or just "p" when the denominator is 1. Round-trips through
// parse_rational bit-exactly.
std::string to_fraction_string(const Rational& x);

// Sign, integer part, then exactly `digits` digits truncated toward zero.
// A trailing "..." marks a nonzero remainder.
std::string render_decimal(const Rational& x, std::size_t digits);

}  // namespace dedekind
