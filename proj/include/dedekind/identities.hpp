#pragma once

#include "dedekind/dedekind_core.hpp"

namespace dedekind {

struct NotInverse : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotLess : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPositiveQ : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IdentityViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct Theorem2Result {
    BigInt t;          // m - m_star
    CoprimePair pair;  // (m t + 1, n t)
    Rational value;    // -3 + 2/(n t) + t/n
};

// Closed form S(mt+1, nt) = -3 + 2/(nt) + t/n with t = m - m_star, where
// m_star is an inverse of m mod n (possibly negative) and m > m_star.
// With `check` set, the returned value is verified against the fast
// evaluator; a mismatch throws IdentityViolation.
Theorem2Result theorem2_value(const BigInt& m, const BigInt& n,
                              const BigInt& m_star, bool check = true);

// Bezout data for the three-term relation: -c*j + d*k = 1, q = m*d - n*c > 0,
// r = -n*k + m*j.
struct BezoutData {
    BigInt c;
    BigInt d;
    BigInt j;
    BigInt k;
    BigInt q;
    BigInt r;
};

// Canonical choice reduces j into [0, d) when d > 1; any Bezout choice shifts
// r by a multiple of q and leaves S(r, q) unchanged.
BezoutData bezout_for_three_term(const BigInt& m, const BigInt& n,
                                 const BigInt& c, const BigInt& d);

struct ThreeTermCheck {
    Rational lhs;  // S(m, n)
    Rational rhs;  // S(c, d) + S(r, q) + (n^2 + d^2 + q^2)/(ndq) - 3
    bool holds;
    BezoutData data;
};

// Rademacher-Dieter three-term relation, both sides evaluated exactly.
ThreeTermCheck three_term_check(const BigInt& m, const BigInt& n,
                                const BigInt& c, const BigInt& d);

}  // namespace dedekind
