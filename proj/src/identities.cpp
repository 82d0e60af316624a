#include "dedekind/identities.hpp"

namespace dedekind {

Theorem2Result theorem2_value(const BigInt& m, const BigInt& n,
                              const BigInt& m_star, bool check)
{
    if (n < 1)
        throw std::invalid_argument("theorem2_value: n must be >= 1");
    if (gcd(m, n) != 1)
        throw NotCoprime("theorem2_value: gcd(m, n) != 1");
    if ((m * m_star - 1) % n != 0)
        throw NotInverse("theorem2_value: m_star is not an inverse of m mod n");
    if (m <= m_star)
        throw NotLess("theorem2_value: requires m > m_star");

    BigInt t = m - m_star;
    CoprimePair pair(m * t + 1, n * t);
    Rational value = -3 + make_rational(2, n * t) + make_rational(t, n);

    if (check && big_s(pair) != value)
        throw IdentityViolation("theorem2_value: closed form disagrees with evaluator");
    return {std::move(t), std::move(pair), std::move(value)};
}

BezoutData bezout_for_three_term(const BigInt& m, const BigInt& n,
                                 const BigInt& c, const BigInt& d)
{
    if (n < 1 || d < 1)
        throw std::invalid_argument("bezout_for_three_term: n, d must be >= 1");
    if (gcd(m, n) != 1 || gcd(c, d) != 1)
        throw NotCoprime("bezout_for_three_term: gcd violation");

    BigInt q = m * d - n * c;
    if (q <= 0)
        throw NotPositiveQ("bezout_for_three_term: q = m*d - n*c must be > 0");

    // -c*j + d*k = 1: take (j, k) = (-u, v) from u*c + v*d = 1,
    // then reduce j mod d (shifting j by d moves k by c).
    ExtendedGcd e = extended_gcd(c, d);
    BigInt j = -e.u;
    BigInt k = e.v;
    if (d > 1) {
        BigInt jr;
        mpz_fdiv_r(jr.get_mpz_t(), j.get_mpz_t(), d.get_mpz_t());
        BigInt shift = (jr - j) / d;
        j = jr;
        k += c * shift;
    }

    BigInt r = -n * k + m * j;
    return {c, d, std::move(j), std::move(k), std::move(q), std::move(r)};
}

ThreeTermCheck three_term_check(const BigInt& m, const BigInt& n,
                                const BigInt& c, const BigInt& d)
{
    BezoutData bd = bezout_for_three_term(m, n, c, d);
    Rational lhs = big_s(CoprimePair(m, n));
    Rational rhs = big_s(CoprimePair(c, d)) + big_s(CoprimePair(bd.r, bd.q)) +
                   make_rational(n * n + d * d + bd.q * bd.q, n * d * bd.q) - 3;
    bool holds = lhs == rhs;
    return {std::move(lhs), std::move(rhs), holds, std::move(bd)};
}

}  // namespace dedekind
