#include "dedekind/dedekind_core.hpp"

namespace dedekind {

CoprimePair::CoprimePair(BigInt m, BigInt n)
    : m_(std::move(m)), n_(std::move(n))
{
    if (n_ < 1)
        throw std::invalid_argument("CoprimePair: n must be >= 1");
    if (gcd(m_, n_) != 1)
        throw NotCoprime("CoprimePair: gcd(m, n) != 1");
}

Rational sawtooth(const Rational& t)
{
    if (t.get_den() == 1)
        return 0;
    return t - rat_floor(t) - Rational(1, 2);
}

Rational dedekind_sum_naive(const CoprimePair& p, unsigned long cap)
{
    if (p.n() > cap)
        throw OracleCapExceeded("dedekind_sum_naive: n exceeds oracle cap " +
                                std::to_string(cap));
    if (p.n() == 1)
        return 0;

    // With 1 <= k < n, ((k/n)) = (2k-n)/(2n) and ((mk/n)) = (2r-n)/(2n)
    // where r = mk mod n, r != 0 by coprimality. The k = n term vanishes.
    // Summing numerators over the common denominator 4n^2 keeps the loop in
    // machine integers; the accumulator needs n^3 < 2^126.
    const long n = static_cast<long>(p.n().get_ui());
    BigInt mm = p.m() % p.n();
    if (mm < 0)
        mm += p.n();
    const long m = static_cast<long>(mm.get_ui());

    __int128 acc = 0;
    long r = 0;
    for (long k = 1; k < n; ++k) {
        r += m;
        if (r >= n)
            r -= n;
        acc += static_cast<__int128>(2 * k - n) * (2 * r - n);
    }

    BigInt num = 0;
    {
        const bool neg = acc < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(acc)
                                  : static_cast<unsigned __int128>(acc);
        BigInt hi(static_cast<unsigned long>(u >> 64));
        BigInt lo(static_cast<unsigned long>(u));
        num = (hi << 64) + lo;
        if (neg)
            num = -num;
    }
    return make_rational(num, 4 * p.n() * p.n());
}

Rational dedekind_sum_fast(const CoprimePair& p)
{
    // Euclidean descent on the classical reciprocity law
    //   s(a,b) + s(b,a) = -1/4 + (a^2 + b^2 + 1)/(12ab),
    // together with periodicity s(a+b,b) = s(a,b). Each step replaces (a,b)
    // by (b mod a, a), so the argument shrinks like in gcd.
    BigInt a = p.m() % p.n();
    if (a < 0)
        a += p.n();
    BigInt b = p.n();

    Rational s = 0;
    int sign = 1;
    while (a != 0) {
        s += sign * make_rational(a * a + b * b + 1 - 3 * a * b, 12 * a * b);
        BigInt next = b % a;
        b = a;
        a = next;
        sign = -sign;
    }
    return s;
}

Rational big_s(const CoprimePair& p)
{
    return 12 * dedekind_sum_fast(p);
}

CoprimePair normalize_arg(const CoprimePair& p)
{
    if (p.n() == 1)
        return CoprimePair(0, 1);
    BigInt r = p.m() % p.n();
    if (r < 0)
        r += p.n();
    return CoprimePair(r, p.n());  // r != 0 since gcd(m, n) = 1 and n > 1
}

}  // namespace dedekind
