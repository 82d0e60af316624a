#pragma once

#include "dedekind/exact_arith.hpp"

namespace dedekind {

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument pair (m, n) of a Dedekind sum: n >= 1 and gcd(m, n) = 1.
class CoprimePair {
public:
    CoprimePair(BigInt m, BigInt n);

    const BigInt& m() const { return m_; }
    const BigInt& n() const { return n_; }

private:
    BigInt m_;
    BigInt n_;
};

// ((t)) = t - floor(t) - 1/2 for non-integer t, 0 on integers.
Rational sawtooth(const Rational& t);

inline constexpr unsigned long kDefaultOracleCap = 1000000;

// s(m,n) by direct summation of sawtooth products, O(n). The definitional
// oracle; refuses n beyond `cap` to keep accidental use cheap.
Rational dedekind_sum_naive(const CoprimePair& p,
                            unsigned long cap = kDefaultOracleCap);

// s(m,n) in O(log n) big-integer operations via reciprocity descent.
Rational dedekind_sum_fast(const CoprimePair& p);

// S(m,n) = 12 s(m,n), the normalization used throughout.
Rational big_s(const CoprimePair& p);

// Equivalent pair with m reduced into [1, n] (n > 1) or (0, 1).
CoprimePair normalize_arg(const CoprimePair& p);

}  // namespace dedekind
