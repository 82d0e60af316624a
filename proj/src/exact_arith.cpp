#include "dedekind/exact_arith.hpp"

#include <cctype>

namespace dedekind {

BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

ExtendedGcd extended_gcd(const BigInt& a, const BigInt& b)
{
    ExtendedGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& modulus)
{
    if (modulus < 1)
        throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (modulus == 1)
        return 0;
    BigInt w;
    if (mpz_invert(w.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw NotCoprime("mod_inverse: arguments are not coprime");
    return w;  // mpz_invert already yields the representative in [0, modulus)
}

Rational rat_div(const Rational& a, const Rational& b)
{
    if (b == 0)
        throw DivisionByZero{};
    return a / b;
}

BigInt rat_floor(const Rational& x)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DivisionByZero{};
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

BigInt parse_digits(std::string_view s)
{
    return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad rational: " + std::string(text));
        value = make_rational(parse_digits(num), parse_digits(den));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ipart = s.substr(0, dot);
        std::string_view fpart = s.substr(dot + 1);
        if (!all_digits(ipart) || !all_digits(fpart))
            throw ParseError("bad decimal: " + std::string(text));
        BigInt scale = 1;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fpart.size());
        value = make_rational(parse_digits(ipart) * scale + parse_digits(fpart),
                              scale);
    } else {
        if (!all_digits(s))
            throw ParseError("bad integer: " + std::string(text));
        value = Rational(parse_digits(s));
    }
    return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string render_decimal(const Rational& x, std::size_t digits)
{
    BigInt a = abs(x.get_num());
    const BigInt& b = x.get_den();

    std::string out;
    if (sgn(x) < 0)
        out += '-';

    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out += q.get_str();

    if (digits > 0) {
        out += '.';
        for (std::size_t i = 0; i < digits; ++i) {
            rem *= 10;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(),
                        b.get_mpz_t());
            out += static_cast<char>('0' + q.get_ui());
        }
    }
    if (rem != 0)
        out += "...";
    return out;
}

}  // namespace dedekind
