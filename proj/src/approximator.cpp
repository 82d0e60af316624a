#include "dedekind/approximator.hpp"

namespace dedekind {

namespace {

BigInt rat_ceil(const Rational& x)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

}  // namespace

Rational Decomposition::target() const
{
    return l - 3 - make_rational(j, k);
}

Decomposition decompose(const Rational& x)
{
    if (x < -3)
        throw BelowRange("decompose: target below -3");
    Rational y = x + 3;  // y >= 0
    BigInt l = rat_floor(y) + 1;
    Rational frac = l - y;  // in (0, 1]
    return {std::move(l), BigInt(frac.get_num()), BigInt(frac.get_den())};
}

BigInt choose_m(const Decomposition& dec, const Rational& epsilon)
{
    if (epsilon <= 0)
        throw InvalidEpsilon("choose_m: epsilon must be > 0");
    BigInt m = rat_ceil(rat_div(2, dec.k * epsilon) + 1);
    if (dec.k > 1) {
        BigInt rho = mod_inverse(dec.j, dec.k);
        BigInt gap;
        mpz_fdiv_r(gap.get_mpz_t(), BigInt(rho - m).get_mpz_t(),
                   dec.k.get_mpz_t());
        m += gap;
    }
    return m;
}

namespace {

ApproximationPlan build_plan_impl(const Rational& x, const Rational& epsilon,
                                  const BigInt* forced_m)
{
    if (epsilon <= 0)
        throw InvalidEpsilon("build_plan: epsilon must be > 0");

    const bool negated = x < -3;
    const Rational side = negated ? Rational(-x) : x;

    Decomposition dec = decompose(side);
    BigInt m;
    if (forced_m != nullptr) {
        m = *forced_m;
        if (Rational(m) < rat_div(2, dec.k * epsilon) + 1)
            throw std::invalid_argument("build_plan: m below 2/(k*eps)+1");
        if ((m * dec.j - 1) % dec.k != 0)
            throw std::invalid_argument("build_plan: m*j != 1 mod k");
    } else {
        m = choose_m(dec, epsilon);
    }

    BigInt msq1 = m * m + 1;
    BigInt n = dec.k * msq1;
    BigInt t = 2 * m + dec.l * n - dec.j * msq1;
    BigInt M = m * t + 1;
    BigInt N = n * t;

    if (t <= 0 || gcd(M, N) != 1)
        throw PlanInconsistent("build_plan: parameter sanity check failed");

    return {std::move(dec), std::move(m), std::move(n), std::move(t),
            std::move(M), std::move(N), negated, x, epsilon};
}

}  // namespace

ApproximationPlan build_plan(const Rational& x, const Rational& epsilon)
{
    return build_plan_impl(x, epsilon, nullptr);
}

ApproximationPlan build_plan(const Rational& x, const Rational& epsilon,
                             const BigInt& forced_m)
{
    return build_plan_impl(x, epsilon, &forced_m);
}

Rational predicted_error(const ApproximationPlan& plan)
{
    return make_rational(2 * plan.m, plan.n) + make_rational(2, plan.N);
}

PlanEvaluation evaluate_plan(const ApproximationPlan& plan)
{
    Rational value =
        big_s(CoprimePair(plan.negated ? BigInt(-plan.M) : plan.M, plan.N));
    Rational error = value - plan.target;

    Rational surplus = predicted_error(plan);
    Rational expected = plan.negated ? Rational(-surplus) : surplus;
    if (error != expected)
        throw PlanInconsistent("evaluate_plan: error != 2m/n + 2/(nt)");
    if (!(abs(error) < plan.epsilon) || surplus <= 0)
        throw PlanInconsistent("evaluate_plan: error not inside (0, epsilon)");
    return {std::move(value), std::move(error)};
}

}  // namespace dedekind
