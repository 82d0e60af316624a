#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dedekind/approximator.hpp"

using namespace dedekind;

TEST_CASE("decompose")
{
    auto d = decompose(make_rational(7, 11));
    CHECK(d.l == 4);
    CHECK(d.j == 4);
    CHECK(d.k == 11);
    CHECK(d.target() == make_rational(7, 11));

    d = decompose(Rational(-3));
    CHECK(d.l == 1);
    CHECK(d.j == 1);
    CHECK(d.k == 1);

    d = decompose(make_rational(5, 2));
    CHECK(d.l == 6);
    CHECK(d.j == 1);
    CHECK(d.k == 2);

    CHECK_THROWS_AS(decompose(make_rational(-31, 10)), BelowRange);
}

TEST_CASE("decompose round trip")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> ldist(1, 100);
    std::uniform_int_distribution<long> kdist(1, 1000);
    for (int i = 0; i < 300; ++i) {
        long l = ldist(rng);
        long k = kdist(rng);
        long j = std::uniform_int_distribution<long>(1, k)(rng);
        if (gcd(j, k) != 1)
            continue;
        if (j < k || j == k) {
            Decomposition dec{l, j, k};
            if (j == k && k != 1)
                continue;  // j/k in lowest terms forces j=k only for k=1
            auto back = decompose(dec.target());
            CHECK(back.l == dec.l);
            CHECK(back.j == dec.j);
            CHECK(back.k == dec.k);
        }
    }
}

TEST_CASE("choose_m")
{
    CHECK(choose_m({4, 4, 11}, make_rational(1, 100)) == 25);
    CHECK(choose_m({1, 1, 1}, make_rational(1, 2)) == 5);
    CHECK(choose_m({1, 3, 7}, make_rational(1, 10)) == 5);
    CHECK_THROWS_AS(choose_m({1, 1, 1}, Rational(0)), InvalidEpsilon);
}

TEST_CASE("choose_m minimality")
{
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> kdist(1, 200);
    std::uniform_int_distribution<long> edist(1, 6);
    for (int i = 0; i < 200; ++i) {
        long k = kdist(rng);
        long j = std::uniform_int_distribution<long>(1, k)(rng);
        if (gcd(j, k) != 1 || (j == k && k != 1))
            continue;
        Decomposition dec{1, j, k};
        Rational eps = make_rational(1, 1L << edist(rng));
        BigInt m = choose_m(dec, eps);
        Rational bound = rat_div(2, dec.k * eps) + 1;
        CHECK(Rational(m) >= bound);
        CHECK((m * dec.j - 1) % dec.k == 0);
        // the previous admissible candidate m - k must sit below the bound
        BigInt prev = m - dec.k;
        bool prev_ok = Rational(prev) >= bound && (prev * dec.j - 1) % dec.k == 0;
        CHECK_FALSE(prev_ok);
    }
}

TEST_CASE("build_plan paper example")
{
    auto plan = build_plan(make_rational(7, 11), make_rational(1, 100));
    CHECK(plan.decomposition.j == 4);
    CHECK(plan.decomposition.k == 11);
    CHECK(plan.decomposition.l == 4);
    CHECK(plan.m == 25);
    CHECK(plan.n == 6886);
    CHECK(plan.t == 25090);
    CHECK(plan.M == 627251);
    CHECK(plan.N == 172769740);
    CHECK_FALSE(plan.negated);

    auto eval = evaluate_plan(plan);
    CHECK(eval.value == make_rational(55599441, 86384870));
    CHECK(eval.error == make_rational(627251, 86384870));
    CHECK(eval.error == predicted_error(plan));
}

TEST_CASE("build_plan at the lower boundary")
{
    auto plan = build_plan(Rational(-3), Rational(1));
    CHECK(plan.decomposition.l == 1);
    CHECK(plan.decomposition.j == 1);
    CHECK(plan.decomposition.k == 1);
    CHECK(plan.m == 3);
    CHECK(plan.n == 10);
    CHECK(plan.t == 6);
    CHECK(plan.M == 19);
    CHECK(plan.N == 60);
    CHECK_FALSE(plan.negated);
    CHECK(predicted_error(plan) == make_rational(19, 30));

    auto eval = evaluate_plan(plan);
    CHECK(12 * dedekind_sum_naive(CoprimePair(19, 60)) == eval.value);
    CHECK(eval.error == make_rational(19, 30));
}

TEST_CASE("targets in [-3, 0) stay on the direct path")
{
    auto plan = build_plan(make_rational(-7, 11), make_rational(1, 100));
    CHECK_FALSE(plan.negated);
    CHECK(plan.decomposition.l == 3);
    CHECK(plan.decomposition.j == 7);
    CHECK(plan.decomposition.k == 11);
    auto eval = evaluate_plan(plan);
    CHECK(eval.error > 0);
    CHECK(eval.error < make_rational(1, 100));
}

TEST_CASE("build_plan negated below -3")
{
    auto plan = build_plan(make_rational(-7, 2), make_rational(1, 10));
    CHECK(plan.negated);
    CHECK(plan.target == make_rational(-7, 2));

    auto mirror = build_plan(make_rational(7, 2), make_rational(1, 10));
    CHECK(plan.m == mirror.m);
    CHECK(plan.M == mirror.M);
    CHECK(plan.N == mirror.N);

    auto eval = evaluate_plan(plan);
    CHECK(eval.value == -evaluate_plan(mirror).value);
    CHECK(eval.error < 0);
    CHECK(eval.error > make_rational(-1, 10));
    CHECK(eval.error == -predicted_error(plan));
}

TEST_CASE("build_plan rejects bad epsilon")
{
    CHECK_THROWS_AS(build_plan(Rational(1), Rational(0)), InvalidEpsilon);
    CHECK_THROWS_AS(build_plan(Rational(1), Rational(-1)), InvalidEpsilon);
}

TEST_CASE("forced m")
{
    // next admissible m after the minimal 25 is 36
    auto plan = build_plan(make_rational(7, 11), make_rational(1, 100),
                           BigInt(36));
    CHECK(plan.m == 36);
    CHECK_NOTHROW(evaluate_plan(plan));

    CHECK_THROWS_AS(build_plan(make_rational(7, 11), make_rational(1, 100),
                               BigInt(26)),
                    std::invalid_argument);  // wrong residue mod 11
    CHECK_THROWS_AS(build_plan(make_rational(7, 11), make_rational(1, 100),
                               BigInt(14)),
                    std::invalid_argument);  // below the bound
}

TEST_CASE("predicted_error upper bound")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> pdist(-20, 20);
    std::uniform_int_distribution<long> qdist(1, 50);
    for (int i = 0; i < 100; ++i) {
        Rational x = make_rational(pdist(rng), qdist(rng));
        Rational eps = make_rational(1, qdist(rng));
        auto plan = build_plan(x, eps);
        Rational e = predicted_error(plan);
        const BigInt& m = plan.m;
        const BigInt& k = plan.decomposition.k;
        CHECK(e > 0);
        CHECK(e < make_rational(2 * m * m + 1, k * m * m * m));
        CHECK(e < eps);
    }
}

TEST_CASE("inverse construction congruence")
{
    // -m + j*n/k is an integer inverse of m mod n for every plan
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> pdist(-60, 60);
    std::uniform_int_distribution<long> qdist(1, 40);
    for (int i = 0; i < 100; ++i) {
        Rational x = make_rational(pdist(rng), qdist(rng));
        auto plan = build_plan(x, make_rational(1, 1000));
        const BigInt& k = plan.decomposition.k;
        const BigInt& j = plan.decomposition.j;
        CHECK(plan.n % k == 0);
        BigInt w = -plan.m + j * (plan.n / k);
        BigInt residue = plan.m * w % plan.n;
        if (residue < 0)
            residue += plan.n;
        CHECK(residue == 1 % plan.n);
        CHECK(plan.t > 0);
    }
}
