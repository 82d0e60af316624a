// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>

#include "dedekind/approximator.hpp"
#include "dedekind/dedekind_core.hpp"
#include "dedekind/identities.hpp"
#include "dedekind/verify.hpp"

using namespace dedekind;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool ok, double seconds)
{
    std::printf("criterion %d (%s): %s  [%.2f s]\n", number, name,
                ok ? "PASS" : "FAIL", seconds);
    if (!ok)
        ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

void criterion1_golden_example()
{
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
        auto plan = build_plan(make_rational(7, 11), make_rational(1, 100));
        ok = ok && plan.decomposition.j == 4 && plan.decomposition.k == 11 &&
             plan.decomposition.l == 4;
        ok = ok && plan.m == 25 && plan.n == 6886 && plan.t == 25090;
        ok = ok && plan.M == 627251 && plan.N == 172769740 && !plan.negated;

        auto eval = evaluate_plan(plan);
        ok = ok && render_decimal(eval.value, 7).starts_with("0.6436247");
        ok = ok && eval.error > 0 && eval.error < make_rational(1, 100);
        ok = ok && abs(eval.error - make_rational(73, 10000)) <
                       make_rational(1, 10000);
    } catch (const std::exception&) {
        ok = false;
    }
    double secs = seconds_since(start);
    report(1, "paper example 7/11, eps=1/100", ok && secs < 1.0, secs);
}

void criterion2_oracle_equivalence()
{
    auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.max_n = 200;
    opts.trials = 500;
    SuiteReport rep = run_oracle_suite(opts);
    double secs = seconds_since(start);
    report(2, "fast = naive oracle", rep.passed() && secs < 60.0, secs);
}

void criterion3_theorem2()
{
    auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.trials = 200;
    SuiteReport rep = run_theorem2_suite(opts);
    double secs = seconds_since(start);
    report(3, "closed form S(mt+1,nt)", rep.passed() && secs < 30.0, secs);
}

void criterion4_three_term()
{
    auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.trials = 1000;
    SuiteReport rep = run_three_term_suite(opts);
    double secs = seconds_since(start);
    report(4, "three-term relation", rep.passed() && secs < 60.0, secs);
}

void criterion5_sweep()
{
    auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.trials = 500;
    SuiteReport rep = run_sweep_suite(opts);
    double secs = seconds_since(start);

    // the fast kernel must evaluate the paper-example pair in < 10 ms
    auto t0 = std::chrono::steady_clock::now();
    Rational s = big_s(CoprimePair(BigInt(627251), BigInt(172769740)));
    double fast_ms = seconds_since(t0) * 1000.0;
    bool fast_ok =
        s == make_rational(55599441, 86384870) && fast_ms < 10.0;

    report(5, "approximation sweep + fast kernel",
           rep.passed() && secs < 120.0 && fast_ok, secs);
}

void criterion6_symmetries()
{
    auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.trials = 1000;
    bool ok = true;
    for (const auto& rep : run_properties_suite(opts))
        ok = ok && rep.passed();
    report(6, "periodicity/negation/inverse", ok, seconds_since(start));
}

}  // namespace

int main()
{
    criterion1_golden_example();
    criterion2_oracle_equivalence();
    criterion3_theorem2();
    criterion4_three_term();
    criterion5_sweep();
    criterion6_symmetries();

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
