#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dedekind/approximator.hpp"
#include "dedekind/dedekind_core.hpp"
#include "dedekind/exact_arith.hpp"
#include "dedekind/verify.hpp"

namespace {

using nlohmann::json;
using namespace dedekind;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

struct SumArgs {
    std::string m, n;
    bool raw = false;
    bool naive = false;
    std::size_t digits = 12;
    unsigned long oracle_cap = kDefaultOracleCap;
};

int run_sum(const SumArgs& args, bool as_json)
{
    BigInt m, n;
    try {
        m = BigInt(args.m);
        n = BigInt(args.n);
    } catch (const std::invalid_argument&) {
        std::cerr << "error: M and N must be integers\n";
        return kExitUsage;
    }

    auto start = std::chrono::steady_clock::now();
    Rational s;
    try {
        CoprimePair pair(m, n);
        s = args.naive ? dedekind_sum_naive(pair, args.oracle_cap)
                       : dedekind_sum_fast(pair);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    Rational big = 12 * s;
    double ms = elapsed_ms(start);
    const char* evaluator = args.naive ? "naive" : "fast";

    if (as_json) {
        json out{{"command", "sum"},
                 {"m", m.get_str()},
                 {"n", n.get_str()},
                 {"S", to_fraction_string(big)},
                 {"S_decimal", render_decimal(big, args.digits)},
                 {"evaluator", evaluator},
                 {"time_ms", ms}};
        if (args.raw) {
            out["s"] = to_fraction_string(s);
            out["s_decimal"] = render_decimal(s, args.digits);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "S = " << to_fraction_string(big) << "\n"
                  << "S ≈ " << render_decimal(big, args.digits)
                  << " (truncated)\n";
        if (args.raw)
            std::cout << "s = " << to_fraction_string(s) << "\n";
        std::cout << "evaluator = " << evaluator << "\n"
                  << "time_ms = " << ms << "\n";
    }
    return kExitOk;
}

struct ApproxArgs {
    std::string x, eps;
    std::string forced_m;
    std::size_t digits = 12;
};

int run_approx(const ApproxArgs& args, bool as_json)
{
    Rational x, eps;
    try {
        x = parse_rational(args.x);
        eps = parse_rational(args.eps);
        if (eps <= 0)
            throw InvalidEpsilon("epsilon must be > 0");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto start = std::chrono::steady_clock::now();
    ApproximationPlan plan;
    PlanEvaluation eval;
    try {
        plan = args.forced_m.empty()
                   ? build_plan(x, eps)
                   : build_plan(x, eps, BigInt(args.forced_m));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    bool verdict = true;
    try {
        eval = evaluate_plan(plan);
    } catch (const PlanInconsistent& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        verdict = false;
    }
    double ms = elapsed_ms(start);

    BigInt reported_m = plan.negated ? BigInt(-plan.M) : plan.M;
    std::size_t n_bits = mpz_sizeinbase(plan.N.get_mpz_t(), 2);

    if (as_json) {
        json out{{"command", "approx"},
                 {"target", to_fraction_string(x)},
                 {"epsilon", to_fraction_string(eps)},
                 {"j", plan.decomposition.j.get_str()},
                 {"k", plan.decomposition.k.get_str()},
                 {"l", plan.decomposition.l.get_str()},
                 {"m", plan.m.get_str()},
                 {"n", plan.n.get_str()},
                 {"t", plan.t.get_str()},
                 {"M", plan.M.get_str()},
                 {"N", plan.N.get_str()},
                 {"N_bits", n_bits},
                 {"negated", plan.negated},
                 {"pair", {reported_m.get_str(), plan.N.get_str()}},
                 {"verdict", verdict ? "PASS" : "FAIL"},
                 {"time_ms", ms}};
        if (verdict) {
            out["S"] = to_fraction_string(eval.value);
            out["S_decimal"] = render_decimal(eval.value, args.digits);
            out["error"] = to_fraction_string(eval.error);
            out["error_decimal"] = render_decimal(eval.error, args.digits);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "target = " << to_fraction_string(x) << "\n"
                  << "epsilon = " << to_fraction_string(eps) << "\n"
                  << "j = " << plan.decomposition.j << "\n"
                  << "k = " << plan.decomposition.k << "\n"
                  << "l = " << plan.decomposition.l << "\n"
                  << "m = " << plan.m << "\n"
                  << "n = " << plan.n << "\n"
                  << "t = " << plan.t << "\n"
                  << "M = " << plan.M << "\n"
                  << "N = " << plan.N << " (" << n_bits << " bits)\n"
                  << "negated = " << (plan.negated ? "true" : "false") << "\n"
                  << "pair = (" << reported_m << ", " << plan.N << ")\n";
        if (verdict) {
            std::cout << "S = " << to_fraction_string(eval.value) << "\n"
                      << "S ≈ " << render_decimal(eval.value, args.digits)
                      << " (truncated)\n"
                      << "error = " << to_fraction_string(eval.error) << "\n"
                      << "error ≈ " << render_decimal(eval.error, args.digits)
                      << " (truncated)\n";
            if (plan.negated)
                std::cout << "note: target below -3, approximated from below\n";
        }
        std::cout << "verdict = " << (verdict ? "PASS" : "FAIL") << "\n"
                  << "time_ms = " << ms << "\n";
    }
    return verdict ? kExitOk : kExitFail;
}

struct VerifyArgs {
    std::string suite;
    long trials = 1000;
    std::uint64_t seed = 42;
    long max_n = 200;
};

int run_verify(const VerifyArgs& args, bool as_json)
{
    VerifyOptions opts;
    opts.trials = args.trials;
    opts.seed = args.seed;
    opts.max_n = args.max_n;

    std::vector<SuiteReport> reports;
    if (args.suite == "oracle")
        reports.push_back(run_oracle_suite(opts));
    else if (args.suite == "theorem2")
        reports.push_back(run_theorem2_suite(opts));
    else if (args.suite == "three-term")
        reports.push_back(run_three_term_suite(opts));
    else if (args.suite == "properties")
        reports = run_properties_suite(opts);
    else if (args.suite == "sweep")
        reports.push_back(run_sweep_suite(opts));
    else if (args.suite == "all")
        reports = run_all_suites(opts);
    else {
        std::cerr << "error: unknown suite '" << args.suite
                  << "' (expected oracle|theorem2|three-term|properties|sweep|all)\n";
        return kExitUsage;
    }

    bool all_pass = true;
    for (const auto& r : reports)
        all_pass = all_pass && r.passed();

    if (as_json) {
        json suites = json::array();
        for (const auto& r : reports)
            suites.push_back({{"suite", r.name},
                              {"trials", r.total},
                              {"failures", r.failures},
                              {"passed", r.passed()}});
        json out{{"command", "verify"},
                 {"seed", args.seed},
                 {"suites", suites},
                 {"verdict", all_pass ? "PASS" : "FAIL"}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports)
            std::cout << "suite " << r.name << ": " << (r.total - r.failures)
                      << "/" << r.total << " exact\n";
        std::cout << "verdict = " << (all_pass ? "PASS" : "FAIL") << "\n";
    }
    return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Dedekind sums: evaluation, rational approximation, "
                 "identity verification"};
    app.require_subcommand(1);
    app.fallthrough();  // inherited: --json may follow the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    SumArgs sum_args;
    auto* sum = app.add_subcommand("sum", "evaluate S(M, N) = 12 s(M, N)");
    sum->add_option("M", sum_args.m)->required();
    sum->add_option("N", sum_args.n)->required();
    sum->add_flag("--raw", sum_args.raw, "also print the raw sum s(M, N)");
    sum->add_flag("--naive", sum_args.naive, "use the O(n) definitional oracle");
    sum->add_option("--digits", sum_args.digits, "decimal digits (default 12)");
    sum->add_option("--oracle-cap", sum_args.oracle_cap,
                    "max n accepted by --naive");

    ApproxArgs approx_args;
    auto* approx = app.add_subcommand(
        "approx", "construct (M, N) with |S(M, N) - x| < eps");
    approx->add_option("x", approx_args.x, "rational target")->required();
    approx->add_option("eps", approx_args.eps, "tolerance, rational > 0")
        ->required();
    approx->add_option("--m", approx_args.forced_m,
                       "use this m instead of the minimal admissible one");
    approx->add_option("--digits", approx_args.digits,
                       "decimal digits (default 12)");

    VerifyArgs verify_args;
    auto* verify =
        app.add_subcommand("verify", "run an exact-identity verification suite");
    verify->add_option("suite", verify_args.suite,
                       "oracle|theorem2|three-term|properties|sweep|all")
        ->required();
    verify->add_option("--trials", verify_args.trials, "random trials per suite");
    verify->add_option("--seed", verify_args.seed, "RNG seed");
    verify->add_option("--max-n", verify_args.max_n,
                       "exhaustive range for the oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (sum->parsed())
        return run_sum(sum_args, as_json);
    if (approx->parsed())
        return run_approx(approx_args, as_json);
    return run_verify(verify_args, as_json);
}
