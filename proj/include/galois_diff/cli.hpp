#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <atomic>
#include <vector>

#include <CLI11.hpp>

#include "boseck.hpp"
#include "exactnum.hpp"
#include "family.hpp"
#include "json_io.hpp"
#include "rep.hpp"
#include "structure.hpp"

namespace galois_diff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Grid points (p, q, l) for odd primes p <= p_max, q <= q_max, 1 <= l <= p-1, in sweep order.
inline std::vector<CurveParams> sweep_grid(std::int64_t p_max, std::int64_t q_max)
{
    std::vector<CurveParams> grid;
    for (std::int64_t p = 3; p <= p_max; p += 2) {
        if (!is_prime(p)) continue;
        for (std::int64_t q = 1; q <= q_max; ++q)
            for (std::int64_t l = 1; l <= p - 1; ++l) grid.push_back(params_from_ql(PrimeP(p), q, l));
    }
    return grid;
}

/// Worker count from GALOIS_DIFF_THREADS, default 1.
inline unsigned thread_count_from_env()
{
    const char* v = std::getenv("GALOIS_DIFF_THREADS");
    if (v == nullptr || *v == '\0') return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 1024) throw UsageError("GALOIS_DIFF_THREADS must be a positive integer");
    return static_cast<unsigned>(n);
}

/// verify_all over the grid; results come back in grid order whatever the thread count.
inline std::vector<DecompositionReport> run_sweep(const std::vector<CurveParams>& grid, unsigned threads)
{
    std::vector<std::optional<DecompositionReport>> slots(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) slots[i] = verify_all(grid[i]);
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    std::vector<DecompositionReport> out;
    out.reserve(grid.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// One deformation parameter: an integer, or p-1 colon-separated coordinates.
inline CycNum parse_coefficient(PrimeP p, const std::string& token)
{
    try {
        if (token.find(':') == std::string::npos) return CycNum(p, BigInt(token));
        std::vector<BigInt> coords;
        std::stringstream ss(token);
        std::string part;
        while (std::getline(ss, part, ':')) coords.emplace_back(part);
        return CycNum::from_coords(p, std::move(coords));
    } catch (const std::exception&) {
        throw UsageError("bad coefficient '" + token + "'");
    }
}

inline void print_report_table(std::ostream& out, const DecompositionReport& r)
{
    const auto& c = r.params;
    out << "p = " << c.pv() << ", m = " << c.m << " (q = " << c.q << ", l = " << c.l << ")\n";
    out << "genus " << r.genus << ", OSS parameters " << r.oss_dim << (r.degenerate ? ", degenerate" : "") << "\n\n";
    out << std::setw(4) << "nu" << std::setw(8) << "delta" << std::setw(8) << "rank" << std::setw(12) << "dim Om^nu" << " "
        << std::setw(15) << "eigen z^(nu+1)" << "\n";
    for (std::size_t nu = 0; nu < r.delta.size(); ++nu)
        out << std::setw(4) << nu << std::setw(8) << r.delta[nu] << std::setw(8) << nu + 1 << std::setw(12)
            << r.omega_dims[nu] << std::setw(16) << r.eigen_dims[nu] << "\n";
    out << "\nH^0(Omega) =";
    bool first = true;
    for (const auto& m : r.modules) {
        out << (first ? " " : " + ") << "V_" << m.a1 << "^" << m.multiplicity;
        first = false;
    }
    if (first) out << " 0";
    out << "\n\n";
    for (const auto& [name, ok] : r.checks) out << std::left << std::setw(18) << name << std::right << (ok ? "ok" : "FAILED") << "\n";
}

inline int cmd_analyze(std::int64_t p, std::int64_t m, bool as_json, std::ostream& out)
{
    const CurveParams c = make_params(PrimeP(p), m);
    const DecompositionReport r = verify_all(c);
    if (as_json)
        out << to_json_value(r).dump(2) << "\n";
    else
        print_report_table(out, r);
    return r.all_passed() ? kExitOk : kExitCheckFailed;
}

inline int cmd_sweep(std::int64_t p_max, std::int64_t q_max, bool as_json, std::ostream& out)
{
    if (p_max < 3 || !is_prime(p_max)) throw UsageError("--p-max must be an odd prime");
    if (q_max < 1) throw UsageError("--q-max must be at least 1");
    const auto grid = sweep_grid(p_max, q_max);
    const auto reports = run_sweep(grid, thread_count_from_env());

    std::size_t passed = 0;
    json failures = json::array();
    for (const auto& r : reports) {
        if (r.all_passed()) {
            ++passed;
        } else {
            failures.push_back(to_json_value(r));
        }
    }
    if (as_json) {
        out << json{{"cases", reports.size()}, {"passed", passed}, {"failures", failures}}.dump(2) << "\n";
    } else {
        for (const auto& f : failures)
            out << "FAILED p=" << f["p"] << " q=" << f["q"] << " l=" << f["l"] << "\n";
        out << reports.size() << " cases, " << passed << " passed\n";
    }
    return passed == reports.size() ? kExitOk : kExitCheckFailed;
}

inline std::vector<std::int64_t> parse_multiplicities(const CurveParams& c, const std::vector<std::int64_t>& given)
{
    return given.empty() ? default_multiplicities(c) : given;
}

inline int cmd_boseck(std::int64_t p, std::int64_t m, const std::vector<std::int64_t>& mult_flag, bool as_json,
                      std::ostream& out)
{
    const CurveParams c = make_params(PrimeP(p), m);
    const auto mult = parse_multiplicities(c, mult_flag);
    const BoseckTable t0 = family_boseck_table(c);
    const CharPTable tp = asfiber_exponents(c, mult);
    const ConductorReport cond = conductors(c, mult);
    const DivisorReport divs = divisors(c, mult);
    const BlockBasis blocks = block_split(c);

    const std::size_t n0 = boseck_basis(t0).size();
    const std::size_t np = charp_boseck_basis(tp).size();
    const bool ok = n0 == static_cast<std::size_t>(genus(c)) && np == n0 && tp.t_excluded == 0;

    if (as_json) {
        out << json{{"p", p},
                    {"m", m},
                    {"q", c.q},
                    {"l", c.l},
                    {"char0", to_json_value(t0)},
                    {"charp", to_json_value(tp)},
                    {"conductors", to_json_value(cond)},
                    {"divisors", to_json_value(divs)},
                    {"blocks", to_json_value(blocks)}}
                   .dump(2)
            << "\n";
    } else {
        out << "Kummer fiber y^" << p << " = lambda^" << p << " x^" << c.l << " + a(x)^" << p << "\n";
        out << std::setw(4) << "mu" << std::setw(8) << "t" << std::setw(10) << "m_1" << std::setw(10) << "count\n";
        for (const auto& r : t0.rows)
            out << std::setw(4) << r.mu << std::setw(8) << r.t << std::setw(10) << r.m.front() << std::setw(9)
                << std::max<std::int64_t>(r.t - 1, 0) << "\n";
        out << "basis size " << n0 << ", genus " << genus(c) << "\n\n";
        out << "Artin-Schreier fiber, multiplicities";
        for (auto v : mult) out << ' ' << v;
        out << "\n" << std::setw(4) << "mu" << std::setw(8) << "t" << std::setw(10) << "sum m_i" << "\n";
        for (const auto& r : tp.rows) out << std::setw(4) << r.mu << std::setw(8) << r.t << std::setw(10) << r.exponent_sum << "\n";
        out << "basis size " << np << ", t^(p-1) = " << tp.t_excluded << "\n\n";
        out << "conductors";
        for (auto v : cond.conductors) out << ' ' << v;
        out << "; different " << cond.different_sum << " vs (p-1)(m+1) = " << cond.expected
            << (cond.different_matches ? " (match)" : " (mismatch)") << "\n";
        out << "deg div(dx) = " << divs.dx.degree() << ", 2g-2 = " << 2 * divs.genus - 2 << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_matrices(std::int64_t p, std::int64_t a0, std::int64_t a1, bool as_json, std::ostream& out)
{
    const PrimeP pp(p);
    if (a1 < 0 || a1 > p - 2) throw UsageError("--a1 must lie in [0, p-2]");
    const RepMatrix rep = rep_matrix(a0, a1, pp);
    const RepMatrix sig = sigma_action_matrix(a0, a1, pp);
    const EquivalenceCertificate cert = certify_equivalence(rep, sig);
    const OrderReport ord = order_check(a1 + 1, pp);
    const CycNum one(pp, 1);
    const bool charpoly_ok = characteristic_polynomial(rep, one) == expected_charpoly(a0, a1, pp);
    const bool ok = cert.holds() && charpoly_ok && ord.holds(a1 + 1) &&
                    ord.rank_minus_identity == static_cast<std::size_t>(a1);

    if (as_json) {
        out << json{{"p", p},
                    {"a0", a0},
                    {"a1", a1},
                    {"binom", to_json_value(binom_matrix(a1 + 1))},
                    {"rep_matrix", to_json_value(rep)},
                    {"sigma_action_matrix", to_json_value(sig)},
                    {"checks",
                     {{"same_charpoly", cert.same_charpoly},
                      {"charpoly_is_product", charpoly_ok},
                      {"rep_indecomposable", cert.first_indecomposable},
                      {"sigma_indecomposable", cert.second_indecomposable},
                      {"same_power_traces", cert.same_power_traces},
                      {"binom_order_p", ord.holds(a1 + 1)}}}}
                   .dump(2)
            << "\n";
    } else {
        const auto print = [&out](const char* name, const RepMatrix& m) {
            out << name << ":\n";
            for (std::size_t i = 0; i < m.size(); ++i) {
                out << "  [";
                for (std::size_t j = 0; j < m.size(); ++j) out << (j ? ", " : "") << m(i, j);
                out << "]\n";
            }
        };
        print("rep_matrix", rep);
        print("sigma_action_matrix", sig);
        out << "same characteristic polynomial: " << (cert.same_charpoly ? "yes" : "no") << "\n";
        out << "single Jordan block mod lambda: " << (cert.first_indecomposable && cert.second_indecomposable ? "yes" : "no")
            << "\n";
        out << "A_" << a1 + 1 << " has order p mod p: " << (ord.holds(a1 + 1) ? "yes" : "no") << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

inline int cmd_fiber(std::int64_t p, std::int64_t m, const std::vector<std::string>& coeff_tokens,
                     std::optional<std::uint64_t> seed, std::int64_t denominator, bool as_json, std::ostream& out)
{
    const CurveParams c = make_params(PrimeP(p), m);
    std::optional<FamilyMember> member;
    bool smooth = false;
    int attempts = 0;

    if (seed) {
        if (!coeff_tokens.empty() || denominator != 1)
            throw UsageError("--seed excludes --a-coeffs and --denominator");
        std::mt19937_64 rng(*seed);
        for (attempts = 1; attempts <= 100; ++attempts) {
            member = random_member(c, rng);
            if ((smooth = smoothness_check(*member))) break;
        }
    } else {
        std::vector<CycNum> coeffs;
        if (coeff_tokens.empty()) {
            coeffs.assign(static_cast<std::size_t>(c.q), CycNum(c.p));
        } else {
            for (const auto& t : coeff_tokens) coeffs.push_back(parse_coefficient(c.p, t));
        }
        try {
            member = build_member(c, std::move(coeffs), BigInt(denominator));
        } catch (const BadSpecialization& e) {
            throw UsageError(e.what());
        }
        attempts = 1;
        smooth = smoothness_check(*member);
    }

    bool reduced = false;
    std::string reduction_error;
    std::optional<ASReduction> red;
    if (member->integral()) {
        try {
            red = as_reduction(*member);
            reduced = true;
        } catch (const ReductionMismatch& e) {
            reduction_error = e.what();
        }
    } else {
        reduction_error = "not applicable to non-integral parameters";
    }
    const BasisMatch bm = basis_match(c);
    const bool ok = smooth && (reduced || !member->integral()) && bm.matched && bm.final_count_matches;

    if (as_json) {
        json coeffs = json::array();
        for (const auto& x : member->a_coeffs) coeffs.push_back(to_json_value(x));
        json j{{"p", p},
               {"m", m},
               {"q", c.q},
               {"l", c.l},
               {"a_coeffs", coeffs},
               {"denominator", member->denominator.str()},
               {"attempts", attempts},
               {"smooth", smooth},
               {"reduction_ok", reduced},
               {"basis_match", bm.matched && bm.final_count_matches},
               {"basis_counts", bm.charp_counts}};
        if (red) {
            j["lhs"] = to_json_value(red->lhs);
            j["rhs_numerator"] = to_json_value(red->rhs_numerator);
            j["rhs_denominator"] = to_json_value(red->rhs_denominator);
        }
        out << j.dump(2) << "\n";
    } else {
        if (member->integral())
            out << "a(x) = " << member->a << "\n";
        else
            out << denominator << "^" << c.q << " a(x/" << denominator << ") = " << member->a << "\n";
        out << "generic fiber smooth: " << (smooth ? "yes" : "no") << "\n";
        if (red)
            out << "special fiber: X^" << p << " - X = x^" << c.l << " / (" << red->rhs_denominator << ")  confirmed\n";
        else if (member->integral())
            out << "special fiber: reduction FAILED: " << reduction_error << "\n";
        else
            out << "special fiber: " << reduction_error << "\n";
        out << "basis match (generic vs special): " << (bm.matched && bm.final_count_matches ? "yes" : "no") << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Galois-module structure of holomorphic differentials on p-cyclic covers", "galois_diff"};
    app.require_subcommand(1);

    std::int64_t p = 0, m = 0, p_max = 13, q_max = 5, a0 = 1, a1 = 0;
    bool as_json = false;
    std::vector<std::int64_t> mult;
    std::vector<std::string> coeffs;
    std::uint64_t seed = 0;
    std::int64_t denominator = 1;

    auto* analyze = app.add_subcommand("analyze", "decomposition report for one (p, m)");
    analyze->add_option("-p", p, "odd prime")->required();
    analyze->add_option("-m", m, "conductor, not divisible by p")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");

    auto* sweep = app.add_subcommand("sweep", "verify every grid point");
    sweep->add_option("--p-max", p_max, "largest prime (must itself be an odd prime)");
    sweep->add_option("--q-max", q_max, "largest q");
    sweep->add_flag("--json", as_json, "machine-readable output");

    auto* boseck = app.add_subcommand("boseck", "Boseck tables on both fibers");
    boseck->add_option("-p", p, "odd prime")->required();
    boseck->add_option("-m", m, "conductor")->required();
    boseck->add_option("--mult", mult, "multiplicity profile of a(x), designated branch first")->delimiter(',');
    boseck->add_flag("--json", as_json, "machine-readable output");

    auto* matrices = app.add_subcommand("matrices", "representation matrices of V_{a0,a1}");
    matrices->add_option("-p", p, "odd prime")->required();
    matrices->add_option("--a0", a0, "starting exponent");
    matrices->add_option("--a1", a1, "length, 0 <= a1 <= p-2");
    matrices->add_flag("--json", as_json, "machine-readable output");

    auto* fiber = app.add_subcommand("fiber", "build a member and check both fibers");
    fiber->add_option("-p", p, "odd prime")->required();
    fiber->add_option("-m", m, "conductor")->required();
    fiber->add_option("--a-coeffs", coeffs, "x_1..x_q; integers or colon-separated zeta coordinates")
        ->delimiter(',');
    fiber->add_option("--denominator", denominator, "common denominator c of the parameters x_i = n_i / c")
        ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
    auto* seed_opt = fiber->add_option("--seed", seed, "draw random small-integer parameters");
    fiber->add_flag("--json", as_json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(p, m, as_json, out);
        if (*sweep) return cmd_sweep(p_max, q_max, as_json, out);
        if (*boseck) return cmd_boseck(p, m, mult, as_json, out);
        if (*matrices) return cmd_matrices(p, a0, a1, as_json, out);
        if (*fiber)
            return cmd_fiber(p, m, coeffs, *seed_opt ? std::optional<std::uint64_t>(seed) : std::nullopt,
                             denominator, as_json, out);
    } catch (const ConductorDivisible& e) {
        err << "ConductorDivisible: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

} // namespace galois_diff::cli
