#include "kfib/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kfib/bench.hpp"
#include "kfib/closed_forms.hpp"
#include "kfib/error.hpp"
#include "kfib/identities.hpp"
#include "kfib/sequences.hpp"
#include "kfib/sums.hpp"

namespace kfib {

namespace {

using nlohmann::json;

// Big values are always serialized as decimal strings; a JSON number would
// silently lose precision long before F_{1,10^6}.

bool is_json(const std::string& fmt) { return fmt == "json"; }

std::string entry_text(const Int& num, unsigned scale) {
    if (scale == 0) return num.to_string();
    return num.to_string() + "/" + Int(1).shifted_left(scale).to_string();
}

std::string matrix_text(const Mat2& m) {
    unsigned s = m.scale();
    return "[[" + entry_text(m.n00(), s) + "," + entry_text(m.n01(), s) + "],[" +
           entry_text(m.n10(), s) + "," + entry_text(m.n11(), s) + "]]";
}

json matrix_json(const Mat2& m) {
    json entries = json::array();
    entries.push_back(json::array({m.n00().to_string(), m.n01().to_string()}));
    entries.push_back(json::array({m.n10().to_string(), m.n11().to_string()}));
    return json{{"denominator", Int(1).shifted_left(m.scale()).to_string()},
                {"entries", entries}};
}

int do_compute(int k, std::int64_t n, bool want_lucas, const std::string& fmt,
               std::ostream& out) {
    Int value = want_lucas ? lucas(k, n) : fib(k, n);
    if (is_json(fmt)) {
        json j{{"k", k},
               {"n", n},
               {"kind", want_lucas ? "lucas" : "fibonacci"},
               {"value", value.to_string()}};
        out << j.dump() << "\n";
    } else {
        out << value.to_string() << "\n";
    }
    return 0;
}

int do_matpow(int k, int a, std::uint64_t n, const std::string& which, const std::string& fmt,
              std::ostream& out, std::ostream& err) {
    Params p(k, a);
    bool use_r = which == "r";
    Mat2 closed = use_r ? r_power_closed(p, n) : s_power_closed(p, n);
    Mat2 powered = mat_pow(use_r ? r_matrix(p) : s_matrix(p), n);
    bool consistent = closed == powered;
    if (is_json(fmt)) {
        json j = matrix_json(closed);
        j["k"] = k;
        j["a"] = a;
        j["n"] = n;
        j["matrix"] = which;
        j["consistent"] = consistent;
        out << j.dump() << "\n";
    } else {
        out << matrix_text(closed) << (consistent ? " CONSISTENT" : " INCONSISTENT") << "\n";
    }
    if (!consistent) {
        err << "matpow: closed form disagrees with binary powering: " << closed.to_string()
            << " vs " << powered.to_string() << "\n";
        return 3;
    }
    return 0;
}

int do_sum(int k, int a, std::int64_t n, bool alternating, const std::string& method,
           const std::string& fmt, std::ostream& out) {
    Params p(k, a);
    const char* kind = alternating ? "alternating" : "plain";
    Int den = alternating ? alt_denominator(p) : plain_denominator(p);
    if (method == "both") {
        SumResult closed = alternating ? alt_sum_arith_closed(p, n) : sum_arith_closed(p, n);
        Int naive = alternating ? alt_sum_arith_naive(p, n) : sum_arith_naive(p, n);
        bool match = closed.value == naive;
        if (is_json(fmt)) {
            json j{{"k", k},
                   {"a", a},
                   {"n", n},
                   {"kind", kind},
                   {"method", "both"},
                   {"value", closed.value.to_string()},
                   {"naive_value", naive.to_string()},
                   {"denominator", closed.denominator.to_string()},
                   {"match", match}};
            out << j.dump() << "\n";
        } else {
            out << closed.value.to_string() << " " << naive.to_string() << " "
                << (match ? "MATCH" : "MISMATCH") << "\n";
        }
        return match ? 0 : 1;
    }
    Int value;
    if (method == "naive") {
        value = alternating ? alt_sum_arith_naive(p, n) : sum_arith_naive(p, n);
    } else {
        value = (alternating ? alt_sum_arith_closed(p, n) : sum_arith_closed(p, n)).value;
    }
    if (is_json(fmt)) {
        json j{{"k", k},      {"a", a},
               {"n", n},      {"kind", kind},
               {"method", method}, {"value", value.to_string()},
               {"denominator", den.to_string()}};
        out << j.dump() << "\n";
    } else {
        out << value.to_string() << "\n";
    }
    return 0;
}

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<IdentityFailure> failures;
};

SuiteResult run_identity_suite(IdentityKind kind, const GridBounds& grid) {
    IdentityReport rep = verify_grid(kind, grid);
    return {std::string(identity_name(kind)), rep.checked, std::move(rep.failures)};
}

SuiteResult run_sum_suite(SumKind kind, const GridBounds& grid) {
    SuiteResult res;
    res.name = kind == SumKind::plain ? "sum-plain" : "sum-alternating";
    for (int k = 1; k <= grid.kmax; ++k) {
        for (int a = 1; a <= grid.amax; ++a) {
            Params p(k, a);
            for (std::int64_t n = 0; n <= grid.nmax; ++n) {
                ++res.checked;
                Int closed = (kind == SumKind::plain ? sum_arith_closed(p, n)
                                                     : alt_sum_arith_closed(p, n))
                                 .value;
                Int naive =
                    kind == SumKind::plain ? sum_arith_naive(p, n) : alt_sum_arith_naive(p, n);
                if (!(closed == naive)) res.failures.push_back({k, a, n, 0, closed, naive});
            }
        }
    }
    return res;
}

json suite_json(const SuiteResult& s) {
    json failures = json::array();
    for (const IdentityFailure& f : s.failures) {
        failures.push_back(json{{"k", f.k},
                                {"a", f.a},
                                {"n", f.n},
                                {"m", f.m},
                                {"lhs", f.lhs.to_string()},
                                {"rhs", f.rhs.to_string()}});
    }
    return json{{"identity", s.name}, {"checked", s.checked}, {"failures", failures}};
}

void suite_text(const SuiteResult& s, std::ostream& out) {
    out << "identity=" << s.name << " checked=" << s.checked << " failures=" << s.failures.size()
        << "\n";
    for (const IdentityFailure& f : s.failures) {
        out << "  failure k=" << f.k << " a=" << f.a << " n=" << f.n << " m=" << f.m
            << " lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
    }
}

json erratum_json(const std::vector<ErratumPoint>& points) {
    json arr = json::array();
    for (const ErratumPoint& pt : points) {
        json j{{"k", pt.params.k},
               {"a", pt.params.a},
               {"n", pt.n},
               {"numerator", pt.numerator.to_string()},
               {"denominator", pt.denominator.to_string()},
               {"oracle", pt.oracle.to_string()},
               {"divisible", pt.statement.has_value()}};
        if (pt.statement) j["statement"] = pt.statement->to_string();
        arr.push_back(j);
    }
    return json{{"points", arr}};
}

void erratum_text(const std::vector<ErratumPoint>& points, std::ostream& out) {
    out << "erratum-probe points=" << points.size() << "\n";
    for (const ErratumPoint& pt : points) {
        out << "  k=" << pt.params.k << " a=" << pt.params.a << " n=" << pt.n;
        if (pt.statement) {
            out << " statement=" << *pt.statement << " oracle=" << pt.oracle
                << " note=mismatch\n";
        } else {
            out << " numerator=" << pt.numerator << " denominator=" << pt.denominator
                << " oracle=" << pt.oracle << " note=inexact-division\n";
        }
    }
}

int do_verify(const std::string& identity, const GridBounds& grid, const std::string& fmt,
              std::ostream& out) {
    std::vector<SuiteResult> suites;
    bool all = identity == "all";
    bool probe = all || identity == "erratum-probe";
    if (all) {
        for (IdentityKind kind :
             {IdentityKind::catalan, IdentityKind::addition, IdentityKind::subtraction,
              IdentityKind::honsberger, IdentityKind::docagne, IdentityKind::matrix_recurrence}) {
            suites.push_back(run_identity_suite(kind, grid));
        }
        suites.push_back(run_sum_suite(SumKind::plain, grid));
        suites.push_back(run_sum_suite(SumKind::alternating, grid));
    } else if (identity == "sum-plain") {
        suites.push_back(run_sum_suite(SumKind::plain, grid));
    } else if (identity == "sum-alternating") {
        suites.push_back(run_sum_suite(SumKind::alternating, grid));
    } else if (auto kind = identity_from_name(identity)) {
        suites.push_back(run_identity_suite(*kind, grid));
    }
    std::vector<ErratumPoint> points;
    if (probe) points = erratum_scan(grid.kmax, grid.amax, grid.nmax);

    bool ok = std::all_of(suites.begin(), suites.end(),
                          [](const SuiteResult& s) { return s.failures.empty(); });
    if (is_json(fmt)) {
        if (suites.size() == 1 && !probe) {
            out << suite_json(suites[0]).dump() << "\n";
        } else {
            json j;
            json arr = json::array();
            for (const SuiteResult& s : suites) arr.push_back(suite_json(s));
            j["suites"] = arr;
            if (probe) j["erratum_probe"] = erratum_json(points);
            out << j.dump() << "\n";
        }
    } else {
        for (const SuiteResult& s : suites) suite_text(s, out);
        if (probe) erratum_text(points, out);
        out << (ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

int do_bench(int k, const std::vector<std::uint64_t>& ns, const std::vector<std::string>& names,
             int reps, const std::string& fmt, std::ostream& out) {
    std::vector<Strategy> strategies;
    for (const std::string& name : names) {
        if (name == "all") {
            strategies = {Strategy::iterative, Strategy::matrix_pow, Strategy::fast_doubling};
            break;
        }
        strategies.push_back(*strategy_from_name(name));
    }
    std::vector<BenchRecord> records = run_bench(k, ns, strategies, reps);
    if (is_json(fmt)) {
        json arr = json::array();
        for (const BenchRecord& r : records) {
            arr.push_back(json{{"strategy", strategy_name(r.strategy)},
                               {"k", r.k},
                               {"n", r.n},
                               {"millis", r.millis},
                               {"mults", r.mults},
                               {"digits", r.digits}});
        }
        out << json{{"records", arr}}.dump() << "\n";
    } else {
        out << std::left << std::setw(15) << "strategy" << std::right << std::setw(4) << "k"
            << std::setw(12) << "n" << std::setw(14) << "millis" << std::setw(12) << "mults"
            << std::setw(10) << "digits" << "\n";
        for (const BenchRecord& r : records) {
            out << std::left << std::setw(15) << strategy_name(r.strategy) << std::right
                << std::setw(4) << r.k << std::setw(12) << r.n << std::setw(14) << std::fixed
                << std::setprecision(3) << r.millis << std::setw(12) << r.mults << std::setw(10)
                << r.digits << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for k-step Fibonacci/Lucas sequences at stride-a indexes"};
    app.name("kfib");
    app.require_subcommand(1);

    int rc = 0;

    // compute
    auto* compute = app.add_subcommand("compute", "Print F_{k,n} (or L_{k,n}) exactly");
    int c_k = 1;
    std::int64_t c_n = 0;
    bool c_lucas = false;
    std::string c_fmt = "text";
    compute->add_option("--k", c_k, "Recurrence coefficient (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    compute->add_option("--n", c_n, "Index (may be negative)")->required();
    compute->add_flag("--lucas", c_lucas, "Print the companion Lucas value instead");
    compute->add_option("--format", c_fmt)->check(CLI::IsMember({"text", "json"}));
    compute->callback([&] { rc = do_compute(c_k, c_n, c_lucas, c_fmt, out); });

    // matpow
    auto* matpow = app.add_subcommand(
        "matpow", "n-th stride-matrix power, closed form cross-checked against binary powering");
    int m_k = 1, m_a = 1;
    std::uint64_t m_n = 0;
    std::string m_matrix, m_fmt = "text";
    matpow->add_option("--k", m_k)->required()->check(CLI::PositiveNumber);
    matpow->add_option("--a", m_a, "Index stride (>= 1)")->required()->check(CLI::PositiveNumber);
    matpow->add_option("--n", m_n, "Exponent (>= 0)")->required();
    matpow->add_option("--matrix", m_matrix, "Which stride matrix: r (integer) or s (half-integer)")
        ->required()
        ->check(CLI::IsMember({"r", "s"}));
    matpow->add_option("--format", m_fmt)->check(CLI::IsMember({"text", "json"}));
    matpow->callback([&] { rc = do_matpow(m_k, m_a, m_n, m_matrix, m_fmt, out, err); });

    // sum
    auto* sum = app.add_subcommand("sum", "Sum of F_{k,ai} for i in [0, n], plain or alternating");
    int s_k = 1, s_a = 1;
    std::int64_t s_n = 0;
    bool s_alt = false;
    std::string s_method = "closed", s_fmt = "text";
    sum->add_option("--k", s_k)->required()->check(CLI::PositiveNumber);
    sum->add_option("--a", s_a)->required()->check(CLI::PositiveNumber);
    sum->add_option("--n", s_n, "Upper summation index (>= 0)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sum->add_flag("--alternating", s_alt, "Alternating-sign sum");
    sum->add_option("--method", s_method)->check(CLI::IsMember({"closed", "naive", "both"}));
    sum->add_option("--format", s_fmt)->check(CLI::IsMember({"text", "json"}));
    sum->callback([&] { rc = do_sum(s_k, s_a, s_n, s_alt, s_method, s_fmt, out); });

    // verify
    auto* verify = app.add_subcommand("verify", "Grid-verify the identity and sum suites");
    std::string v_identity = "all", v_fmt = "text";
    GridBounds v_grid{4, 5, 20, 20};
    verify->add_option("--identity", v_identity)
        ->check(CLI::IsMember({"catalan", "addition", "subtraction", "honsberger", "docagne",
                               "matrix-recurrence", "sum-plain", "sum-alternating",
                               "erratum-probe", "all"}));
    verify->add_option("--k-max", v_grid.kmax)->check(CLI::PositiveNumber);
    verify->add_option("--a-max", v_grid.amax)->check(CLI::PositiveNumber);
    verify->add_option("--n-max", v_grid.nmax)->check(CLI::PositiveNumber);
    verify->add_option("--m-max", v_grid.mmax)->check(CLI::PositiveNumber);
    verify->add_option("--format", v_fmt)->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] { rc = do_verify(v_identity, v_grid, v_fmt, out); });

    // bench
    auto* bench = app.add_subcommand("bench", "Compare evaluation strategies for F_{k,n}");
    int b_k = 1, b_reps = 3;
    std::vector<std::uint64_t> b_ns;
    std::vector<std::string> b_strategies{"all"};
    std::string b_fmt = "text";
    bench->add_option("--k", b_k)->required()->check(CLI::PositiveNumber);
    bench->add_option("--n", b_ns, "Indexes to benchmark (each >= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--strategy", b_strategies,
                      "iterative, matrix-pow, fast-doubling or all")
        ->check(CLI::IsMember({"iterative", "matrix-pow", "fast-doubling", "all"}));
    bench->add_option("--reps", b_reps, "Timed repetitions per point")
        ->check(CLI::PositiveNumber);
    bench->add_option("--format", b_fmt)->check(CLI::IsMember({"text", "json"}));
    bench->callback([&] { rc = do_bench(b_k, b_ns, b_strategies, b_reps, b_fmt, out); });

    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector parse wants reversed args
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const InexactDivision& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const CrossCheckFailed& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return rc;
}

}  // namespace kfib
