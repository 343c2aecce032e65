// yvlab: compute, verify, tabulate and benchmark Yablonskii-Vorob'ev polynomials.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "yvlab/yvlab.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool verbose = false;

void log(const std::string& msg) {
    if (verbose) std::cerr << "yvlab: " << msg << "\n";
}

struct UsageError : yvlab::InvalidArgument {
    using yvlab::InvalidArgument::InvalidArgument;
};

void require_format(const std::string& f) {
    if (f != "text" && f != "json") throw UsageError("format must be text or json");
}

void require_method(const std::string& m, bool allow_both) {
    if (m == "recursion" || m == "determinant" || (allow_both && m == "both")) return;
    throw UsageError("unknown method: " + m);
}

yvlab::YvPolynomial compute_poly(std::int64_t n, std::int64_t a, const std::string& method, const yvlab::Caps& caps) {
    if (method == "determinant") {
        if (a != 1) throw UsageError("the determinant route is defined for a = 1 only");
        if (n < 0 || n > caps.determinant)
            throw UsageError("determinant route needs 0 <= n <= " + std::to_string(caps.determinant));
        return yvlab::yv_via_determinant(n);
    }
    if (n > caps.recursion || -n - 1 > caps.recursion)
        throw UsageError("n exceeds the recursion cap " + std::to_string(caps.recursion));
    return n < 0 ? yvlab::yv_compute_negative(n, a) : yvlab::yv_compute(n, a);
}

struct ComputeArgs {
    std::int64_t n = 0;
    std::int64_t a = 1;
    std::string method = "recursion";
    std::string format = "text";
};

int run_compute(const ComputeArgs& args, const yvlab::Caps& caps) {
    require_method(args.method, false);
    require_format(args.format);
    yvlab::require_parameter(args.a);
    log("computing T_" + std::to_string(args.n) + " by " + args.method);
    const auto p = compute_poly(args.n, args.a, args.method, caps);
    if (args.format == "json")
        std::cout << yvlab::dump_poly_json(p) << "\n";
    else
        std::cout << yvlab::render_text(p) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::optional<std::int64_t> nmax;
    std::vector<std::uint64_t> primes;
    std::int64_t a = 1;
    std::string format = "text";
    std::string input;
};

/// Checks a PolyJson document against the recursion.
yvlab::VerifyReport check_input(const std::string& path, const yvlab::Caps& caps) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto start = std::chrono::steady_clock::now();
    const auto claimed = yvlab::parse_poly_json(buf.str());
    yvlab::require_parameter(claimed.a());
    const auto actual = compute_poly(claimed.n(), claimed.a(), "recursion", caps);
    yvlab::VerifyReport r;
    r.suite = "input";
    r.record(claimed == actual, path + ": T_" + std::to_string(claimed.n()) + " with a=" + std::to_string(claimed.a()) +
                                    " differs from the recursion");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int run_verify(const VerifyArgs& args, const yvlab::Caps& caps) {
    require_format(args.format);
    if (args.suite != "all") {
        const auto& names = yvlab::suite_names();
        if (std::find(names.begin(), names.end(), args.suite) == names.end())
            throw UsageError("unknown suite: " + args.suite);
    }
    yvlab::require_parameter(args.a);
    yvlab::VerifyOptions opt;
    opt.nmax = args.nmax;
    if (!args.primes.empty()) opt.primes = args.primes;
    opt.a = args.a;
    opt.caps = caps;
    std::vector<yvlab::VerifyReport> reports;
    if (!args.input.empty()) {
        log("checking " + args.input);
        reports.push_back(check_input(args.input, caps));
    } else {
        log("running suite " + args.suite);
        reports = yvlab::run_verify(args.suite, opt);
    }
    if (args.format == "json")
        std::cout << yvlab::to_json(reports).dump() << "\n";
    else
        std::cout << yvlab::render_text(reports);
    return yvlab::total_failures(reports) == 0 ? 0 : kExitFail;
}

struct TableArgs {
    std::string what = "t0";
    std::int64_t jmax = 7;
    std::int64_t nmax = 10;
    std::int64_t a = 1;
    std::string format = "text";
};

int run_table(const TableArgs& args, const yvlab::Caps& caps) {
    require_format(args.format);
    if (args.what == "ratio") {
        if (args.jmax < 0) throw UsageError("jmax must be nonnegative");
        const auto table = yvlab::ratio_table(args.jmax);
        const yvlab::Branch families[] = {yvlab::Branch::A, yvlab::Branch::B, yvlab::Branch::C};
        if (args.format == "json") {
            yvlab::Json j;
            j["jmax"] = args.jmax;
            for (const auto br : families) {
                yvlab::Json rows = yvlab::Json::array();
                for (const auto& p : table.family(br)) rows.push_back(yvlab::to_string(p, "m"));
                j[yvlab::branch_name(br)] = std::move(rows);
            }
            std::cout << j.dump() << "\n";
        } else {
            for (const auto br : families) {
                const auto& fam = table.family(br);
                for (std::size_t k = 0; k < fam.size(); ++k)
                    std::cout << yvlab::branch_name(br) << "~_" << k << "(m) = " << yvlab::to_string(fam[k], "m") << "\n";
            }
        }
        return 0;
    }
    if (args.what != "t0") throw UsageError("table --what must be ratio or t0");
    if (args.nmax < 0 || args.nmax > caps.recursion)
        throw UsageError("nmax must lie in 0.." + std::to_string(caps.recursion));
    yvlab::require_parameter(args.a);
    yvlab::YvSequenceCache cache(args.a);
    cache.extend_to(args.nmax);
    if (args.format == "json") {
        yvlab::Json rows = yvlab::Json::array();
        for (std::int64_t n = 0; n <= args.nmax; ++n) {
            yvlab::Json row;
            row["n"] = n;
            row["t0"] = cache.coefficient(n, 0).get_str();
            rows.push_back(std::move(row));
        }
        yvlab::Json j;
        j["a"] = args.a;
        j["rows"] = std::move(rows);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n\tt_0(n)\n";
        for (std::int64_t n = 0; n <= args.nmax; ++n) std::cout << n << "\t" << cache.coefficient(n, 0).get_str() << "\n";
    }
    return 0;
}

struct BenchArgs {
    std::int64_t nmax = 10;
    std::string method = "both";
    std::string format = "text";
};

int run_bench(const BenchArgs& args, const yvlab::Caps& caps) {
    require_method(args.method, true);
    require_format(args.format);
    if (args.nmax < 1) throw UsageError("nmax must be at least 1");
    const bool rec = args.method != "determinant";
    const bool det = args.method != "recursion";
    if (rec && args.nmax > caps.recursion) throw UsageError("nmax exceeds the recursion cap");
    if (det && args.nmax > caps.determinant) throw UsageError("nmax exceeds the determinant cap");
    using clock = std::chrono::steady_clock;

    // Recursion timings are cumulative: the time to reach T_n from T_0, T_1.
    std::vector<double> rec_t, det_t;
    if (rec) {
        yvlab::YvSequenceCache cache(1);
        const auto start = clock::now();
        for (std::int64_t n = 1; n <= args.nmax; ++n) {
            cache.extend_to(n);
            rec_t.push_back(std::chrono::duration<double>(clock::now() - start).count());
        }
    }
    if (det) {
        for (std::int64_t n = 1; n <= args.nmax; ++n) {
            const auto start = clock::now();
            (void)yvlab::yv_via_determinant(n);
            det_t.push_back(std::chrono::duration<double>(clock::now() - start).count());
            log("determinant n=" + std::to_string(n) + " done");
        }
    }
    if (args.format == "json") {
        yvlab::Json j;
        j["nmax"] = args.nmax;
        auto emit = [&](const char* name, const std::vector<double>& t) {
            yvlab::Json rows = yvlab::Json::array();
            for (std::size_t i = 0; i < t.size(); ++i) {
                yvlab::Json row;
                row["n"] = static_cast<std::int64_t>(i) + 1;
                row["seconds"] = t[i];
                rows.push_back(std::move(row));
            }
            j[name] = std::move(rows);
        };
        if (rec) emit("recursion", rec_t);
        if (det) emit("determinant", det_t);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "method\tn\tseconds\n";
        auto emit = [](const char* name, const std::vector<double>& t) {
            for (std::size_t i = 0; i < t.size(); ++i) std::cout << name << "\t" << i + 1 << "\t" << t[i] << "\n";
        };
        if (rec) emit("recursion", rec_t);
        if (det) emit("determinant", det_t);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation and verification of Yablonskii-Vorob'ev polynomials"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", verbose, "log progress to stderr");

    yvlab::Caps caps;
    try {
        caps = yvlab::Caps::from_env();
    } catch (const yvlab::Error& e) {
        std::cerr << "yvlab: " << e.what() << "\n";
        return kExitUsage;
    }
    app.add_option("--nmax-cap", caps.recursion, "recursion index cap (default 200, env YVLAB_NMAX_CAP)");
    app.add_option("--det-cap", caps.determinant, "determinant route index cap");
    app.add_option("--prime-cap", caps.prime, "primes must be below this");

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "print T_n");
    compute->add_option("n", ca.n, "index")->required();
    compute->add_option("--a", ca.a, "recursion parameter (nonzero)");
    compute->add_option("--method", ca.method, "recursion | determinant");
    compute->add_option("--format", ca.format, "text | json");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", va.suite, "all | theorem1 | theorem2 | theorem3 | lemma1 | lemma2 | pii | smallprimes");
    verify->add_option("--nmax", va.nmax, "largest index checked");
    verify->add_option("--primes", va.primes, "comma-separated primes for theorem3")->delimiter(',');
    verify->add_option("--a", va.a, "parameter for the theorem1 suite");
    verify->add_option("--format", va.format, "text | json");
    verify->add_option("--input", va.input, "check a PolyJson file against the recursion instead of running suites");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "print the ratio polynomials or lowest coefficients");
    table->add_option("--what", ta.what, "ratio | t0");
    table->add_option("--jmax", ta.jmax, "largest ratio index");
    table->add_option("--nmax", ta.nmax, "largest n for t0");
    table->add_option("--a", ta.a, "parameter for t0");
    table->add_option("--format", ta.format, "text | json");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "time the two computation routes");
    bench->add_option("--nmax", ba.nmax, "largest index timed");
    bench->add_option("--method", ba.method, "recursion | determinant | both");
    bench->add_option("--format", ba.format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*compute) return run_compute(ca, caps);
        if (*verify) return run_verify(va, caps);
        if (*table) return run_table(ta, caps);
        if (*bench) return run_bench(ba, caps);
    } catch (const yvlab::InvalidArgument& e) {
        std::cerr << "yvlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const yvlab::IndexOutOfRange& e) {
        std::cerr << "yvlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const yvlab::NotPrime& e) {
        std::cerr << "yvlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const yvlab::PrimeTooSmall& e) {
        std::cerr << "yvlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const yvlab::Error& e) {
        std::cerr << "yvlab: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
