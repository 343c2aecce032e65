#pragma once

// Verification suites behind `yvlab verify`.  Each suite runs a family of
// exact checks and records every failure with enough context to
// reproduce it.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coeff_theory.hpp"
#include "errors.hpp"
#include "modular.hpp"
#include "painleve.hpp"
#include "schur_det.hpp"
#include "serialize.hpp"
#include "yv_engine.hpp"

namespace yvlab {

/// Desk-scale limits.  The recursion cap can be overridden with the
/// YVLAB_NMAX_CAP environment variable.
struct Caps {
    std::int64_t recursion = 200;
    std::int64_t determinant = 25;
    std::uint64_t prime = 100;

    static Caps from_env() {
        Caps c;
        if (const char* v = std::getenv("YVLAB_NMAX_CAP")) {
            char* end = nullptr;
            const long long parsed = std::strtoll(v, &end, 10);
            if (end == v || *end != '\0' || parsed < 0)
                throw InvalidArgument(std::string("YVLAB_NMAX_CAP is not a nonnegative integer: ") + v);
            c.recursion = parsed;
        }
        return c;
    }
};

struct VerifyReport {
    std::string suite;
    std::int64_t cases = 0;
    std::vector<std::string> failures;
    double seconds = 0.0;

    void record(bool ok, const std::string& context) {
        ++cases;
        if (!ok) failures.push_back(context);
    }
};

struct VerifyOptions {
    std::optional<std::int64_t> nmax;
    std::vector<std::uint64_t> primes{5, 7, 11, 13};
    std::int64_t jmax = 7;
    std::int64_t a = 1;
    Caps caps;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem1", "theorem2", "theorem3", "lemma1",
                                                "lemma2",   "pii",      "smallprimes"};
    return names;
}

inline std::int64_t default_nmax(const std::string& suite) {
    if (suite == "theorem1" || suite == "theorem2") return 100;
    if (suite == "theorem3") return 60;
    if (suite == "lemma1" || suite == "pii") return 12;
    if (suite == "lemma2") return 40;
    return 30;  // smallprimes
}

namespace detail {

inline void require_index_cap(std::int64_t n, const Caps& caps) {
    if (n > caps.recursion)
        throw InvalidArgument("index " + std::to_string(n) + " exceeds the recursion cap " +
                              std::to_string(caps.recursion));
}

inline void suite_theorem1(std::int64_t nmax, std::int64_t a, VerifyReport& r, const Caps& caps,
                           YvSequenceCache& shared) {
    require_index_cap(nmax, caps);
    YvSequenceCache local(a);
    YvSequenceCache& cache = a == shared.a() ? shared : local;
    cache.extend_to(nmax);
    for (std::int64_t n = 1; n <= nmax; ++n) {
        const Integer& rec = cache.coefficient(n, 0);
        try {
            const Integer f = t0_formula(n, a);
            r.record(f == rec, "t_0(" + std::to_string(n) + "), a=" + std::to_string(a) + ": formula " + f.get_str() +
                                   " vs recursion " + rec.get_str());
        } catch (const NonIntegralFormulaValue& e) {
            r.record(false, e.what());
        }
    }
}

inline void suite_theorem2(std::int64_t nmax, std::int64_t jmax, VerifyReport& r, const Caps& caps,
                           YvSequenceCache& cache) {
    require_index_cap(nmax, caps);
    if (jmax < 0) throw InvalidArgument("jmax must be nonnegative");
    cache.extend_to(nmax);
    const RatioTable table = ratio_table(std::max<std::int64_t>(jmax, 7));
    RatioTable trimmed = table;
    trimmed.max_index = jmax;
    const auto mismatches = ratio_consistency(nmax, trimmed, cache);
    std::int64_t compared = 0;
    for (std::int64_t n = 0; n <= nmax; ++n)
        compared += std::min<std::int64_t>(jmax, static_cast<std::int64_t>(cache.at(n).coeffs().size()) - 1) + 1;
    r.cases += compared;
    for (const auto& mm : mismatches)
        r.failures.push_back("t_" + std::to_string(mm.j) + "(" + std::to_string(mm.n) + ")/t_0: " + branch_name(mm.branch) +
                             "~_" + std::to_string(mm.j) + "(" + std::to_string(mm.m) + ") = " + mm.table_value.get_str() +
                             " vs " + mm.sequence_ratio.get_str());
    r.record(symmetry_check(trimmed), "symmetry b~_j(m) = a~_j(-m), c~_j(m) = c~_j(-m-1) for j <= " + std::to_string(jmax));
    for (const auto& e : divisibility_observations(table).entries)
        r.record(e.divides == e.expected, std::string(branch_name(e.family)) + "~_" + std::to_string(e.j) + " | " +
                                              branch_name(e.family) + "~_" + std::to_string(e.j + 1) + " expected " +
                                              (e.expected ? "true" : "false"));
}

inline void suite_theorem3(std::int64_t nmax, const std::vector<std::uint64_t>& primes, VerifyReport& r,
                           const Caps& caps, YvSequenceCache& cache) {
    auto note = [&](const ModReport& m) { r.record(m.pass, "p=" + std::to_string(m.p) + ": " + m.label); };
    for (const auto p : primes) {
        if (p >= caps.prime) throw InvalidArgument("prime " + std::to_string(p) + " exceeds the prime cap");
        require_large_prime(p);
        const auto pp = static_cast<std::int64_t>(p);
        require_index_cap(pp + 1, caps);
        note(check_proposition4(p, cache));
        r.record(mu_valuation_check(p), "p=" + std::to_string(p) + ": valuation of mu_p is (p+1)/2");
        for (std::int64_t m = 1; m <= 3; ++m)
            for (std::int64_t n = 0; n < pp && m * pp + n <= nmax; ++n) {
                require_index_cap(m * pp + n, caps);
                note(check_theorem3(p, m, n, cache));
            }
        for (std::int64_t i = 0; i < pp; ++i) {
            const CorollaryReport c = check_corollaries(p, i, cache);
            r.record(c.pass(), "p=" + std::to_string(p) + ", i=" + std::to_string(i) + ": " + c.plus_one.label + "; " +
                                   c.minus_one.label + "; " + c.reflection.label);
        }
    }
}

inline void suite_lemma1(std::int64_t nmax, VerifyReport& r) {
    for (std::int64_t n = 1; n <= nmax; ++n) {
        const Rational d = stanley_det_check(n);
        r.record(d * Rational(mu(n)) == 1, "det(1/(j-2i+n+1)!) for n=" + std::to_string(n) + " is " + d.get_str());
    }
}

inline void suite_lemma2(std::int64_t nmax, VerifyReport& r, const Caps& caps, YvSequenceCache& cache) {
    require_index_cap(nmax + 1, caps);
    cache.extend_to(nmax + 1);
    for (std::int64_t n = 1; n <= nmax; ++n)
        r.record(wronskian_check(n, cache), "T_{n-1}T'_{n+1} - T'_{n-1}T_{n+1} = (2n+1)T_n^2 at n=" + std::to_string(n));
    for (std::int64_t m = 1; 3 * m + 1 <= nmax + 1; ++m) {
        r.record(key_identity_check(m, cache), "t_0(3m-1)t_0(3m+1) = (6m+1)t_0(3m)^2 at m=" + std::to_string(m));
        r.record(companion_identity_check(m, cache), "t_0(3m)t_0(3m-2) = -(6m-1)t_0(3m-1)^2 at m=" + std::to_string(m));
    }
}

inline void suite_pii(std::int64_t nmax, VerifyReport& r, const Caps& caps, YvSequenceCache& cache) {
    require_index_cap(nmax, caps);
    cache.extend_to(nmax);
    for (std::int64_t n = 1; n <= nmax; ++n) {
        const PiiCertificate c = pii_residual(n, cache);
        r.record(c.verdict.value_or(false), "P_II residual at n=" + std::to_string(n) + " is " + to_string(c.residual.num()) +
                                                " over " + to_string(c.residual.den()));
    }
}

inline void suite_smallprimes(std::int64_t nmax, VerifyReport& r, const Caps& caps) {
    require_index_cap(nmax, caps);
    for (const std::int64_t a : {1, -4, 2}) {
        YvSequenceCache cache(a);
        for (std::int64_t n = 0; n <= nmax; ++n) {
            const SmallPrimeReport s = check_small_primes(n, cache);
            r.record(s.mod3.pass, s.mod3.label);
            if (s.mod2) r.record(s.mod2->pass, s.mod2->label);
        }
    }
}

}  // namespace detail

/// Runs one named suite.  Throws InvalidArgument for unknown names or
/// out-of-cap bounds.  `cache` must carry a = 1; suites extend it as needed.
inline VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt, YvSequenceCache& cache) {
    if (cache.a() != 1) throw InvalidArgument("run_suite needs a cache with a = 1");
    VerifyReport r;
    r.suite = suite;
    const std::int64_t nmax = opt.nmax.value_or(default_nmax(suite));
    if (nmax < 1) throw InvalidArgument("nmax must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    if (suite == "theorem1")
        detail::suite_theorem1(nmax, opt.a, r, opt.caps, cache);
    else if (suite == "theorem2")
        detail::suite_theorem2(nmax, opt.jmax, r, opt.caps, cache);
    else if (suite == "theorem3")
        detail::suite_theorem3(nmax, opt.primes, r, opt.caps, cache);
    else if (suite == "lemma1")
        detail::suite_lemma1(nmax, r);
    else if (suite == "lemma2")
        detail::suite_lemma2(nmax, r, opt.caps, cache);
    else if (suite == "pii")
        detail::suite_pii(nmax, r, opt.caps, cache);
    else if (suite == "smallprimes")
        detail::suite_smallprimes(nmax, r, opt.caps);
    else
        throw InvalidArgument("unknown suite: " + suite);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt) {
    YvSequenceCache cache(1);
    return run_suite(suite, opt, cache);
}

/// "all" runs every suite in order over one shared sequence cache.
inline std::vector<VerifyReport> run_verify(const std::string& suite, const VerifyOptions& opt) {
    std::vector<VerifyReport> out;
    YvSequenceCache cache(1);
    if (suite == "all") {
        for (const auto& name : suite_names()) out.push_back(run_suite(name, opt, cache));
    } else {
        out.push_back(run_suite(suite, opt, cache));
    }
    return out;
}

inline std::int64_t total_failures(const std::vector<VerifyReport>& reports) {
    std::int64_t f = 0;
    for (const auto& r : reports) f += static_cast<std::int64_t>(r.failures.size());
    return f;
}

inline std::string render_text(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    std::int64_t cases = 0;
    for (const auto& r : reports) {
        os << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures, " << std::fixed
           << std::setprecision(3) << r.seconds << " s\n";
        for (const auto& f : r.failures) os << "  FAIL " << f << "\n";
        cases += r.cases;
    }
    os << "total: " << cases << " cases, " << total_failures(reports) << " failures\n";
    return os.str();
}

inline Json to_json(const std::vector<VerifyReport>& reports) {
    Json suites = Json::array();
    std::int64_t cases = 0;
    for (const auto& r : reports) {
        Json s;
        s["suite"] = r.suite;
        s["cases"] = r.cases;
        s["failures"] = r.failures;
        s["seconds"] = r.seconds;
        suites.push_back(std::move(s));
        cases += r.cases;
    }
    Json j;
    j["suites"] = std::move(suites);
    j["cases"] = cases;
    j["failures"] = total_failures(reports);
    return j;
}

}  // namespace yvlab
