#pragma once

// Reduction of T_n modulo primes: the periodicity congruence
// T_{mp+n} = x^(d_{mp+n} - d_n) T_n mod p for p > 3, its special cases at
// n = p, p +- 1 and p-1-i, the p-adic valuation of mu_p, and the closed
// forms modulo 3 and 2.  Everything is checked by computing over Z and
// reducing afterwards.

#include <cstdint>
#include <optional>
#include <string>

#include "errors.hpp"
#include "polycore.hpp"
#include "schur_det.hpp"
#include "yv_engine.hpp"

namespace yvlab {

/// Trial division; fine for desk-scale moduli.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

inline void require_large_prime(std::uint64_t p) {
    require_prime(p);
    if (p <= 3) throw PrimeTooSmall("the congruence needs p > 3, got " + std::to_string(p));
}

struct ModReport {
    std::uint64_t p = 0;
    std::string label;  // e.g. "T_7 = x^25 T_2"
    ModPoly expected;
    ModPoly computed;
    bool pass = false;
};

inline ModReport make_report(std::uint64_t p, std::string label, ModPoly expected, ModPoly computed) {
    const bool pass = expected == computed;
    return {p, std::move(label), std::move(expected), std::move(computed), pass};
}

inline ModPoly reduce_yv(const YvPolynomial& t, std::uint64_t p) { return reduce_mod(yv_expand(t), p); }

/// x^k in F_p[x]
inline ModPoly x_power(std::uint64_t p, std::size_t k) { return ModPoly::monomial(PrimeField(p, 1), k); }

/// T_{mp+n} against x^(d_{mp+n} - d_n) T_n modulo p.  Negative combined
/// indices are allowed through T_{-k-1} = T_k.
inline ModReport check_theorem3(std::uint64_t p, std::int64_t m, std::int64_t n, YvSequenceCache& cache) {
    require_large_prime(p);
    const std::int64_t big = m * static_cast<std::int64_t>(p) + n;
    const std::int64_t shift = yv_degree(big) - yv_degree(n);
    if (shift < 0) throw InvalidArgument("degree difference is negative");
    const ModPoly computed = reduce_yv(cache.get(big), p);
    const ModPoly expected = mul(x_power(p, static_cast<std::size_t>(shift)), reduce_yv(cache.get(n), p));
    return make_report(p, "T_" + std::to_string(big) + " = x^" + std::to_string(shift) + " T_" + std::to_string(n),
                       expected, computed);
}

/// T_p = x^(d_p) mod p
inline ModReport check_proposition4(std::uint64_t p, YvSequenceCache& cache) {
    require_large_prime(p);
    const auto n = static_cast<std::int64_t>(p);
    return make_report(p, "T_" + std::to_string(n) + " = x^" + std::to_string(yv_degree(n)),
                       x_power(p, static_cast<std::size_t>(yv_degree(n))), reduce_yv(cache.get(n), p));
}

struct CorollaryReport {
    ModReport plus_one;    // T_{p+1} = x^(d_{p+1})
    ModReport minus_one;   // T_{p-1} = x^(d_{p-1})
    ModReport reflection;  // T_{p-1-i} = x^(d_{p-1-i} - d_i) T_i
    bool pass() const { return plus_one.pass && minus_one.pass && reflection.pass; }
};

inline CorollaryReport check_corollaries(std::uint64_t p, std::int64_t i, YvSequenceCache& cache) {
    require_large_prime(p);
    const auto pp = static_cast<std::int64_t>(p);
    if (i < 0 || i > pp - 1) throw IndexOutOfRange("corollary index i must satisfy 0 <= i <= p-1");
    auto pure_power = [&](std::int64_t n) {
        return make_report(p, "T_" + std::to_string(n) + " = x^" + std::to_string(yv_degree(n)),
                           x_power(p, static_cast<std::size_t>(yv_degree(n))), reduce_yv(cache.get(n), p));
    };
    const std::int64_t k = pp - 1 - i;
    // d_{p-1-i} - d_i can be negative once i > (p-1)/2; then swap sides.
    const std::int64_t shift = yv_degree(k) - yv_degree(i);
    ModReport refl;
    if (shift >= 0) {
        refl = make_report(p, "T_" + std::to_string(k) + " = x^" + std::to_string(shift) + " T_" + std::to_string(i),
                           mul(x_power(p, static_cast<std::size_t>(shift)), reduce_yv(cache.get(i), p)),
                           reduce_yv(cache.get(k), p));
    } else {
        refl = make_report(p, "x^" + std::to_string(-shift) + " T_" + std::to_string(k) + " = T_" + std::to_string(i),
                           reduce_yv(cache.get(i), p),
                           mul(x_power(p, static_cast<std::size_t>(-shift)), reduce_yv(cache.get(k), p)));
    }
    return {pure_power(pp + 1), pure_power(pp - 1), std::move(refl)};
}

/// Exponent of p in z (z nonzero).
inline std::uint64_t p_adic_valuation(const Integer& z, std::uint64_t p) {
    if (z == 0) throw InvalidArgument("valuation of zero");
    Integer rest;
    const Integer prime = static_cast<unsigned long>(p);
    return mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t());
}

/// nu_p(mu_p) == (p+1)/2
inline bool mu_valuation_check(std::uint64_t p) {
    require_large_prime(p);
    return p_adic_valuation(mu(static_cast<std::int64_t>(p)), p) == (p + 1) / 2;
}

struct SmallPrimeReport {
    std::int64_t a = 1;
    std::int64_t n = 0;
    ModReport mod3;
    ModPoly mod2_residue;
    /// Only for even a; odd a gets the residue without a verdict.
    std::optional<ModReport> mod2;
    bool pass() const { return mod3.pass && (!mod2 || mod2->pass); }
};

/// T_n = (x-a)^(d_n) mod 3 for n = 0,2 mod 3, x (x-a)^(d_n - 1) for
/// n = 1 mod 3; T_n = x^(d_n) mod 2 when a is even.  The cache carries a.
inline SmallPrimeReport check_small_primes(std::int64_t n, YvSequenceCache& cache) {
    if (n < 0) throw InvalidArgument("check_small_primes needs n >= 0");
    const std::int64_t a = cache.a();
    const YvPolynomial& t = cache.get(n);
    const std::int64_t d = yv_degree(n);
    SmallPrimeReport r;
    r.a = a;
    r.n = n;
    const ModPoly x_minus_a{PrimeField(3, -a), PrimeField(3, 1)};
    const ModPoly expected3 = yv_delta(n) == 1 ? mul(x_power(3, 1), pow(x_minus_a, static_cast<unsigned>(d - 1)))
                                         : pow(x_minus_a, static_cast<unsigned>(d));
    r.mod3 = make_report(3, "T_" + std::to_string(n) + " mod 3, a=" + std::to_string(a), expected3,
                         reduce_yv(t, 3));
    r.mod2_residue = reduce_yv(t, 2);
    if (a % 2 == 0)
        r.mod2 = make_report(2, "T_" + std::to_string(n) + " mod 2, a=" + std::to_string(a),
                             x_power(2, static_cast<std::size_t>(d)), r.mod2_residue);
    return r;
}

inline SmallPrimeReport check_small_primes(std::int64_t a, std::int64_t n) {
    YvSequenceCache cache(a);
    return check_small_primes(n, cache);
}

}  // namespace yvlab
