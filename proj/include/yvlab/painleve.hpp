#pragma once

// Rational solutions of the second Painleve equation
//   y'' = 2 y^3 - 4 x y + 4 n,   y = T_n'/T_n - T_{n-1}'/T_{n-1}.

#include <cstdint>
#include <optional>

#include "polycore.hpp"
#include "yv_engine.hpp"

namespace yvlab {

/// Unreduced numerator and denominator of y:
/// (T_n' T_{n-1} - T_n T_{n-1}') / (T_n T_{n-1}).
struct LogDerivativeParts {
    IntPoly num;
    IntPoly den;
};

inline LogDerivativeParts log_derivative_parts(std::int64_t n, const YvSequenceCache& cache) {
    const IntPoly hi = yv_expand(cache.at(n));
    const IntPoly lo = yv_expand(cache.at(n - 1));
    return {sub(mul(derivative(hi), lo), mul(hi, derivative(lo))), mul(hi, lo)};
}

inline RationalFunction pii_solution(std::int64_t n, const YvSequenceCache& cache) {
    if (n < 1) throw InvalidArgument("pii_solution needs n >= 1");
    auto parts = log_derivative_parts(n, cache);
    return ratfun_canonical(parts.num, parts.den);
}

inline RationalFunction pii_solution(std::int64_t n, std::int64_t a = 1) {
    YvSequenceCache cache(a);
    cache.extend_to(n);
    return pii_solution(n, cache);
}

struct PiiCertificate {
    std::int64_t n = 0;
    std::int64_t a = 1;
    RationalFunction residual;
    /// Asserted only for a = 1; otherwise the residual is reported as is.
    std::optional<bool> verdict;
};

/// y'' - 2y^3 + 4xy - 4n with y = U/D, multiplied through by D^3:
///   U''D^2 - U D D'' - 2 U' D' D + 2 U D'^2 - 2 U^3 + 4 x U D^2 - 4 n D^3.
inline PiiCertificate pii_residual(std::int64_t n, const YvSequenceCache& cache) {
    if (n < 1) throw InvalidArgument("pii_residual needs n >= 1");
    const auto [u, d] = log_derivative_parts(n, cache);
    const IntPoly u1 = derivative(u), u2 = derivative(u1);
    const IntPoly d1 = derivative(d), d2 = derivative(d1);
    const IntPoly dd = mul(d, d);
    const IntPoly x{Integer(0), Integer(1)};
    IntPoly r = mul(u2, dd);
    r = sub(r, mul(mul(u, d), d2));
    r = sub(r, scale(mul(mul(u1, d1), d), Integer(2)));
    r = add(r, scale(mul(u, mul(d1, d1)), Integer(2)));
    r = sub(r, scale(mul(u, mul(u, u)), Integer(2)));
    r = add(r, scale(mul(x, mul(u, dd)), Integer(4)));
    r = sub(r, scale(mul(dd, d), Integer(4 * n)));
    PiiCertificate cert;
    cert.n = n;
    cert.a = cache.a();
    cert.residual = r.is_zero() ? RationalFunction{} : ratfun_canonical(r, mul(dd, d));
    if (cache.a() == 1) cert.verdict = cert.residual.is_zero();
    return cert;
}

inline PiiCertificate pii_residual(std::int64_t n, std::int64_t a = 1) {
    YvSequenceCache cache(a);
    cache.extend_to(n);
    return pii_residual(n, cache);
}

}  // namespace yvlab
