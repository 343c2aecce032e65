#pragma once

// Closed forms and identities for the coefficients t_j(n):
//  - the lowest coefficient t_0(n) in each residue class of n mod 3,
//  - the Wronskian-type identity between T_{n-1}, T_n, T_{n+1},
//  - the ratio polynomials a~_j(m), b~_j(m), c~_j(m) with
//    t_j(3m-1)/t_0(3m-1) = a~_j(m), t_j(3m)/t_0(3m) = b~_j(m),
//    t_j(3m+1)/t_0(3m+1) = c~_j(m).

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polycore.hpp"
#include "schur_det.hpp"
#include "yv_engine.hpp"

namespace yvlab {

/// Residue class of n: n = 3m-1 (A), 3m (B) or 3m+1 (C).
enum class Branch { A, B, C };

struct BranchIndex {
    Branch branch;
    std::int64_t m;
};

inline BranchIndex branch_of(std::int64_t n) {
    switch (((n % 3) + 3) % 3) {
        case 2: return {Branch::A, (n + 1) / 3};
        case 0: return {Branch::B, n / 3};
        default: return {Branch::C, (n - 1) / 3};
    }
}

/// Index n of the branch value at m.
inline std::int64_t branch_index(Branch b, std::int64_t m) {
    switch (b) {
        case Branch::A: return 3 * m - 1;
        case Branch::B: return 3 * m;
        default: return 3 * m + 1;
    }
}

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::A: return "a";
        case Branch::B: return "b";
        default: return "c";
    }
}

struct LowestCoeffFormula {
    std::int64_t n;
    Branch branch;
    std::int64_t m;
    std::int64_t a;
    Integer value;
};

/// (-1)^m (a/3)^e mu_n / D with (e, D) chosen by the residue of n.
inline LowestCoeffFormula lowest_coeff_formula(std::int64_t n, std::int64_t a = 1) {
    if (n < 1) throw InvalidArgument("t0_formula needs n >= 1");
    require_parameter(a);
    const auto [branch, m] = branch_of(n);
    std::int64_t e = 0;
    Integer den;
    switch (branch) {
        case Branch::A:
            e = (3 * m - 1) * m / 2;
            den = mu(m - 1) * mu(m - 1) * mu(m);
            break;
        case Branch::B:
            e = (3 * m + 1) * m / 2;
            den = mu(m - 1) * mu(m) * mu(m);
            break;
        case Branch::C:
            e = 3 * (m + 1) * m / 2;
            den = mu(m) * mu(m) * mu(m);
            break;
    }
    Integer a_pow, three_pow;
    const Integer abs_a = a < 0 ? -a : a;
    mpz_pow_ui(a_pow.get_mpz_t(), abs_a.get_mpz_t(), static_cast<unsigned long>(e));
    if (a < 0 && e % 2 == 1) a_pow = -a_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(e));
    Rational value = make_rational(a_pow * mu(n), three_pow * den);
    if (m % 2 == 1) value = -value;
    if (value.get_den() != 1)
        throw NonIntegralFormulaValue("lowest coefficient formula for n=" + std::to_string(n) +
                                      ", a=" + std::to_string(a) + " gives " + value.get_str());
    return {n, branch, m, a, value.get_num()};
}

inline Integer t0_formula(std::int64_t n, std::int64_t a = 1) { return lowest_coeff_formula(n, a).value; }

/// T_{n-1} T'_{n+1} - T'_{n-1} T_{n+1} == (2n+1) T_n^2, with T_{-1} = T_0.
inline bool wronskian_check(std::int64_t n, const YvSequenceCache& cache) {
    const IntPoly lo = yv_expand(cache.at(n - 1));
    const IntPoly mid = yv_expand(cache.at(n));
    const IntPoly hi = yv_expand(cache.at(n + 1));
    const IntPoly lhs = sub(mul(lo, derivative(hi)), mul(derivative(lo), hi));
    return lhs == scale(mul(mid, mid), Integer(2 * n + 1));
}

/// t_0(3m-1) t_0(3m+1) == (6m+1) t_0(3m)^2
inline bool key_identity_check(std::int64_t m, const YvSequenceCache& cache) {
    const Integer& lo = cache.coefficient(3 * m - 1, 0);
    const Integer& mid = cache.coefficient(3 * m, 0);
    const Integer& hi = cache.coefficient(3 * m + 1, 0);
    return lo * hi == (6 * m + 1) * mid * mid;
}

/// b_0(m) c_0(m-1) == -(6m-1) a_0(m)^2, i.e. t_0(3m) t_0(3m-2) == -(6m-1) t_0(3m-1)^2
inline bool companion_identity_check(std::int64_t m, const YvSequenceCache& cache) {
    const Integer& b0 = cache.coefficient(3 * m, 0);
    const Integer& c0 = cache.coefficient(3 * m - 2, 0);
    const Integer& a0 = cache.coefficient(3 * m - 1, 0);
    return b0 * c0 == -(6 * m - 1) * a0 * a0;
}

/// a~_j, b~_j, c~_j for 0 <= j <= J as polynomials in m over Q.
struct RatioTable {
    std::int64_t max_index = 0;
    std::vector<RatPoly> a, b, c;

    const std::vector<RatPoly>& family(Branch br) const {
        switch (br) {
            case Branch::A: return a;
            case Branch::B: return b;
            default: return c;
        }
    }
};

namespace detail {

/// sum_{i=lo}^{hi} weight(i) * p_i * q_{k-i}, using the given offset.
template <class Weight>
RatPoly convolve(const std::vector<RatPoly>& p, const std::vector<RatPoly>& q, std::int64_t lo, std::int64_t hi,
                 std::int64_t total, Weight weight) {
    RatPoly acc;
    for (std::int64_t i = lo; i <= hi; ++i) {
        const Rational w = weight(i);
        if (w == 0) continue;
        acc = add(acc, scale(mul(p[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(total - i)]), w));
    }
    return acc;
}

}  // namespace detail

/// Solves the three coefficient recursions for b~_{k+1}, a~_{k+1}, c~_{k+1}
/// in that order for k = 0..J-1.
inline RatioTable ratio_table(std::int64_t max_index) {
    if (max_index < 0) throw InvalidArgument("ratio_table needs J >= 0");
    RatioTable t;
    t.max_index = max_index;
    const RatPoly one{Rational(1)};
    t.a.push_back(one);
    t.b.push_back(one);
    t.c.push_back(one);
    const RatPoly six_m_plus_1{Rational(1), Rational(6)};
    const RatPoly minus_six_m_plus_1{Rational(1), Rational(-6)};
    auto unit = [](std::int64_t) { return Rational(1); };
    for (std::int64_t k = 0; k < max_index; ++k) {
        auto quad = [k](std::int64_t i) { return Rational(3 * i * (3 * k - 6 * i + 4)); };

        // 3(k+1)(3k+2) b~_{k+1} = (6m+1) sum c~_i a~_{k-i} - sum b~_i b~_{k-i}
        //                         + 3 sum_{i=1}^k i(3k-6i+4) b~_i b~_{k+1-i}
        RatPoly rhs_b = mul(six_m_plus_1, detail::convolve(t.c, t.a, 0, k, k, unit));
        rhs_b = sub(rhs_b, detail::convolve(t.b, t.b, 0, k, k, unit));
        rhs_b = add(rhs_b, detail::convolve(t.b, t.b, 1, k, k + 1, quad));
        const Rational div_ab = make_rational(1, 3 * (k + 1) * (3 * k + 2));
        t.b.push_back(scale(rhs_b, div_ab));

        // 3(k+1)(3k+2) a~_{k+1} = -(6m-1) sum c~_i(m-1) b~_{k-i} - sum a~_i a~_{k-i}
        //                         + 3 sum_{i=1}^k i(3k-6i+4) a~_i a~_{k+1-i}
        std::vector<RatPoly> c_shift;
        for (const auto& p : t.c) c_shift.push_back(shift_arg(p, Rational(-1)));
        RatPoly rhs_a = mul(minus_six_m_plus_1, detail::convolve(c_shift, t.b, 0, k, k, unit));
        rhs_a = sub(rhs_a, detail::convolve(t.a, t.a, 0, k, k, unit));
        rhs_a = add(rhs_a, detail::convolve(t.a, t.a, 1, k, k + 1, quad));
        t.a.push_back(scale(rhs_a, div_ab));

        // (3k+1)(3k+4) c~_{k+1} = -sum_{i=0}^{k+1} a~_i(m+1) b~_{k+1-i} - sum c~_i c~_{k-i}
        //                         + sum_{i=1}^k (3i+1)(3k-6i+4) c~_i c~_{k+1-i}
        std::vector<RatPoly> a_shift;
        for (const auto& p : t.a) a_shift.push_back(shift_arg(p, Rational(1)));
        auto quad_c = [k](std::int64_t i) { return Rational((3 * i + 1) * (3 * k - 6 * i + 4)); };
        RatPoly rhs_c = neg(detail::convolve(a_shift, t.b, 0, k + 1, k + 1, unit));
        rhs_c = sub(rhs_c, detail::convolve(t.c, t.c, 0, k, k, unit));
        rhs_c = add(rhs_c, detail::convolve(t.c, t.c, 1, k, k + 1, quad_c));
        t.c.push_back(scale(rhs_c, make_rational(1, (3 * k + 1) * (3 * k + 4))));
    }
    return t;
}

struct RatioMismatch {
    std::int64_t n;
    std::int64_t j;
    Branch branch;
    std::int64_t m;
    Rational table_value;
    Rational sequence_ratio;
};

/// Compares every in-range t_j(n)/t_0(n), 0 <= n <= n_max, j <= J, with
/// the table polynomial of its branch evaluated at m.
inline std::vector<RatioMismatch> ratio_consistency(std::int64_t n_max, const RatioTable& table,
                                                    const YvSequenceCache& cache) {
    std::vector<RatioMismatch> out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const auto [branch, m] = branch_of(n);
        const auto& coeffs = cache.at(n).coeffs();
        const Integer& t0 = coeffs.front();
        if (t0 == 0) throw InternalMismatch("t_0(" + std::to_string(n) + ") vanishes");
        const auto& fam = table.family(branch);
        const std::int64_t jmax = std::min<std::int64_t>(table.max_index, static_cast<std::int64_t>(coeffs.size()) - 1);
        for (std::int64_t j = 0; j <= jmax; ++j) {
            const Rational ratio = make_rational(coeffs[static_cast<std::size_t>(j)], t0);
            const Rational value = eval(fam[static_cast<std::size_t>(j)], Rational(m));
            if (ratio != value) out.push_back({n, j, branch, m, value, ratio});
        }
    }
    return out;
}

/// b~_j(m) == a~_j(-m) and c~_j(m) == c~_j(-m-1) for all j in the table.
inline bool symmetry_check(const RatioTable& table) {
    for (std::int64_t j = 0; j <= table.max_index; ++j) {
        const auto i = static_cast<std::size_t>(j);
        if (!(table.b[i] == negate_arg(table.a[i]))) return false;
        if (!(table.c[i] == shift_arg(negate_arg(table.c[i]), Rational(1)))) return false;
    }
    return true;
}

struct DivisibilityEntry {
    Branch family;
    std::int64_t j;  // tests whether the j-th polynomial divides the (j+1)-th
    bool divides;
    bool expected;
    RatPoly quotient;  // meaningful when divides
};

struct DivisibilityReport {
    std::vector<DivisibilityEntry> entries;
    bool matches_expectation() const {
        for (const auto& e : entries)
            if (e.divides != e.expected) return false;
        return !entries.empty();
    }
};

/// p | q in Q[m]; the zero polynomial divides only zero.
inline bool divides_in_q(const RatPoly& p, const RatPoly& q, RatPoly* quotient = nullptr) {
    if (p.is_zero()) return q.is_zero();
    auto [quot, rem] = divmod(q, p);
    if (quotient) *quotient = quot;
    return rem.is_zero();
}

/// a~_j | a~_{j+1} for j <= 3 but not j = 4; c~_j | c~_{j+1} for
/// 2 <= j <= 5 but not j = 6.  Needs a table with J >= 7.
inline DivisibilityReport divisibility_observations(const RatioTable& table) {
    if (table.max_index < 7) throw InvalidArgument("divisibility_observations needs a ratio table with J >= 7");
    DivisibilityReport r;
    for (std::int64_t j = 0; j <= 4; ++j) {
        DivisibilityEntry e{Branch::A, j, false, j <= 3, {}};
        e.divides = divides_in_q(table.a[static_cast<std::size_t>(j)], table.a[static_cast<std::size_t>(j + 1)], &e.quotient);
        r.entries.push_back(std::move(e));
    }
    for (std::int64_t j = 2; j <= 6; ++j) {
        DivisibilityEntry e{Branch::C, j, false, j <= 5, {}};
        e.divides = divides_in_q(table.c[static_cast<std::size_t>(j)], table.c[static_cast<std::size_t>(j + 1)], &e.quotient);
        r.entries.push_back(std::move(e));
    }
    return r;
}

}  // namespace yvlab
