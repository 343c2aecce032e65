#pragma once

// Kronecker substitution kernels: a coefficient vector c_0..c_{L-1} is
// packed into the single integer sum c_j 2^(j*k), so that polynomial
// products and exact quotients become one GMP multiplication or
// division.  Slot widths k are whole limbs.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace yvlab::detail {

inline constexpr std::size_t kLimbBits = 64;

inline std::size_t bit_length(const Integer& z) {
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline std::size_t max_bit_length(std::span<const Integer> c) {
    std::size_t b = 0;
    for (const auto& z : c) b = std::max(b, bit_length(z));
    return b;
}

inline std::size_t ceil_log2(std::size_t n) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < n) ++r;
    return r;
}

/// Limbs per slot so that every |c| < 2^(bits) fits as a signed digit.
inline std::size_t slot_limbs_for(std::size_t bits) { return (bits + 1) / kLimbBits + 1; }

/// sum c_j 2^(j*k), k = 64*slot_limbs.  Requires |c_j| < 2^(k-1).
inline Integer kronecker_pack(std::span<const Integer> c, std::size_t slot_limbs) {
    std::vector<std::uint64_t> pos(c.size() * slot_limbs, 0), neg(c.size() * slot_limbs, 0);
    bool any_neg = false;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        if (mpz_sizeinbase(c[j].get_mpz_t(), 2) >= slot_limbs * kLimbBits)
            throw InternalMismatch("kronecker_pack: coefficient exceeds slot width");
        auto* dst = (c[j] > 0 ? pos.data() : neg.data()) + j * slot_limbs;
        any_neg |= c[j] < 0;
        mpz_export(dst, nullptr, -1, sizeof(std::uint64_t), 0, 0, c[j].get_mpz_t());
    }
    Integer p, n;
    mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(std::uint64_t), 0, 0, pos.data());
    if (!any_neg) return p;
    mpz_import(n.get_mpz_t(), neg.size(), -1, sizeof(std::uint64_t), 0, 0, neg.data());
    return p - n;
}

/// Inverse of kronecker_pack for `count` signed slots.  Returns false if
/// the value is not representable with that many slots.
inline bool kronecker_unpack(const Integer& v, std::size_t count, std::size_t slot_limbs, std::vector<Integer>& out) {
    const std::size_t total = count * slot_limbs;
    // Bias every slot by 2^(k-1) so that all digits become nonnegative.
    std::vector<std::uint64_t> bias(total, 0);
    for (std::size_t j = 0; j < count; ++j) bias[j * slot_limbs + slot_limbs - 1] = std::uint64_t{1} << 63;
    Integer offset;
    mpz_import(offset.get_mpz_t(), total, -1, sizeof(std::uint64_t), 0, 0, bias.data());
    Integer w = v + offset;
    if (w < 0 || mpz_sizeinbase(w.get_mpz_t(), 2) > total * kLimbBits) return false;
    std::vector<std::uint64_t> limbs(total, 0);
    mpz_export(limbs.data(), nullptr, -1, sizeof(std::uint64_t), 0, 0, w.get_mpz_t());
    Integer half;
    mpz_setbit(half.get_mpz_t(), slot_limbs * kLimbBits - 1);
    out.assign(count, Integer(0));
    for (std::size_t j = 0; j < count; ++j) {
        mpz_import(out[j].get_mpz_t(), slot_limbs, -1, sizeof(std::uint64_t), 0, 0, limbs.data() + j * slot_limbs);
        out[j] -= half;
    }
    return true;
}

/// Below this length the schoolbook kernels are used.
inline constexpr std::size_t kKroneckerThreshold = 12;
/// Same for expanded polynomials, which are often sparse.
inline constexpr std::size_t kDenseKroneckerThreshold = 256;

inline std::vector<Integer> schoolbook_mul(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Full-length product of two coefficient vectors (no trimming).
inline std::vector<Integer> kronecker_mul(std::span<const Integer> a, std::span<const Integer> b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t bits = max_bit_length(a) + max_bit_length(b) + ceil_log2(std::min(a.size(), b.size())) + 1;
    const std::size_t limbs = slot_limbs_for(bits);
    Integer pa = kronecker_pack(a, limbs);
    Integer prod;
    if (a.data() == b.data() && a.size() == b.size()) {
        prod = pa * pa;
    } else {
        Integer pb = kronecker_pack(b, limbs);
        prod = pa * pb;
    }
    std::vector<Integer> r;
    if (!kronecker_unpack(prod, a.size() + b.size() - 1, limbs, r))
        throw InternalMismatch("kronecker_mul: product does not fit its slots");
    return r;
}

/// Long division of coefficient vectors; den must divide num exactly.
inline std::vector<Integer> long_exact_div(std::span<const Integer> num, std::span<const Integer> den) {
    std::vector<Integer> rem(num.begin(), num.end());
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.empty()) return {};
    if (rem.size() < den.size()) throw NonExactDivision("exact division: divisor degree exceeds dividend degree");
    const std::size_t dq = den.size() - 1;
    std::vector<Integer> quot(rem.size() - dq, Integer(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + dq];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t()))
            throw NonExactDivision("exact division: leading coefficient does not divide");
        mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
        for (std::size_t i = 0; i < dq; ++i) rem[k + i] -= quot[k] * den[i];
        top = 0;
    }
    for (std::size_t i = 0; i < dq; ++i)
        if (rem[i] != 0) throw NonExactDivision("exact division: nonzero remainder");
    return quot;
}

inline std::vector<Integer> poly_mul(std::span<const Integer> a, std::span<const Integer> b) {
    if (std::min(a.size(), b.size()) < kKroneckerThreshold) return schoolbook_mul(a, b);
    return kronecker_mul(a, b);
}

/// Exact quotient num/den of integer coefficient vectors (den with a
/// nonzero last entry).  The packed quotient is accepted only with a
/// certificate: when every coefficient of num and of den*quot fits in a
/// signed slot, equal packed values force equal polynomials.
inline std::vector<Integer> kronecker_exact_div(std::span<const Integer> num, std::span<const Integer> den) {
    if (den.empty() || den.back() == 0) throw ZeroDenominator("kronecker_exact_div: zero divisor");
    std::size_t nlen = num.size();
    while (nlen > 0 && num[nlen - 1] == 0) --nlen;
    num = num.first(nlen);
    if (num.empty()) return {};
    if (num.size() < den.size()) throw NonExactDivision("exact division: divisor degree exceeds dividend degree");
    const std::size_t qlen = num.size() - den.size() + 1;
    const std::size_t den_bits = max_bit_length(den);
    std::size_t bits = std::max(max_bit_length(num), den_bits) + 2;
    for (int attempt = 0; attempt < 4; ++attempt) {
        const std::size_t limbs = slot_limbs_for(bits);
        Integer pn = kronecker_pack(num, limbs);
        Integer pd = kronecker_pack(den, limbs);
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), pn.get_mpz_t(), pd.get_mpz_t());
        if (r != 0) throw NonExactDivision("exact division: nonzero remainder");
        std::vector<Integer> quot;
        if (kronecker_unpack(q, qlen, limbs, quot)) {
            const std::size_t need = max_bit_length(quot) + den_bits + ceil_log2(std::min(qlen, den.size())) + 1;
            if (need < limbs * kLimbBits) return quot;
            bits = std::max(bits, need) + 1;
        } else {
            bits *= 2;
        }
    }
    // Unreachable in practice; settle it with long division.
    return long_exact_div(num, den);
}

inline std::vector<Integer> poly_exact_div(std::span<const Integer> num, std::span<const Integer> den) {
    if (den.size() < kKroneckerThreshold) return long_exact_div(num, den);
    return kronecker_exact_div(num, den);
}

}  // namespace yvlab::detail
