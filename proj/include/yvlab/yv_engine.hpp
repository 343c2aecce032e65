#pragma once

// Yablonskii-Vorob'ev polynomials from the bilinear recursion
//
//   T_{n+1} T_{n-1} = x T_n^2 + a (T_n T_n'' - T_n'^2),  T_0 = 1, T_1 = x,
//
// kept in stride-3 form T_n(x) = sum_j t_j(n) x^(3j+delta).

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "kronecker.hpp"
#include "polycore.hpp"

namespace yvlab {

/// d_n = n(n+1)/2.  Symmetric under n -> -n-1.
inline std::int64_t yv_degree(std::int64_t n) { return n * (n + 1) / 2; }

/// 1 iff n = 1 mod 3 (also for negative n).
inline int yv_delta(std::int64_t n) { return ((n % 3) + 3) % 3 == 1 ? 1 : 0; }

/// Number of stored stride-3 coefficients of T_n.
inline std::size_t yv_length(std::int64_t n) { return static_cast<std::size_t>((yv_degree(n) - yv_delta(n)) / 3 + 1); }

inline void require_parameter(std::int64_t a) {
    if (a == 0) throw InvalidArgument("recursion parameter a must be nonzero");
}

/// T_n in compressed form: coeffs[j] is the coefficient of x^(3j+delta).
class YvPolynomial {
public:
    YvPolynomial(std::int64_t n, std::int64_t a, std::vector<Integer> coeffs) : n_(n), a_(a), c_(std::move(coeffs)) {
        if (c_.size() != yv_length(n))
            throw InternalMismatch("T_" + std::to_string(n) + " has " + std::to_string(c_.size()) +
                                   " stride-3 coefficients, expected " + std::to_string(yv_length(n)));
        if (c_.back() != 1) throw InternalMismatch("T_" + std::to_string(n) + " is not monic");
    }

    std::int64_t n() const { return n_; }
    std::int64_t a() const { return a_; }
    int delta() const { return yv_delta(n_); }
    std::int64_t degree() const { return yv_degree(n_); }
    const std::vector<Integer>& coeffs() const { return c_; }

    bool operator==(const YvPolynomial& o) const { return n_ == o.n_ && a_ == o.a_ && c_ == o.c_; }

private:
    std::int64_t n_;
    std::int64_t a_;
    std::vector<Integer> c_;
};

/// Full dense form, zeros off the stride-3 support.
inline IntPoly yv_expand(const YvPolynomial& p) {
    const auto& c = p.coeffs();
    std::vector<Integer> dense(static_cast<std::size_t>(p.degree()) + 1, Integer(0));
    for (std::size_t j = 0; j < c.size(); ++j) dense[3 * j + static_cast<std::size_t>(p.delta())] = c[j];
    return IntPoly(std::move(dense));
}

/// Inverse of yv_expand; rejects anything off the stride-3 support.
inline YvPolynomial yv_compress(std::int64_t n, std::int64_t a, const IntPoly& dense) {
    if (dense.degree() != yv_degree(n))
        throw InternalMismatch("degree of T_" + std::to_string(n) + " is not " + std::to_string(yv_degree(n)));
    const std::size_t delta = static_cast<std::size_t>(yv_delta(n));
    std::vector<Integer> c;
    for (std::size_t k = 0; k < dense.size(); ++k) {
        if (k % 3 == delta)
            c.push_back(dense.coeffs()[k]);
        else if (dense.coeffs()[k] != 0)
            throw InternalMismatch("T_" + std::to_string(n) + " has a term off its stride-3 support");
    }
    return YvPolynomial(n, a, std::move(c));
}

namespace detail {

// With e_j = 3j + delta, u_j = t_j, v_j = e_j t_j, w_j = e_j (e_j - 1) t_j,
// the right side has coefficient (u*u)_{s-1} + a (u*w - v*v)_s at
// x^(3s + 2 delta - 2).  For delta = 0 the s = 0 term vanishes.
inline std::vector<Integer> recursion_numerator(std::span<const Integer> t, int delta, std::int64_t a) {
    const std::size_t len = t.size();
    std::vector<Integer> v(len), w(len);
    for (std::size_t j = 0; j < len; ++j) {
        const long e = static_cast<long>(3 * j) + delta;
        v[j] = t[j] * e;
        w[j] = t[j] * (e * (e - 1));
    }
    std::vector<Integer> uu = poly_mul(t, t);
    std::vector<Integer> uw = poly_mul(t, w);
    std::vector<Integer> vv = poly_mul(v, v);
    std::vector<Integer> num(2 * len);
    const Integer A = static_cast<long>(a);
    for (std::size_t s = 0; s < 2 * len; ++s) {
        if (s < 2 * len - 1) num[s] = A * (uw[s] - vv[s]);
        if (s >= 1) num[s] += uu[s - 1];
    }
    if (delta == 0) {
        if (num.front() != 0) throw InternalMismatch("recursion numerator has a stray x^-2 term");
        num.erase(num.begin());
    }
    return num;
}

}  // namespace detail

/// One recursion step: T_{n+1} from T_{n-1} and T_n.
inline YvPolynomial yv_step(const YvPolynomial& prev, const YvPolynomial& cur) {
    if (prev.n() + 1 != cur.n() || prev.a() != cur.a())
        throw InvalidArgument("yv_step needs consecutive terms with the same parameter");
    std::vector<Integer> num = detail::recursion_numerator(cur.coeffs(), cur.delta(), cur.a());
    std::vector<Integer> quot = detail::poly_exact_div(num, prev.coeffs());
    return YvPolynomial(cur.n() + 1, cur.a(), std::move(quot));
}

/// T_0..T_N for one parameter a, built bottom-up.  Build it on one
/// thread; const access is safe from many.  References returned by at()
/// and get() stay valid while the cache grows.
class YvSequenceCache {
public:
    explicit YvSequenceCache(std::int64_t a = 1) : a_(a) {
        require_parameter(a);
        seq_.emplace_back(0, a, std::vector<Integer>{Integer(1)});
        seq_.emplace_back(1, a, std::vector<Integer>{Integer(1)});
    }

    std::int64_t a() const { return a_; }
    std::int64_t max_index() const { return static_cast<std::int64_t>(seq_.size()) - 1; }

    void extend_to(std::int64_t n) {
        while (max_index() < n) seq_.push_back(yv_step(seq_[seq_.size() - 2], seq_.back()));
    }

    /// T_n for any index, using T_{-n-1} = T_n for negative n.
    const YvPolynomial& at(std::int64_t n) const {
        const std::int64_t k = n >= 0 ? n : -n - 1;
        if (k > max_index()) throw IndexOutOfRange("T_" + std::to_string(n) + " is not in the cache");
        return seq_[static_cast<std::size_t>(k)];
    }

    const YvPolynomial& get(std::int64_t n) {
        extend_to(n >= 0 ? n : -n - 1);
        return at(n);
    }

    /// t_j(n)
    const Integer& coefficient(std::int64_t n, std::int64_t j) const {
        const auto& c = at(n).coeffs();
        if (j < 0 || static_cast<std::size_t>(j) >= c.size())
            throw IndexOutOfRange("t_" + std::to_string(j) + "(" + std::to_string(n) + ") is out of range");
        return c[static_cast<std::size_t>(j)];
    }

private:
    std::int64_t a_;
    std::deque<YvPolynomial> seq_;
};

inline YvPolynomial yv_compute(std::int64_t n, std::int64_t a = 1) {
    if (n < 0) throw InvalidArgument("yv_compute needs n >= 0");
    require_parameter(a);
    if (n <= 1) return YvPolynomial(n, a, {Integer(1)});
    YvPolynomial prev(0, a, {Integer(1)});
    YvPolynomial cur(1, a, {Integer(1)});
    for (std::int64_t k = 1; k < n; ++k) {
        YvPolynomial next = yv_step(prev, cur);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// T_n for n < 0, equal to T_{-n-1} but carrying index n.
inline YvPolynomial yv_compute_negative(std::int64_t n, std::int64_t a = 1) {
    if (n >= 0) throw InvalidArgument("yv_compute_negative needs n < 0");
    YvPolynomial p = yv_compute(-n - 1, a);
    return YvPolynomial(n, a, p.coeffs());
}

inline Integer yv_coefficient(std::int64_t n, std::int64_t j, std::int64_t a = 1) {
    if (n < 0) throw IndexOutOfRange("yv_coefficient needs n >= 0");
    if (j < 0 || static_cast<std::size_t>(j) >= yv_length(n))
        throw IndexOutOfRange("t_" + std::to_string(j) + "(" + std::to_string(n) + ") is out of range");
    return yv_compute(n, a).coeffs()[static_cast<std::size_t>(j)];
}

/// Same recursion on expanded polynomials with synthetic long division.
/// Slow; kept as an independent check of the compressed kernels.
inline std::vector<IntPoly> yv_dense_sequence(std::int64_t n_max, std::int64_t a = 1) {
    require_parameter(a);
    std::vector<IntPoly> seq{IntPoly{Integer(1)}, IntPoly{Integer(0), Integer(1)}};
    const IntPoly x{Integer(0), Integer(1)};
    const IntPoly a_const{Integer(static_cast<long>(a))};
    while (static_cast<std::int64_t>(seq.size()) <= n_max) {
        const IntPoly& t = seq.back();
        const IntPoly d1 = derivative(t);
        const IntPoly d2 = derivative(d1);
        IntPoly rhs = add(mul(x, mul(t, t)), mul(a_const, sub(mul(t, d2), mul(d1, d1))));
        seq.push_back(exact_div(rhs, seq[seq.size() - 2]));
    }
    seq.resize(static_cast<std::size_t>(std::max<std::int64_t>(n_max, 0)) + 1);
    return seq;
}

}  // namespace yvlab
