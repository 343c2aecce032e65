#pragma once

// Second route to T_n: the polynomials h_k generated by exp(x t + t^3/3),
// the Jacobi-Trudi determinant tau_n = det(h_{j-2i+n+1}) and the
// normalization T_n = mu_n tau_n.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polycore.hpp"
#include "yv_engine.hpp"

namespace yvlab {

inline Integer factorial(std::int64_t k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

/// (2k-1)!!
inline Integer odd_double_factorial(std::int64_t k) {
    Integer r;
    if (k <= 0) return 1;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(2 * k - 1));
    return r;
}

/// mu_n = prod_{k=1}^n (2k-1)!!
inline Integer mu(std::int64_t n) {
    if (n < 0) throw InvalidArgument("mu needs n >= 0");
    Integer r = 1;
    for (std::int64_t k = 1; k <= n; ++k) r *= odd_double_factorial(k);
    return r;
}

/// h_0..h_K and their integral normalizations h~_k = k! h_k.
struct HkFamily {
    std::int64_t max_index = 0;
    std::vector<RatPoly> h;
    std::vector<IntPoly> h_tilde;

    /// h_k with the convention h_k = 0 for k < 0.
    const RatPoly& at(std::int64_t k) const {
        static const RatPoly zero;
        if (k < 0) return zero;
        if (k > max_index) throw IndexOutOfRange("h_" + std::to_string(k) + " beyond the family");
        return h[static_cast<std::size_t>(k)];
    }
};

/// h_k from the closed sum over i <= k/3 of x^(k-3i) / (3^i i! (k-3i)!).
inline RatPoly hk_explicit(std::int64_t k) {
    if (k < 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1, Rational(0));
    Integer pow3 = 1;
    for (std::int64_t i = 0; 3 * i <= k; ++i) {
        c[static_cast<std::size_t>(k - 3 * i)] = make_rational(1, pow3 * factorial(i) * factorial(k - 3 * i));
        pow3 *= 3;
    }
    return RatPoly(std::move(c));
}

/// Builds the family by the three-term recursions and checks it against
/// the closed sum.  Throws InternalMismatch if any pair disagrees.
inline HkFamily hk_family(std::int64_t max_index) {
    if (max_index < 0) throw InvalidArgument("hk_family needs K >= 0");
    HkFamily f;
    f.max_index = max_index;
    const RatPoly x{Rational(0), Rational(1)};
    const IntPoly xi{Integer(0), Integer(1)};
    // (k+1) h_{k+1} = x h_k + h_{k-2};  h~_{k+1} = x h~_k + k(k-1) h~_{k-2}
    for (std::int64_t k = 0; k <= max_index; ++k) {
        if (k == 0) {
            f.h.push_back(RatPoly{Rational(1)});
            f.h_tilde.push_back(IntPoly{Integer(1)});
            continue;
        }
        const auto prev = static_cast<std::size_t>(k - 1);
        RatPoly next = mul(x, f.h[prev]);
        IntPoly next_tilde = mul(xi, f.h_tilde[prev]);
        if (k >= 3) {
            next = add(next, f.h[static_cast<std::size_t>(k - 3)]);
            next_tilde = add(next_tilde, scale(f.h_tilde[static_cast<std::size_t>(k - 3)],
                                               Integer((k - 1) * (k - 2))));
        }
        f.h.push_back(scale(next, make_rational(1, k)));
        f.h_tilde.push_back(std::move(next_tilde));
    }
    for (std::int64_t k = 0; k <= max_index; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (!(f.h[i] == hk_explicit(k)))
            throw InternalMismatch("h_" + std::to_string(k) + ": recursion and closed sum disagree");
        if (!(to_rational(f.h_tilde[i]) == scale(f.h[i], Rational(factorial(k)))))
            throw InternalMismatch("h~_" + std::to_string(k) + " is not k! h_k");
    }
    return f;
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Entries h_{j-2i+n+1}, 1 <= i,j <= n (stored 0-based).
inline Matrix<RatPoly> staircase_matrix(std::int64_t n, const HkFamily& family) {
    Matrix<RatPoly> m(static_cast<std::size_t>(n), std::vector<RatPoly>(static_cast<std::size_t>(n)));
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = family.at(j - 2 * i + n + 1);
    return m;
}

/// Determinant by fraction-free (Bareiss) elimination over R[x] for an
/// integral domain R: each update is divided exactly by the previous
/// pivot.  A zero pivot is swapped with the first lower row that is
/// nonzero in its column.
template <class R>
DensePoly<R> bareiss_det(Matrix<DensePoly<R>> m) {
    using Poly = DensePoly<R>;
    const std::size_t n = m.size();
    if (n == 0) return Poly{R(1)};
    Poly prev{R(1)};
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j]));
                m[i][j] = exact_div(t, prev);
            }
            m[i][k] = Poly{};
        }
        prev = m[k][k];
    }
    return negate ? neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Scales every row by the lcm of its denominators.  Returns the integer
/// matrix and the product of the scale factors.
inline std::pair<Matrix<IntPoly>, Integer> clear_row_denominators(const Matrix<RatPoly>& m) {
    Matrix<IntPoly> out;
    Integer total = 1;
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& e : row)
            for (const auto& c : e.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        std::vector<IntPoly> scaled;
        for (const auto& e : row) scaled.push_back(to_integer(scale(e, Rational(l))));
        out.push_back(std::move(scaled));
        total *= l;
    }
    return {std::move(out), total};
}

/// tau_n; tau_0 = 1 (empty determinant).  Elimination runs over Z[x]
/// after clearing row denominators; the scale is divided out at the end.
inline RatPoly tau_det(std::int64_t n) {
    if (n < 0) throw InvalidArgument("tau_det needs n >= 0");
    if (n == 0) return RatPoly{Rational(1)};
    auto [m, row_scale] = clear_row_denominators(staircase_matrix(n, hk_family(2 * n - 1)));
    return scale(to_rational(bareiss_det(std::move(m))), make_rational(1, row_scale));
}

/// T_n = mu_n tau_n, parameter a = 1 only.
inline YvPolynomial yv_via_determinant(std::int64_t n) {
    RatPoly scaled = scale(tau_det(n), Rational(mu(n)));
    return yv_compress(n, 1, to_integer(scaled));
}

/// det(1/(j-2i+n+1)!) with 1/l! = 0 for l < 0, by Gaussian elimination
/// over Q.
inline Rational stanley_det_check(std::int64_t n) {
    if (n < 1) throw InvalidArgument("stanley_det_check needs n >= 1");
    const auto size = static_cast<std::size_t>(n);
    Matrix<Rational> m(size, std::vector<Rational>(size, Rational(0)));
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 1; j <= n; ++j) {
            const std::int64_t l = j - 2 * i + n + 1;
            if (l >= 0) m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = make_rational(1, factorial(l));
        }
    Rational det = 1;
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t r = k;
        while (r < size && m[r][k] == 0) ++r;
        if (r == size) return 0;
        if (r != k) {
            std::swap(m[k], m[r]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < size; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < size; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace yvlab
