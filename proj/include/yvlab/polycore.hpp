#pragma once

// Exact dense univariate polynomials over Z, Q and F_p, and rational
// functions over Z.  Every value is immutable once built and every
// operation is a pure function.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "kronecker.hpp"

namespace yvlab {

/// Element of the prime field F_p.  Intended for desk-scale primes
/// (p < 2^32), so products fit in 64 bits.
class PrimeField {
public:
    PrimeField() = default;
    PrimeField(std::uint64_t modulus, std::int64_t value) : p_(modulus) {
        if (modulus < 2 || modulus > std::numeric_limits<std::uint32_t>::max())
            throw InvalidArgument("prime field modulus out of range");
        std::int64_t r = value % static_cast<std::int64_t>(modulus);
        if (r < 0) r += static_cast<std::int64_t>(modulus);
        v_ = static_cast<std::uint64_t>(r);
    }
    PrimeField(std::uint64_t modulus, const Integer& value) : p_(modulus) {
        if (modulus < 2 || modulus > std::numeric_limits<std::uint32_t>::max())
            throw InvalidArgument("prime field modulus out of range");
        v_ = mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(modulus));
    }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    PrimeField operator+(const PrimeField& o) const { return raw(p_, (v_ + check(o).v_) % p_); }
    PrimeField operator-(const PrimeField& o) const { return raw(p_, (v_ + p_ - check(o).v_) % p_); }
    PrimeField operator-() const { return raw(p_, (p_ - v_) % p_); }
    PrimeField operator*(const PrimeField& o) const { return raw(p_, (v_ * check(o).v_) % p_); }
    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

    PrimeField inverse() const {
        if (v_ == 0) throw ZeroDenominator("inverse of zero in F_p");
        // Fermat: v^(p-2)
        std::uint64_t result = 1, base = v_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return raw(p_, result);
    }
    PrimeField operator/(const PrimeField& o) const { return *this * o.inverse(); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_ && v_ == o.v_; }

private:
    static PrimeField raw(std::uint64_t p, std::uint64_t v) {
        PrimeField f;
        f.p_ = p;
        f.v_ = v;
        return f;
    }
    const PrimeField& check(const PrimeField& o) const {
        if (o.p_ != p_) throw InvalidArgument("mixed prime field moduli");
        return o;
    }

    std::uint64_t p_ = 2;
    std::uint64_t v_ = 0;
};

/// Per-domain hooks used by the generic polynomial kernels.  Zero and
/// one are produced "like" an existing element so that F_p elements
/// inherit their modulus.
template <class R>
struct CoeffTraits;

template <>
struct CoeffTraits<Integer> {
    static Integer zero_like(const Integer&) { return 0; }
    static Integer one_like(const Integer&) { return 1; }
    static bool is_zero(const Integer& c) { return c == 0; }
    static Integer times(const Integer& c, long k) { return c * k; }
    /// Sets q = x / d when the division is exact in Z.
    static bool divide(const Integer& x, const Integer& d, Integer& q) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return false;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        return true;
    }
    static std::string str(const Integer& c) { return c.get_str(); }
};

template <>
struct CoeffTraits<Rational> {
    static Rational zero_like(const Rational&) { return 0; }
    static Rational one_like(const Rational&) { return 1; }
    static bool is_zero(const Rational& c) { return c == 0; }
    static Rational times(const Rational& c, long k) { return c * k; }
    static bool divide(const Rational& x, const Rational& d, Rational& q) {
        q = x / d;
        return true;
    }
    static std::string str(const Rational& c) { return c.get_str(); }
};

template <>
struct CoeffTraits<PrimeField> {
    static PrimeField zero_like(const PrimeField& c) { return PrimeField(c.modulus(), 0); }
    static PrimeField one_like(const PrimeField& c) { return PrimeField(c.modulus(), 1); }
    static bool is_zero(const PrimeField& c) { return c.is_zero(); }
    static PrimeField times(const PrimeField& c, long k) {
        return c * PrimeField(c.modulus(), static_cast<std::int64_t>(k));
    }
    static bool divide(const PrimeField& x, const PrimeField& d, PrimeField& q) {
        q = x / d;
        return true;
    }
    static std::string str(const PrimeField& c) { return std::to_string(c.value()); }
};

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

/// Dense polynomial, coefficients in ascending degree, trailing zeros
/// trimmed.  The zero polynomial has no coefficients.
template <class R>
class DensePoly {
public:
    using Coeff = R;
    using Traits = CoeffTraits<R>;

    DensePoly() = default;
    explicit DensePoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

    /// c * x^k
    static DensePoly monomial(const R& c, std::size_t k) {
        if (Traits::is_zero(c)) return {};
        std::vector<R> v(k + 1, Traits::zero_like(c));
        v[k] = c;
        return DensePoly(std::move(v));
    }

    const std::vector<R>& coeffs() const { return c_; }
    std::size_t size() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return c_.empty() ? kZeroDegree : static_cast<std::int64_t>(c_.size()) - 1; }
    const R& leading() const { return c_.back(); }

    /// Coefficient of x^k; requires a nonzero polynomial to know the domain.
    R coeff(std::size_t k) const {
        if (k < c_.size()) return c_[k];
        return c_.empty() ? R{} : Traits::zero_like(c_.front());
    }

    bool operator==(const DensePoly& o) const { return c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_;
};

using IntPoly = DensePoly<Integer>;
using RatPoly = DensePoly<Rational>;
using ModPoly = DensePoly<PrimeField>;

template <class R>
DensePoly<R> add(const DensePoly<R>& p, const DensePoly<R>& q) {
    const auto& a = p.size() >= q.size() ? p.coeffs() : q.coeffs();
    const auto& b = p.size() >= q.size() ? q.coeffs() : p.coeffs();
    std::vector<R> r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return DensePoly<R>(std::move(r));
}

template <class R>
DensePoly<R> neg(const DensePoly<R>& p) {
    std::vector<R> r(p.coeffs());
    for (auto& c : r) c = -c;
    return DensePoly<R>(std::move(r));
}

template <class R>
DensePoly<R> sub(const DensePoly<R>& p, const DensePoly<R>& q) {
    std::vector<R> r(p.coeffs());
    if (r.size() < q.size()) r.resize(q.size(), CoeffTraits<R>::zero_like(q.leading()));
    for (std::size_t i = 0; i < q.size(); ++i) r[i] -= q.coeffs()[i];
    return DensePoly<R>(std::move(r));
}

template <class R>
DensePoly<R> scale(const DensePoly<R>& p, const R& s) {
    std::vector<R> r(p.coeffs());
    for (auto& c : r) c *= s;
    return DensePoly<R>(std::move(r));
}

/// Schoolbook product; integer polynomials of nontrivial size go through
/// Kronecker substitution instead.
template <class R>
DensePoly<R> mul(const DensePoly<R>& p, const DensePoly<R>& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if constexpr (std::is_same_v<R, Integer>) {
        if (std::min(p.size(), q.size()) >= detail::kDenseKroneckerThreshold)
            return DensePoly<R>(detail::kronecker_mul(p.coeffs(), q.coeffs()));
    }
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<R> r(a.size() + b.size() - 1, CoeffTraits<R>::zero_like(a[0]));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (CoeffTraits<R>::is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return DensePoly<R>(std::move(r));
}

/// p * x^k
template <class R>
DensePoly<R> shift_up(const DensePoly<R>& p, std::size_t k) {
    if (p.is_zero() || k == 0) return p;
    std::vector<R> r(k, CoeffTraits<R>::zero_like(p.leading()));
    r.insert(r.end(), p.coeffs().begin(), p.coeffs().end());
    return DensePoly<R>(std::move(r));
}

template <class R>
DensePoly<R> derivative(const DensePoly<R>& p) {
    if (p.size() <= 1) return {};
    std::vector<R> r;
    r.reserve(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        r.push_back(CoeffTraits<R>::times(p.coeffs()[i], static_cast<long>(i)));
    return DensePoly<R>(std::move(r));
}

/// Quotient of p by q, which must divide p exactly.  Synthetic long
/// division; throws NonExactDivision as soon as a step cannot be exact.
template <class R>
DensePoly<R> exact_div(const DensePoly<R>& p, const DensePoly<R>& q) {
    using T = CoeffTraits<R>;
    if (q.is_zero()) throw ZeroDenominator("exact_div by the zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < q.degree()) throw NonExactDivision("exact_div: divisor degree exceeds dividend degree");
    std::vector<R> rem(p.coeffs());
    const auto& d = q.coeffs();
    const std::size_t dq = d.size() - 1;
    const std::size_t nq = rem.size() - dq;
    std::vector<R> quot(nq, T::zero_like(d.back()));
    for (std::size_t k = nq; k-- > 0;) {
        R& top = rem[k + dq];
        if (T::is_zero(top)) continue;
        if (!T::divide(top, d.back(), quot[k]))
            throw NonExactDivision("exact_div: leading coefficient does not divide at degree " +
                                   std::to_string(k + dq));
        for (std::size_t i = 0; i < dq; ++i) rem[k + i] -= quot[k] * d[i];
        top = T::zero_like(top);
    }
    for (std::size_t i = 0; i < dq; ++i)
        if (!T::is_zero(rem[i])) throw NonExactDivision("exact_div: nonzero remainder");
    return DensePoly<R>(std::move(quot));
}

/// Euclidean division over a field: p = quot*q + rem with deg rem < deg q.
template <class R>
std::pair<DensePoly<R>, DensePoly<R>> divmod(const DensePoly<R>& p, const DensePoly<R>& q) {
    using T = CoeffTraits<R>;
    if (q.is_zero()) throw ZeroDenominator("divmod by the zero polynomial");
    if (p.degree() < q.degree()) return {DensePoly<R>{}, p};
    std::vector<R> rem(p.coeffs());
    const auto& d = q.coeffs();
    const std::size_t dq = d.size() - 1;
    const std::size_t nq = rem.size() - dq;
    std::vector<R> quot(nq, T::zero_like(d.back()));
    for (std::size_t k = nq; k-- > 0;) {
        if (T::is_zero(rem[k + dq])) continue;
        if (!T::divide(rem[k + dq], d.back(), quot[k]))
            throw NonExactDivision("divmod: coefficient domain is not a field here");
        for (std::size_t i = 0; i <= dq; ++i) rem[k + i] -= quot[k] * d[i];
    }
    rem.resize(dq);
    return {DensePoly<R>(std::move(quot)), DensePoly<R>(std::move(rem))};
}

/// Horner evaluation.
template <class R>
R eval(const DensePoly<R>& p, const R& point) {
    if (p.is_zero()) return CoeffTraits<R>::zero_like(point);
    R acc = p.leading();
    for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * point + p.coeffs()[i];
    return acc;
}

/// q(m) = p(m + c)
template <class R>
DensePoly<R> shift_arg(const DensePoly<R>& p, const R& c) {
    if (p.is_zero()) return {};
    const std::size_t n = p.size();
    std::vector<R> r(p.coeffs());
    // Taylor shift by repeated synthetic division.
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) r[j] += c * r[j + 1];
    return DensePoly<R>(std::move(r));
}

/// q(m) = p(-m)
template <class R>
DensePoly<R> negate_arg(const DensePoly<R>& p) {
    std::vector<R> r(p.coeffs());
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return DensePoly<R>(std::move(r));
}

template <class R>
DensePoly<R> pow(const DensePoly<R>& p, unsigned e) {
    if (p.is_zero()) return {};
    DensePoly<R> result{CoeffTraits<R>::one_like(p.leading())};
    DensePoly<R> base = p;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return RatPoly(std::move(r));
}

/// Converts a rational polynomial whose coefficients are all integers.
inline IntPoly to_integer(const RatPoly& p) {
    std::vector<Integer> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) throw NonIntegralResult("coefficient " + c.get_str() + " is not an integer");
        r.push_back(c.get_num());
    }
    return IntPoly(std::move(r));
}

inline ModPoly reduce_mod(const IntPoly& p, std::uint64_t prime) {
    std::vector<PrimeField> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) r.emplace_back(prime, c);
    return ModPoly(std::move(r));
}

inline ModPoly reduce_mod(const RatPoly& p, std::uint64_t prime) {
    std::vector<PrimeField> r;
    r.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        PrimeField den(prime, c.get_den());
        if (den.is_zero())
            throw NotPIntegral("denominator of " + c.get_str() + " is divisible by " + std::to_string(prime));
        r.push_back(PrimeField(prime, c.get_num()) / den);
    }
    return ModPoly(std::move(r));
}

/// gcd of the coefficients, nonnegative.
inline Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// p divided by its content, with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return {};
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Integer> r(p.coeffs());
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(r));
}

/// Pseudo-remainder of a by b (b nonzero).
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(a.coeffs());
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t shift = r.size() - 1 - db;
        Integer lead = r.back();
        for (auto& c : r) c *= d.back();
        for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= lead * d[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return IntPoly(std::move(r));
}

/// Greatest common divisor in Z[x], normalized with positive leading
/// coefficient.  Primitive remainder sequence.
inline IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero()) return scale(primitive_part(q), content(q));
    if (q.is_zero()) return scale(primitive_part(p), content(p));
    Integer c;
    const Integer cp = content(p), cq = content(q);
    mpz_gcd(c.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
    IntPoly a = primitive_part(p), b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return scale(a, c);
}

/// Quotient num/den of integer polynomials in canonical form: coprime in
/// Z[x] (including integer content) with positive leading denominator
/// coefficient.  Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_{Integer(1)} {}
    RationalFunction(IntPoly num, IntPoly den) {
        if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
        if (num.is_zero()) {
            den_ = IntPoly{Integer(1)};
            return;
        }
        IntPoly g = gcd(num, den);
        num_ = exact_div(num, g);
        den_ = exact_div(den, g);
        if (den_.leading() < 0) {
            num_ = neg(num_);
            den_ = neg(den_);
        }
    }
    explicit RationalFunction(IntPoly p) : num_(std::move(p)), den_{Integer(1)} {}

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    IntPoly num_;
    IntPoly den_;
};

inline RationalFunction ratfun_canonical(const IntPoly& num, const IntPoly& den) { return {num, den}; }

inline RationalFunction add(const RationalFunction& f, const RationalFunction& g) {
    return {add(mul(f.num(), g.den()), mul(g.num(), f.den())), mul(f.den(), g.den())};
}

inline RationalFunction sub(const RationalFunction& f, const RationalFunction& g) {
    return {sub(mul(f.num(), g.den()), mul(g.num(), f.den())), mul(f.den(), g.den())};
}

inline RationalFunction mul(const RationalFunction& f, const RationalFunction& g) {
    return {mul(f.num(), g.num()), mul(f.den(), g.den())};
}

inline RationalFunction derivative(const RationalFunction& f) {
    return {sub(mul(derivative(f.num()), f.den()), mul(f.num(), derivative(f.den()))), mul(f.den(), f.den())};
}

/// Human-readable rendering in descending degree, e.g. "x^3 - 1".
template <class R>
std::string to_string(const DensePoly<R>& p, const std::string& var = "x") {
    using T = CoeffTraits<R>;
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const R& c = p.coeffs()[k];
        if (T::is_zero(c)) continue;
        std::string s = T::str(c);
        bool negative = !s.empty() && s[0] == '-';
        if (negative) s.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = s == "1";
        if (k == 0) {
            out += s;
            continue;
        }
        if (!unit) out += s.find('/') != std::string::npos ? "(" + s + ")" : s;
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace yvlab
