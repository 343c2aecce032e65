#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "yvlab/yvlab.hpp"

namespace testutil {

inline constexpr int kRandomCases = 1000;

/// Random integer with up to `bits` bits and random sign.
inline yvlab::Integer random_integer(std::mt19937_64& rng, unsigned bits) {
    yvlab::Integer z = 0;
    for (unsigned done = 0; done < bits; done += 32) z = (z << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
    if (bits % 32) z >>= 32 - bits % 32;
    if (rng() & 1) z = -z;
    return z;
}

inline yvlab::IntPoly random_int_poly(std::mt19937_64& rng, std::size_t max_len, unsigned bits) {
    std::vector<yvlab::Integer> c(rng() % (max_len + 1));
    for (auto& x : c) x = random_integer(rng, 1 + static_cast<unsigned>(rng() % bits));
    return yvlab::IntPoly(std::move(c));
}

inline yvlab::IntPoly random_nonzero_int_poly(std::mt19937_64& rng, std::size_t max_len, unsigned bits) {
    for (;;) {
        auto p = random_int_poly(rng, max_len, bits);
        if (!p.is_zero()) return p;
    }
}

inline yvlab::RatPoly random_rat_poly(std::mt19937_64& rng, std::size_t max_len, unsigned bits) {
    std::vector<yvlab::Rational> c(rng() % (max_len + 1));
    for (auto& x : c) {
        yvlab::Integer den = random_integer(rng, bits);
        if (den == 0) den = 1;
        x = yvlab::make_rational(random_integer(rng, bits), den);
    }
    return yvlab::RatPoly(std::move(c));
}

/// c * prod (m + r_i) in Q[m], the factored shape used by the ratio table.
inline yvlab::RatPoly factored(const yvlab::Rational& c, std::initializer_list<yvlab::RatPoly> factors) {
    yvlab::RatPoly r{c};
    for (const auto& f : factors) r = yvlab::mul(r, f);
    return r;
}

/// m + k
inline yvlab::RatPoly lin(std::int64_t k) { return yvlab::RatPoly{yvlab::Rational(k), yvlab::Rational(1)}; }

/// Builds the dense integer polynomial from (coefficient, exponent) terms.
inline yvlab::IntPoly terms(std::initializer_list<std::pair<long, std::size_t>> t) {
    yvlab::IntPoly r;
    for (const auto& [c, e] : t) r = yvlab::add(r, yvlab::IntPoly::monomial(yvlab::Integer(c), e));
    return r;
}

}  // namespace testutil
