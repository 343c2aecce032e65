#include <gtest/gtest.h>

#include "support.hpp"

using namespace yvlab;
using testutil::terms;

namespace {

/// Straight from the bilinear recursion over Q[x] with quotient and
/// remainder; shares nothing with the compressed kernels.
std::vector<RatPoly> oracle_sequence(std::int64_t n_max, std::int64_t a) {
    std::vector<RatPoly> seq{RatPoly{Rational(1)}, RatPoly{Rational(0), Rational(1)}};
    const RatPoly x{Rational(0), Rational(1)};
    while (static_cast<std::int64_t>(seq.size()) <= n_max) {
        const RatPoly& t = seq.back();
        const RatPoly& prev = seq[seq.size() - 2];
        const RatPoly d1 = derivative(t), d2 = derivative(d1);
        const RatPoly num = add(mul(x, mul(t, t)), scale(sub(mul(t, d2), mul(d1, d1)), Rational(a)));
        auto [q, r] = divmod(num, prev);
        EXPECT_TRUE(r.is_zero());
        seq.push_back(q);
    }
    return seq;
}

}  // namespace

TEST(YvEngine, GoldenTable) {
    YvSequenceCache cache(1);
    cache.extend_to(5);
    EXPECT_EQ(yv_expand(cache.at(0)), terms({{1, 0}}));
    EXPECT_EQ(yv_expand(cache.at(1)), terms({{1, 1}}));
    EXPECT_EQ(yv_expand(cache.at(2)), terms({{1, 3}, {-1, 0}}));
    EXPECT_EQ(yv_expand(cache.at(3)), terms({{1, 6}, {-5, 3}, {-5, 0}}));
    EXPECT_EQ(yv_expand(cache.at(4)), terms({{1, 10}, {-15, 7}, {-175, 1}}));
    EXPECT_EQ(yv_expand(cache.at(5)),
              terms({{1, 15}, {-35, 12}, {175, 9}, {-1225, 6}, {-12250, 3}, {6125, 0}}));
    EXPECT_EQ(to_string(yv_expand(yv_compute(2))), "x^3 - 1");
    EXPECT_EQ(to_string(yv_expand(yv_compute(0))), "1");
}

TEST(YvEngine, StrideThreeShape) {
    EXPECT_EQ(yv_degree(5), 15);
    EXPECT_EQ(yv_delta(4), 1);
    EXPECT_EQ(yv_delta(-2), 1);
    EXPECT_EQ(yv_delta(-1), 0);
    EXPECT_EQ(yv_length(5), 6u);
    YvSequenceCache cache(1);
    cache.extend_to(30);
    for (std::int64_t n = 0; n <= 30; ++n) {
        const auto& t = cache.at(n);
        const IntPoly dense = yv_expand(t);
        ASSERT_EQ(dense.degree(), yv_degree(n));
        ASSERT_EQ(dense.leading(), 1);
        for (std::int64_t k = 0; k <= dense.degree(); ++k)
            if (dense.coeff(static_cast<std::size_t>(k)) != 0) ASSERT_EQ((k - t.delta()) % 3, 0);
        ASSERT_EQ(yv_compress(n, 1, dense), t);
    }
}

TEST(YvEngine, MatchesIndependentOracle) {
    for (const std::int64_t a : {1, -4, 2, 3}) {
        const auto oracle = oracle_sequence(12, a);
        YvSequenceCache cache(a);
        cache.extend_to(12);
        for (std::int64_t n = 0; n <= 12; ++n)
            ASSERT_EQ(to_rational(yv_expand(cache.at(n))), oracle[static_cast<std::size_t>(n)]) << "n=" << n << " a=" << a;
    }
}

TEST(YvEngine, MatchesDenseRoute) {
    const auto dense = yv_dense_sequence(24, 1);
    YvSequenceCache cache(1);
    cache.extend_to(24);
    for (std::int64_t n = 0; n <= 24; ++n) ASSERT_EQ(yv_expand(cache.at(n)), dense[static_cast<std::size_t>(n)]);
    const auto dense_m4 = yv_dense_sequence(16, -4);
    for (std::int64_t n = 0; n <= 16; ++n) ASSERT_EQ(yv_expand(yv_compute(n, -4)), dense_m4[static_cast<std::size_t>(n)]);
}

// t_j^(a)(n) = a^((d_n - 3j - delta)/3) t_j^(1)(n)
TEST(YvEngineProperty, ParameterScaling) {
    YvSequenceCache base(1);
    base.extend_to(25);
    for (const std::int64_t a : {-4, 2, 3, -1, 5}) {
        YvSequenceCache cache(a);
        cache.extend_to(25);
        for (std::int64_t n = 0; n <= 25; ++n) {
            const auto& c = cache.at(n).coeffs();
            for (std::size_t j = 0; j < c.size(); ++j) {
                const std::int64_t e = (yv_degree(n) - 3 * static_cast<std::int64_t>(j) - yv_delta(n)) / 3;
                Integer scale_factor;
                mpz_pow_ui(scale_factor.get_mpz_t(), Integer(static_cast<long>(a)).get_mpz_t(), static_cast<unsigned long>(e));
                ASSERT_EQ(c[j], scale_factor * base.coefficient(n, static_cast<std::int64_t>(j)))
                    << "n=" << n << " j=" << j << " a=" << a;
            }
        }
    }
}

TEST(YvEngine, NegativeIndexReflection) {
    YvSequenceCache cache(1);
    cache.extend_to(10);
    for (std::int64_t n = 0; n <= 10; ++n) {
        EXPECT_EQ(cache.at(-n - 1).coeffs(), cache.at(n).coeffs());
        const auto neg = yv_compute_negative(-n - 1);
        EXPECT_EQ(neg.n(), -n - 1);
        EXPECT_EQ(neg.coeffs(), cache.at(n).coeffs());
        EXPECT_EQ(yv_degree(-n - 1), yv_degree(n));
    }
}

TEST(YvEngine, Errors) {
    EXPECT_THROW(yv_compute(-1), InvalidArgument);
    EXPECT_THROW(yv_compute(3, 0), InvalidArgument);
    EXPECT_THROW(YvSequenceCache(0), InvalidArgument);
    EXPECT_THROW(yv_coefficient(3, 3), IndexOutOfRange);
    EXPECT_THROW(yv_coefficient(3, -1), IndexOutOfRange);
    EXPECT_EQ(yv_coefficient(5, 0), 6125);
    EXPECT_THROW(YvPolynomial(2, 1, {Integer(-1)}), InternalMismatch);
    EXPECT_THROW(YvPolynomial(2, 1, {Integer(-1), Integer(2)}), InternalMismatch);
    YvSequenceCache cache(1);
    EXPECT_THROW(cache.at(5), IndexOutOfRange);
}

TEST(YvEngine, StepDetectsCorruptInput) {
    const YvPolynomial t2 = yv_compute(2);
    const YvPolynomial bad(3, 1, {Integer(7), Integer(-5), Integer(1)});
    EXPECT_THROW(yv_step(t2, bad), NonExactDivision);
    EXPECT_THROW(yv_step(t2, yv_compute(4)), InvalidArgument);
}
