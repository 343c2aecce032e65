#include <gtest/gtest.h>

#include "support.hpp"

using namespace yvlab;

namespace {

Integer oracle_mu(std::int64_t n) {
    Integer r = 1;
    for (std::int64_t k = 1; k <= n; ++k)
        for (std::int64_t i = 2 * k - 1; i > 1; i -= 2) r *= static_cast<long>(i);
    return r;
}

/// Coefficients of lambda^k in e^(x lambda) * e^(lambda^3/3), multiplied out
/// as truncated power series.
std::vector<RatPoly> oracle_h(std::int64_t K) {
    std::vector<RatPoly> ex, ecube(static_cast<std::size_t>(K) + 1);
    Integer fact = 1;
    for (std::int64_t k = 0; k <= K; ++k) {
        if (k > 0) fact *= static_cast<long>(k);
        ex.push_back(RatPoly::monomial(make_rational(1, fact), static_cast<std::size_t>(k)));
    }
    Integer f3 = 1, p3 = 1;
    for (std::int64_t i = 0; 3 * i <= K; ++i) {
        if (i > 0) {
            f3 *= static_cast<long>(i);
            p3 *= 3;
        }
        ecube[static_cast<std::size_t>(3 * i)] = RatPoly{make_rational(1, p3 * f3)};
    }
    std::vector<RatPoly> h(static_cast<std::size_t>(K) + 1);
    for (std::int64_t k = 0; k <= K; ++k)
        for (std::int64_t i = 0; i <= k; ++i)
            h[static_cast<std::size_t>(k)] =
                add(h[static_cast<std::size_t>(k)], mul(ex[static_cast<std::size_t>(i)], ecube[static_cast<std::size_t>(k - i)]));
    return h;
}

/// Leibniz expansion; exponential but fine for tiny matrices.
IntPoly permutation_det(const Matrix<IntPoly>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    IntPoly total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        IntPoly term{Integer(1)};
        for (std::size_t i = 0; i < n; ++i) term = mul(term, m[i][perm[i]]);
        total = inversions % 2 ? sub(total, term) : add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST(SchurDet, Mu) {
    for (std::int64_t n = 0; n <= 15; ++n) EXPECT_EQ(mu(n), oracle_mu(n));
    EXPECT_EQ(mu(5), 4465125);
    EXPECT_EQ(odd_double_factorial(5), 945);
    EXPECT_EQ(factorial(10), 3628800);
}

TEST(SchurDet, HkMatchesGeneratingFunction) {
    const auto oracle = oracle_h(30);
    const auto family = hk_family(30);
    for (std::int64_t k = 0; k <= 30; ++k) {
        ASSERT_EQ(family.at(k), oracle[static_cast<std::size_t>(k)]) << "k=" << k;
        ASSERT_EQ(hk_explicit(k), oracle[static_cast<std::size_t>(k)]);
        ASSERT_EQ(family.h_tilde[static_cast<std::size_t>(k)].leading(), 1);
        ASSERT_EQ(family.at(k).degree(), k);
    }
    EXPECT_TRUE(family.at(-1).is_zero());
    EXPECT_THROW(family.at(31), IndexOutOfRange);
}

TEST(SchurDet, SmallTau) {
    EXPECT_EQ(tau_det(0), RatPoly{Rational(1)});
    EXPECT_EQ(tau_det(1), (RatPoly{Rational(0), Rational(1)}));
    // tau_2 = (x^3 - 1)/3
    EXPECT_EQ(tau_det(2), (RatPoly{make_rational(-1, 3), Rational(0), Rational(0), make_rational(1, 3)}));
    EXPECT_THROW(tau_det(-1), InvalidArgument);
}

TEST(SchurDet, BareissMatchesPermutationExpansion) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        Matrix<IntPoly> m(n, std::vector<IntPoly>(n));
        for (auto& row : m)
            for (auto& e : row) e = (rng() % 4 == 0) ? IntPoly{} : testutil::random_int_poly(rng, 3, 10);
        ASSERT_EQ(bareiss_det(m), permutation_det(m));
    }
}

TEST(SchurDet, BareissZeroPivotSwap) {
    const IntPoly one{Integer(1)}, two{Integer(2)}, zero;
    // [[0,1],[1,0]] has determinant -1; [[0,1],[0,2]] is singular.
    EXPECT_EQ(bareiss_det(Matrix<IntPoly>{{zero, one}, {one, zero}}), IntPoly{Integer(-1)});
    EXPECT_TRUE(bareiss_det(Matrix<IntPoly>{{zero, one}, {zero, two}}).is_zero());
    EXPECT_EQ(bareiss_det(Matrix<IntPoly>{}), one);
}

TEST(SchurDet, StanleyDeterminant) {
    const char* expected[] = {"1", "1/3", "1/45", "1/4725", "1/4465125"};
    for (std::int64_t n = 1; n <= 5; ++n) EXPECT_EQ(stanley_det_check(n).get_str(), expected[n - 1]);
    for (std::int64_t n = 1; n <= 12; ++n) EXPECT_EQ(stanley_det_check(n) * Rational(oracle_mu(n)), 1);
    EXPECT_THROW(stanley_det_check(0), InvalidArgument);
}

TEST(SchurDet, DeterminantRouteMatchesRecursion) {
    YvSequenceCache cache(1);
    cache.extend_to(14);
    for (std::int64_t n = 0; n <= 14; ++n) {
        const auto det = yv_via_determinant(n);
        ASSERT_EQ(det, cache.at(n)) << "n=" << n;
        ASSERT_EQ(tau_det(n).leading(), make_rational(1, oracle_mu(n)));
    }
}
