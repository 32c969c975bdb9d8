#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nbue/nbue.hpp"
#include "oracles.hpp"

using namespace nbue;

namespace {

double t(const TestSpec& spec, std::initializer_list<double> xs) { return evaluate(spec, make_sample(xs)).value; }

const TestSpec T1{TestId::T1}, T2{TestId::T2}, T3{TestId::T3}, T4{TestId::T4}, T5{TestId::T5}, T6{TestId::T6},
    T8{TestId::T8};

std::vector<TestSpec> every_statistic() {
    return {TestSpec::t0(0.25), TestSpec::t0(1), TestSpec::t0(2.5), T1, T2, T3, T4, T5, T6,
            TestSpec::t7(0.5), TestSpec::t7(0.3), TestSpec::t7(0.9), T8};
}

} // namespace

TEST(HollanderProschan, HandValues) {
    EXPECT_EQ(t(T1, {4.2}), 0.0);
    EXPECT_NEAR(t(T1, {1, 2, 3}), 1.0 / 9.0, 1e-15);
    EXPECT_NEAR(t(T1, {2, 4, 6}), 1.0 / 9.0, 1e-15);
}

TEST(AnisMitra, HandValues) {
    EXPECT_NEAR(t(TestSpec::t0(1), {1, 2, 3}), 5.0 / 18.0, 1e-15);
    for (std::size_t n = 1; n <= 12; ++n) {
        const Sample s(std::vector<double>(n, 1.7));
        EXPECT_NEAR(t0_anis_mitra(s, 1).value, t1_hollander_proschan(s).value + 0.5 / n, 1e-13);
    }
}

TEST(AnisMitra, ExceedsHollanderProschanByHalfOverN) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = 2 + seed % 99;
        const Sample s = oracle::random_sample(seed, n);
        EXPECT_NEAR(t0_anis_mitra(s, 1).value - t1_hollander_proschan(s).value, 0.5 / n, 1e-12);
    }
}

TEST(Koul, HandValues) {
    EXPECT_NEAR(t(T2, {1, 2, 3}), 1.0 / 6.0, 1e-15);
    EXPECT_EQ(t(T2, {3.0}), 0.0);
    EXPECT_NEAR(oracle_koul_sup(make_sample({1, 2, 3})), 1.0 / 6.0, 1e-15);
    EXPECT_EQ(oracle_koul_sup(make_sample({3.0})), 0.0);
}

TEST(Koul, MatchesSupOracle) {
    for (std::uint64_t r = 0; r < 500; ++r) {
        RngStream rng(77, r);
        const Sample s = sample_exponential(rng, 2 + r % 19);
        EXPECT_NEAR(t2_koul(s).value, oracle_koul_sup(s), 1e-12);
    }
}

TEST(Koul, Bounds) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 60;
        const double v = t2_koul(oracle::random_sample(seed, n)).value;
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0 - 1.0 / n + 1e-15);
    }
}

TEST(CoefficientOfVariation, HandValues) {
    EXPECT_NEAR(t(T3, {2, 2, 2}), -std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(t(T3, {1, 2, 3}), std::sqrt(3.0) * (std::sqrt(2.0 / 3.0) / 2.0 - 1.0), 1e-15);
    EXPECT_NEAR(t(T3, {1, 2, 3}), -1.024944, 1e-6);
}

TEST(Aly, HandValues) {
    EXPECT_NEAR(t(T4, {0.3}), 1.0, 1e-15);
    EXPECT_NEAR(t(T4, {1, 2, 3}), 0.681743, 1e-6);
}

TEST(Aly, MatchesSummationByParts) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Sample s = oracle::random_sample(seed, 1 + seed % 100);
        EXPECT_NEAR(t4_aly(s).value, oracle::t4_by_parts(s), 1e-10);
    }
}

TEST(Aly, Normalization) {
    const auto a1 = aly_normalization(1);
    EXPECT_DOUBLE_EQ(a1.lambda_n, 1.0);
    EXPECT_DOUBLE_EQ(a1.sigma_n, 1.0);
    const auto a2 = aly_normalization(2);
    EXPECT_NEAR(a2.lambda_n, 1.0 + 0.5 * std::log(0.5), 1e-15);
    EXPECT_NEAR(a2.lambda_n, 0.653426, 1e-6);
    EXPECT_NEAR(a2.sigma_n * a2.sigma_n, 0.5 * (1.0 + std::pow(1.0 + std::log(0.5), 2)), 1e-15);
    EXPECT_NEAR(a2.sigma_n * a2.sigma_n, 0.547079, 1e-6);
    const auto a3 = aly_normalization(1000), a4 = aly_normalization(10000);
    EXPECT_LT(std::abs(a4.lambda_n), std::abs(a3.lambda_n));
    EXPECT_LT(std::abs(a4.sigma_n * a4.sigma_n - 1), std::abs(a3.sigma_n * a3.sigma_n - 1));
    EXPECT_LT(std::abs(a4.lambda_n), 1e-3);
    EXPECT_LT(std::abs(a4.sigma_n * a4.sigma_n - 1), 1e-2);
}

TEST(FernandezPonce, HandValues) {
    EXPECT_NEAR(t(T5, {1, 2, 3}), 23.0 / 45.0, 1e-15);
    EXPECT_NEAR(t(T5, {4, 4}), 0.75, 1e-15);
    EXPECT_NEAR(t(T5, {2, 4, 6}), 23.0 / 45.0, 1e-15);
    try {
        t(T5, {1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::unsupported_n);
    }
}

TEST(BelzunceDispersion, HandValues) {
    EXPECT_NEAR(t(T6, {1, 2}), 1.0 / 6.0, 1e-15);
    EXPECT_NEAR(t(T6, {3, 3}), 0.25, 1e-15);
    const Sample s = make_sample({0.4, 1.9, 0.7, 2.2, 5.0});
    for (double k : {0.5, 3.0, 100.0}) EXPECT_NEAR(t6_belzunce_dispersion(s.scaled(k)).value, t6_belzunce_dispersion(s).value, 1e-14);
}

TEST(BelzunceDispersion, MatchesDeltaLoop) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Sample s = oracle::random_sample(seed, 2 + seed % 99);
        EXPECT_NEAR(t6_belzunce_dispersion(s).value, oracle::t6_delta_loop(s), 1e-10);
    }
}

TEST(BelzunceDispersion, DeltaCoefficientRange) {
    const std::size_t n = 9;
    for (std::size_t i = 0; i + 2 <= n; ++i) {
        for (std::size_t a = i + 1; a <= n; ++a) {
            const long d = static_cast<long>(n) - 2 * static_cast<long>(a) + static_cast<long>(i) + 1;
            EXPECT_GE(d, static_cast<long>(i) + 1 - static_cast<long>(n)); // attained at a = n
            EXPECT_LE(d, static_cast<long>(n - i) - 1);
        }
    }
}

TEST(RightSpread, HandValues) {
    EXPECT_NEAR(t7_belzunce_right_spread(make_sample({2.7}), 0.5).value, 0.125, 1e-15);
    EXPECT_THROW(t7_belzunce_right_spread(make_sample({1, 2}), 1.0), Error);
    EXPECT_THROW(t7_belzunce_right_spread(make_sample({1, 2}), 0.0), Error);
}

TEST(RightSpread, CutIndex) {
    EXPECT_EQ(right_spread_l(10, 0.3), 3u); // 10 * 0.3 is 2.9999999999999996 in binary
    EXPECT_EQ(right_spread_l(10, 0.35), 3u);
    EXPECT_EQ(right_spread_l(7, 0.5), 3u);
    EXPECT_EQ(right_spread_l(3, 0.1), 0u);
    for (std::size_t n = 1; n <= 200; ++n) {
        for (double a : {0.1, 0.2, 0.3, 0.5, 0.7, 0.9}) {
            const double l = static_cast<double>(right_spread_l(n, a));
            EXPECT_LE(l / n, a + 1e-12);
            EXPECT_GT((l + 1) / n, a);
        }
    }
}

TEST(RightSpread, WeightsMatchCumulativeForm) {
    for (std::size_t n : {1, 2, 5, 10, 37, 100}) {
        for (double a : {0.1, 0.3, 0.5, 0.55, 0.9}) {
            const auto w = right_spread_weights(n, a);
            const auto L = oracle::right_spread_L_cumulative(n, a);
            for (std::size_t i = 1; i <= n; ++i) {
                EXPECT_NEAR(w.L[i - 1], L[i - 1], 1e-10) << "n=" << n << " a=" << a << " i=" << i;
                EXPECT_NEAR(w.J[i - 1], oracle::right_spread_J(static_cast<double>(i) / n, a), 1e-12);
                EXPECT_GE(w.J[i - 1], 0.0);
            }
        }
    }
    // continuity of J at p = alpha
    for (double a : {0.2, 0.5, 0.8}) EXPECT_NEAR(right_spread_J(a, a), 1 - a, 1e-15);
}

TEST(RightSpread, MatchesCumulativeStatistic) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Sample s = oracle::random_sample(seed, 1 + seed % 100);
        for (double a : {0.3, 0.5, 0.9}) EXPECT_NEAR(t7_belzunce_right_spread(s, a).value, oracle::t7_cumulative(s, a), 1e-10);
    }
}

TEST(MugdadiAhmad, HandValues) {
    EXPECT_NEAR(t(T8, {5, 5}), -0.5, 1e-15);
    EXPECT_NEAR(t(T8, {1, 2, 3}), -1.0 / 6.0, 1e-15);
    EXPECT_THROW(t(T8, {1}), Error);
}

TEST(MugdadiAhmad, MatchesDoubleSumAndPairwiseMin) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Sample s = oracle::random_sample(seed, 2 + seed % 99);
        const double v = t8_mugdadi_ahmad(s).value;
        EXPECT_NEAR(v, oracle::t8_double_sum(s), 1e-12);
        EXPECT_NEAR(v, oracle::t8_pairwise_min(s), 1e-12);
        EXPECT_GE(v, -0.5);
        EXPECT_LE(v, 0.5);
    }
}

TEST(Statistics, ScaleAndPermutationInvariance) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Sample s = oracle::random_sample(seed + 5000, 2 + seed % 60);
        std::vector<double> perm(s.values().begin(), s.values().end());
        std::reverse(perm.begin(), perm.end());
        std::rotate(perm.begin(), perm.begin() + perm.size() / 3, perm.end());
        const Sample p(perm);
        for (const auto& spec : every_statistic()) {
            const double v = evaluate(spec, s).value;
            const double tol = 1e-10 * std::max(1.0, std::abs(v));
            EXPECT_NEAR(evaluate(spec, p).value, v, tol) << spec.label();
            for (double k : {1e-3, 0.5, 7.0, 1e4}) EXPECT_NEAR(evaluate(spec, s.scaled(k)).value, v, tol) << spec.label();
        }
    }
}

TEST(Statistics, FiniteOnTiesAndExtremeScales) {
    for (const auto& spec : every_statistic()) {
        for (const auto& xs : {std::vector<double>{1e-300, 1e-300}, std::vector<double>{1e300, 2e300, 3e300},
                               std::vector<double>{1, 1, 1, 1, 9}}) {
            EXPECT_TRUE(std::isfinite(evaluate(spec, Sample(xs)).value)) << spec.label();
        }
    }
}

// Null means of the standardized large-sample forms at n = 100.
TEST(Statistics, NullMeansOfStandardizedForms) {
    const std::size_t n = 100, reps = 100'000;
    const std::vector<TestSpec> specs = {T3, T4, T6, T8};
    const auto null = simulate_null(specs, n, reps, 2024);
    const auto aly = aly_normalization(n);
    const double rn = std::sqrt(static_cast<double>(n));
    auto standardized = [&](std::size_t k, double v) {
        switch (k) {
        case 0: return v;
        case 1: return rn * (v - aly.lambda_n) / aly.sigma_n;
        case 2: return std::sqrt(45.0 * n) * v;
        default: return std::sqrt(12.0 * n) * v;
        }
    };
    for (std::size_t k = 0; k < specs.size(); ++k) {
        double sum = 0, sq = 0;
        for (double v : null[k]) {
            const double z = standardized(k, v);
            sum += z;
            sq += z * z;
        }
        const double m = sum / reps;
        const double se = std::sqrt((sq / reps - m * m) / reps);
        EXPECT_LT(std::abs(m), 4 * se) << specs[k].label() << " mean " << m << " se " << se;
    }
}
