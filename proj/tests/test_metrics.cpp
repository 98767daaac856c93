#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sshare/error.hpp"
#include "sshare/metrics.hpp"

using namespace sshare;

namespace {

DemandTrace trace_of(std::vector<std::int64_t> v) {
    DemandTrace t;
    t.values = std::move(v);
    return t;
}

SweepRow row(double gamma, std::int64_t a, std::int64_t b) {
    SweepRow r;
    r.gamma = gamma;
    r.allocation = {a, b, 0.0};
    return r;
}

}  // namespace

TEST(Surplus, Deterministic) {
    EXPECT_EQ(fractional_surplus(0, 30.0), -1.0);
    EXPECT_EQ(fractional_surplus(0, 0.001), -1.0);
    EXPECT_EQ(fractional_surplus(43, 43.0), 0.0);
    EXPECT_DOUBLE_EQ(fractional_surplus(60, 50.0), 0.2);
    EXPECT_THROW(fractional_surplus(3, 0.0), Error);
    for (std::int64_t n = 0; n < 100; ++n) {
        EXPECT_LT(fractional_surplus(n, 37.5), fractional_surplus(n + 1, 37.5));
    }
}

TEST(Surplus, Empirical) {
    const SurplusReport exact = empirical_surplus(10, trace_of({10, 10, 10}));
    EXPECT_EQ(exact.empirical_mean, 0.0);
    EXPECT_EQ(exact.skipped_zero_demand, 0u);

    const SurplusReport mixed = empirical_surplus(10, trace_of({5, 20}));
    EXPECT_DOUBLE_EQ(mixed.empirical_mean, 0.25);

    const SurplusReport zero = empirical_surplus(5, trace_of({0, 5}));
    EXPECT_EQ(zero.empirical_mean, 0.0);
    EXPECT_EQ(zero.skipped_zero_demand, 1u);

    try {
        empirical_surplus(5, trace_of({0, 0}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AllSamplesZeroDemand);
    }
}

TEST(Surplus, ConstantTraceMatchesDeterministic) {
    for (std::size_t len = 1; len <= 1000; len += 37) {
        for (std::int64_t c : {1, 7, 30, 50, 63}) {
            for (std::int64_t n : {0, 5, 6, 30, 80}) {
                const DemandTrace t = trace_of(std::vector<std::int64_t>(len, c));
                EXPECT_EQ(empirical_surplus(n, t).empirical_mean, fractional_surplus(n, double(c)));
            }
        }
    }
}

TEST(Fairness, Identities) {
    EXPECT_EQ(jain_fairness(10, 10), 1.0);
    EXPECT_EQ(jain_fairness(20, 0), 0.5);
    EXPECT_EQ(jain_fairness(0, 20), 0.5);
    EXPECT_DOUBLE_EQ(jain_fairness(14, 6), 400.0 / 464.0);
    EXPECT_NEAR(jain_fairness(14, 6), 0.86207, 1e-5);
    try {
        jain_fairness(0, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UndefinedFairness);
    }
    for (std::int64_t a = 0; a <= 40; ++a) {
        for (std::int64_t b = 0; b <= 40; ++b) {
            if (a + b == 0) continue;
            EXPECT_NEAR(jain_fairness(a, b), oracle::fairness(double(a), double(b)), 1e-15);
        }
    }
}

TEST(Sweep, SingletonMatchesOptimizer) {
    const std::vector<double> grid{0.5};
    const SweepResult s = sweep_gamma(20, 30, 50, grid);
    ASSERT_EQ(s.rows.size(), 1u);
    EXPECT_EQ(s.rows[0].allocation, optimize_partition({20, 0.5, 30, 50}));
    EXPECT_NEAR(s.rows[0].surplus_a.deterministic, -16.0 / 30, 1e-15);
    EXPECT_NEAR(s.rows[0].surplus_b.deterministic, -44.0 / 50, 1e-15);
    EXPECT_DOUBLE_EQ(s.rows[0].fairness, 400.0 / 464.0);
    EXPECT_TRUE(std::isnan(s.rows[0].surplus_a.empirical_mean));
}

TEST(Sweep, MonotoneAndMatchesOracleAtEveryPoint) {
    const auto grid = make_gamma_grid(0.01);
    const SweepResult s = sweep_gamma(20, 30, 50, grid);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        const auto ref = oracle::brute_force(20, [&](std::int64_t a, std::int64_t b) {
            return oracle::objective(double(a), double(b), grid[i], 30, 50);
        });
        EXPECT_EQ(s.rows[i].allocation.n_a, ref.n_a);
        EXPECT_EQ(s.rows[i].allocation.n_b, ref.n_b);
        if (i > 0) {
            EXPECT_GE(s.rows[i].allocation.n_a, s.rows[i - 1].allocation.n_a);
        }
    }
}

TEST(Sweep, ConstraintBindsWhenStatisticsExceedPool) {
    const auto grid = make_gamma_grid(0.01);
    for (const SweepRow& r : sweep_gamma(100, 43, 62, grid).rows) {
        EXPECT_EQ(r.allocation.n_a + r.allocation.n_b, 100);
    }
}

TEST(Sweep, EmptyPoolHasUndefinedFairness) {
    const std::vector<double> grid{0.0, 1.0};
    const SweepResult s = sweep_gamma(0, 30, 50, grid);
    EXPECT_TRUE(std::isnan(s.rows[0].fairness));
    EXPECT_EQ(s.rows[1].surplus_a.deterministic, -1.0);
}

TEST(Sweep, AttachEmpiricalSurplus) {
    const std::vector<double> grid{0.5};
    SweepResult s = sweep_gamma(100, 30, 50, grid);
    attach_empirical_surplus(s, trace_of({30, 30}), trace_of({0, 25, 100}));
    EXPECT_EQ(s.rows[0].surplus_a.empirical_mean, 0.0);
    EXPECT_DOUBLE_EQ(s.rows[0].surplus_b.empirical_mean, (1.0 - 0.5) / 2);
    EXPECT_EQ(s.rows[0].surplus_b.skipped_zero_demand, 1u);
}

TEST(Starvation, RunDetection) {
    SweepResult s;
    s.rows = {row(0.0, 0, 5), row(0.01, 0, 5), row(0.02, 3, 2), row(0.03, 5, 0)};
    const StarvationReport r = starvation_regions(s);
    EXPECT_EQ(r.ran_a, (std::vector<GammaInterval>{{0.0, 0.01}}));
    EXPECT_EQ(r.ran_b, (std::vector<GammaInterval>{{0.03, 0.03}}));
    EXPECT_EQ(r.either, (std::vector<GammaInterval>{{0.0, 0.01}, {0.03, 0.03}}));

    SweepResult fed;
    fed.rows = {row(0.0, 1, 1), row(0.5, 2, 2)};
    const StarvationReport none = starvation_regions(fed);
    EXPECT_TRUE(none.ran_a.empty());
    EXPECT_TRUE(none.ran_b.empty());
    EXPECT_TRUE(none.either.empty());
}

TEST(Starvation, PrefixAndSuffixAtPool20) {
    const auto grid = make_gamma_grid(0.01);
    const StarvationReport r = starvation_regions(sweep_gamma(20, 30, 50, grid));
    ASSERT_EQ(r.ran_a.size(), 1u);
    ASSERT_EQ(r.ran_b.size(), 1u);
    EXPECT_EQ(r.ran_a[0].from, 0.0);
    EXPECT_EQ(r.ran_b[0].to, 1.0);
    EXPECT_LT(r.ran_a[0].to, r.ran_b[0].from);
    // frozen from the brute-force oracle sweep
    EXPECT_EQ(r.ran_a[0].to, 0.27);
    EXPECT_EQ(r.ran_b[0].from, 0.63);
}

TEST(Starvation, Containment) {
    const std::vector<GammaInterval> outer{{0.0, 0.3}, {0.5, 1.0}};
    EXPECT_TRUE(regions_contained(std::vector<GammaInterval>{{0.0, 0.2}, {0.6, 1.0}}, outer));
    EXPECT_TRUE(regions_contained(std::vector<GammaInterval>{}, outer));
    EXPECT_FALSE(regions_contained(std::vector<GammaInterval>{{0.2, 0.6}}, outer));
    EXPECT_FALSE(regions_contained(std::vector<GammaInterval>{{0.0, 0.4}}, outer));
}
