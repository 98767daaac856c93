#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "sshare/allocator.hpp"
#include "sshare/demand_model.hpp"
#include "sshare/stats_engine.hpp"

namespace sshare {

inline constexpr double kNotComputed = std::numeric_limits<double>::quiet_NaN();

struct SurplusReport {
    double deterministic = kNotComputed;   // (n - x) / x at the driving statistic
    double empirical_mean = kNotComputed;  // mean of (n - D_t) / D_t over D_t >= 1
    std::size_t skipped_zero_demand = 0;
};

struct SweepRow {
    double gamma = 0.0;
    Allocation allocation;
    SurplusReport surplus_a;
    SurplusReport surplus_b;
    double fairness = kNotComputed;  // NaN only for the empty (0, 0) partition
};

struct SweepResult {
    std::int64_t pool_size = 0;
    StatisticSelector selector;
    double x_a = 0.0;
    double x_b = 0.0;
    std::vector<SweepRow> rows;
};

double fractional_surplus(std::int64_t n, double x);

/// `deterministic` is left unset; the caller fills it from its statistic.
SurplusReport empirical_surplus(std::int64_t n, const DemandTrace& trace);

/// (n_a + n_b)^2 / (2 (n_a^2 + n_b^2)); throws UndefinedFairness for (0, 0).
double jain_fairness(std::int64_t n_a, std::int64_t n_b);

/// Optimal allocation, deterministic surpluses and fairness per grid point.
SweepResult sweep_gamma(std::int64_t pool_size, double x_a, double x_b,
                        std::span<const double> gamma_grid,
                        StatisticSelector selector = {});

/// Fills the empirical surplus columns of every row from held-out traces.
void attach_empirical_surplus(SweepResult& sweep, const DemandTrace& trace_a,
                              const DemandTrace& trace_b);

struct GammaInterval {
    double from = 0.0;
    double to = 0.0;

    bool operator==(const GammaInterval&) const = default;
};

/// Maximal runs of consecutive grid points with a zero allocation.
/// `either` covers points where at least one network is starved.
struct StarvationReport {
    std::vector<GammaInterval> ran_a;
    std::vector<GammaInterval> ran_b;
    std::vector<GammaInterval> either;
};

StarvationReport starvation_regions(const SweepResult& sweep);

/// Grid-resolution containment: every grid point covered by `inner` is
/// covered by `outer`. Both interval lists must come from the same grid.
bool regions_contained(std::span<const GammaInterval> inner,
                       std::span<const GammaInterval> outer);

}  // namespace sshare
