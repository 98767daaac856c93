#include "sshare/metrics.hpp"

#include <algorithm>
#include <string>

#include "sshare/error.hpp"

namespace sshare {

double fractional_surplus(std::int64_t n, double x) {
    if (!(x > 0.0)) {
        throw Error(ErrorCode::NonPositiveStatistic,
                    "surplus needs a statistic > 0, got " + std::to_string(x));
    }
    return (static_cast<double>(n) - x) / x;
}

SurplusReport empirical_surplus(std::int64_t n, const DemandTrace& trace) {
    if (trace.values.empty()) {
        throw Error(ErrorCode::EmptyTrace, "trace is empty");
    }
    SurplusReport report;
    // Deviations are summed relative to the first term so a constant trace
    // reproduces fractional_surplus exactly.
    double first = 0.0;
    double deviation_sum = 0.0;
    std::size_t used = 0;
    for (std::int64_t demand : trace.values) {
        if (demand <= 0) {
            ++report.skipped_zero_demand;
            continue;
        }
        const auto d = static_cast<double>(demand);
        const double term = (static_cast<double>(n) - d) / d;
        if (used == 0) {
            first = term;
        } else {
            deviation_sum += term - first;
        }
        ++used;
    }
    if (used == 0) {
        throw Error(ErrorCode::AllSamplesZeroDemand, "every demand sample is zero");
    }
    report.empirical_mean = first + deviation_sum / static_cast<double>(used);
    return report;
}

double jain_fairness(std::int64_t n_a, std::int64_t n_b) {
    if (n_a < 0 || n_b < 0 || n_a + n_b == 0) {
        throw Error(ErrorCode::UndefinedFairness,
                    "fairness needs nonnegative allocations with a positive total");
    }
    const auto a = static_cast<double>(n_a);
    const auto b = static_cast<double>(n_b);
    return (a + b) * (a + b) / (2.0 * (a * a + b * b));
}

SweepResult sweep_gamma(std::int64_t pool_size, double x_a, double x_b,
                        std::span<const double> gamma_grid, StatisticSelector selector) {
    validate_gamma_grid(gamma_grid);
    SweepResult sweep;
    sweep.pool_size = pool_size;
    sweep.selector = selector;
    sweep.x_a = x_a;
    sweep.x_b = x_b;
    sweep.rows.reserve(gamma_grid.size());

    for (double gamma : gamma_grid) {
        const AllocationProblem problem{pool_size, gamma, x_a, x_b};
        SweepRow row;
        row.gamma = gamma;
        row.allocation = optimize_partition(problem);
        row.surplus_a.deterministic = fractional_surplus(row.allocation.n_a, x_a);
        row.surplus_b.deterministic = fractional_surplus(row.allocation.n_b, x_b);
        if (row.allocation.n_a + row.allocation.n_b > 0) {
            row.fairness = jain_fairness(row.allocation.n_a, row.allocation.n_b);
        }
        sweep.rows.push_back(row);
    }
    return sweep;
}

void attach_empirical_surplus(SweepResult& sweep, const DemandTrace& trace_a,
                              const DemandTrace& trace_b) {
    for (SweepRow& row : sweep.rows) {
        const SurplusReport a = empirical_surplus(row.allocation.n_a, trace_a);
        const SurplusReport b = empirical_surplus(row.allocation.n_b, trace_b);
        row.surplus_a.empirical_mean = a.empirical_mean;
        row.surplus_a.skipped_zero_demand = a.skipped_zero_demand;
        row.surplus_b.empirical_mean = b.empirical_mean;
        row.surplus_b.skipped_zero_demand = b.skipped_zero_demand;
    }
}

namespace {

template <typename Pred>
std::vector<GammaInterval> runs_where(const std::vector<SweepRow>& rows, Pred starved) {
    std::vector<GammaInterval> runs;
    bool open = false;
    for (const SweepRow& row : rows) {
        if (starved(row)) {
            if (open) {
                runs.back().to = row.gamma;
            } else {
                runs.push_back({row.gamma, row.gamma});
                open = true;
            }
        } else {
            open = false;
        }
    }
    return runs;
}

}  // namespace

StarvationReport starvation_regions(const SweepResult& sweep) {
    StarvationReport report;
    report.ran_a = runs_where(sweep.rows, [](const SweepRow& r) { return r.allocation.n_a == 0; });
    report.ran_b = runs_where(sweep.rows, [](const SweepRow& r) { return r.allocation.n_b == 0; });
    report.either = runs_where(sweep.rows, [](const SweepRow& r) {
        return r.allocation.n_a == 0 || r.allocation.n_b == 0;
    });
    return report;
}

bool regions_contained(std::span<const GammaInterval> inner,
                       std::span<const GammaInterval> outer) {
    // Maximal runs on a shared grid are separated by at least one uncovered
    // point, so a contiguous inner run is covered iff one outer run encloses it.
    return std::ranges::all_of(inner, [&](const GammaInterval& r) {
        return std::ranges::any_of(
            outer, [&](const GammaInterval& o) { return o.from <= r.from && r.to <= o.to; });
    });
}

}  // namespace sshare
