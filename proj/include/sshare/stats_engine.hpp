#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "sshare/demand_model.hpp"

namespace sshare {

struct TraceStats {
    double mean = 0.0;
    double variance = 0.0;  // unbiased, 0 for a single sample
    std::int64_t maximum = 0;
};

struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;

    double midpoint() const { return 0.5 * (lower + upper); }
    double width() const { return upper - lower; }
    bool contains(const ConfidenceInterval& other) const {
        return lower <= other.lower && other.upper <= upper;
    }
};

struct DemandStatistics {
    ConfidenceInterval mean_ci;
    ConfidenceInterval variance_ci;  // lower bound clamped at 0
    ConfidenceInterval max_ci;
    std::size_t n_realizations = 0;
};

enum class StatisticMode { MeanBased, MaximaBased };
enum class CiBound { Lower, Upper };

struct StatisticSelector {
    StatisticMode mode = StatisticMode::MeanBased;
    CiBound bound = CiBound::Lower;

    bool operator==(const StatisticSelector&) const = default;
};

TraceStats trace_statistics(std::span<const std::int64_t> values);
TraceStats trace_statistics(const DemandTrace& trace);

/// Two-sided Student-t interval on the expectation of `sample`.
ConfidenceInterval t_interval(std::span<const double> sample, double level);

/// Per-trace mean, variance and maximum are each treated as an i.i.d.
/// sample of size n_realizations and summarised by a Student-t interval.
DemandStatistics ensemble_confidence_intervals(std::span<const DemandTrace> ensemble,
                                               double level);

double select_statistic(const DemandStatistics& stats, StatisticSelector selector);

}  // namespace sshare
