#include "sshare/stats_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "sshare/error.hpp"

namespace sshare {

namespace {

void check_level(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw Error(ErrorCode::InvalidLevel,
                    "confidence level must lie in (0, 1), got " + std::to_string(level));
    }
}

}  // namespace

TraceStats trace_statistics(std::span<const std::int64_t> values) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptyTrace, "trace is empty");
    }
    const auto n = static_cast<double>(values.size());

    double sum = 0.0;
    std::int64_t maximum = values.front();
    for (std::int64_t v : values) {
        sum += static_cast<double>(v);
        maximum = std::max(maximum, v);
    }
    const double mean = sum / n;

    double variance = 0.0;
    if (values.size() > 1) {
        // Two-pass with compensation term
        double squares = 0.0;
        double residual = 0.0;
        for (std::int64_t v : values) {
            const double d = static_cast<double>(v) - mean;
            squares += d * d;
            residual += d;
        }
        variance = (squares - residual * residual / n) / (n - 1.0);
        variance = std::max(variance, 0.0);
    }
    return {mean, variance, maximum};
}

TraceStats trace_statistics(const DemandTrace& trace) {
    return trace_statistics(std::span<const std::int64_t>(trace.values));
}

ConfidenceInterval t_interval(std::span<const double> sample, double level) {
    check_level(level);
    if (sample.size() < 2) {
        throw Error(ErrorCode::InsufficientRealizations,
                    "a confidence interval needs at least 2 observations");
    }
    const auto n = static_cast<double>(sample.size());
    double mean = 0.0;
    for (double v : sample) {
        mean += v;
    }
    mean /= n;
    double squares = 0.0;
    for (double v : sample) {
        squares += (v - mean) * (v - mean);
    }
    const double stddev = std::sqrt(squares / (n - 1.0));

    const boost::math::students_t dist(n - 1.0);
    const double t = boost::math::quantile(dist, 0.5 + 0.5 * level);
    const double half_width = t * stddev / std::sqrt(n);
    return {mean - half_width, mean + half_width, level};
}

DemandStatistics ensemble_confidence_intervals(std::span<const DemandTrace> ensemble,
                                               double level) {
    check_level(level);
    if (ensemble.size() < 2) {
        throw Error(ErrorCode::InsufficientRealizations,
                    "ensemble must contain at least 2 traces, got " +
                        std::to_string(ensemble.size()));
    }
    std::vector<double> means;
    std::vector<double> variances;
    std::vector<double> maxima;
    means.reserve(ensemble.size());
    variances.reserve(ensemble.size());
    maxima.reserve(ensemble.size());
    for (const DemandTrace& trace : ensemble) {
        const TraceStats s = trace_statistics(trace);
        means.push_back(s.mean);
        variances.push_back(s.variance);
        maxima.push_back(static_cast<double>(s.maximum));
    }

    DemandStatistics stats;
    stats.mean_ci = t_interval(means, level);
    stats.variance_ci = t_interval(variances, level);
    stats.variance_ci.lower = std::max(stats.variance_ci.lower, 0.0);
    stats.max_ci = t_interval(maxima, level);
    stats.n_realizations = ensemble.size();
    return stats;
}

double select_statistic(const DemandStatistics& stats, StatisticSelector selector) {
    const ConfidenceInterval& ci =
        selector.mode == StatisticMode::MeanBased ? stats.mean_ci : stats.max_ci;
    return selector.bound == CiBound::Lower ? ci.lower : ci.upper;
}

}  // namespace sshare
