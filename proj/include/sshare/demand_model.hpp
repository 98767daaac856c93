#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace sshare {

enum class NetworkId { RanA, RanB };

std::string_view to_string(NetworkId id);

/**
 * Parameters of a stationary ARMA(p, q) demand process
 *
 *   D_t = mean_level + y_t
 *   y_t = sum_i ar[i] * y_{t-1-i} + e_t + sum_j ma[j] * e_{t-1-j}
 *
 * with e_t ~ N(0, innovation_stddev^2). The recursion starts from a zero
 * state and the first `burn_in` samples are discarded.
 */
struct ArmaParams {
    double mean_level = 0.0;
    std::vector<double> ar_coeffs;
    std::vector<double> ma_coeffs;
    double innovation_stddev = 0.0;
    std::size_t burn_in = 200;

    /// Throws Error(InvalidArmaParams) on a non-stationary AR part,
    /// negative or non-finite moments.
    void validate() const;

    /// AR(phi) process whose stationary variance equals `variance`.
    static ArmaParams ar1(double mean_level, double phi, double variance,
                          std::size_t burn_in = 200);

    bool operator==(const ArmaParams&) const = default;
};

/// Default RAN_A process: AR(1), phi = 0.8, mean 30, stationary variance 20.46.
ArmaParams default_ran_a_params();
/// Default RAN_B process: AR(1), phi = 0.8, mean 50, stationary variance 29.74.
ArmaParams default_ran_b_params();

/// True when every root of 1 - sum_i ar[i] z^(i+1) lies strictly outside the
/// unit circle. Uses the step-down (reverse Levinson) recursion: the
/// polynomial is stable iff every reflection coefficient has |k| < 1.
bool is_stationary_ar(const std::vector<double>& ar_coeffs);

/// Sum of squared MA(infinity) weights, i.e. Var(y) / innovation variance.
/// Requires a stationary AR part.
double variance_gain(const std::vector<double>& ar_coeffs,
                     const std::vector<double>& ma_coeffs);

/// Innovation standard deviation giving the requested stationary variance.
double innovation_stddev_for_variance(const std::vector<double>& ar_coeffs,
                                      const std::vector<double>& ma_coeffs,
                                      double variance);

struct DemandTrace {
    std::vector<std::int64_t> values;
    std::uint64_t seed = 0;
    NetworkId network = NetworkId::RanA;

    bool operator==(const DemandTrace&) const = default;
};

/// splitmix64 finalizer applied to base + (k + 1) * 0x9E3779B97F4A7C15.
std::uint64_t derived_seed(std::uint64_t base, std::uint64_t k) noexcept;

/// Round half up, then clamp below at zero.
std::int64_t quantize_demand(double raw) noexcept;

DemandTrace generate_trace(const ArmaParams& params, std::size_t length,
                           std::uint64_t seed,
                           NetworkId network = NetworkId::RanA);

/// Trace k is generated with derived_seed(base_seed, k).
std::vector<DemandTrace> generate_ensemble(const ArmaParams& params,
                                           std::size_t length,
                                           std::size_t n_realizations,
                                           std::uint64_t base_seed,
                                           NetworkId network = NetworkId::RanA);

}  // namespace sshare
