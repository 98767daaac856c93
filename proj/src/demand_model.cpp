#include "sshare/demand_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sshare/error.hpp"

namespace sshare {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kDefaultPhi = 0.8;

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Box-Muller on a mt19937_64 stream. Both engine output and the
// uniform conversion are fully specified, unlike std::normal_distribution.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1], u2 in [0, 1)
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorCode::InvalidArmaParams, "invalid ARMA parameters: " + what);
}

}  // namespace

std::string_view to_string(NetworkId id) {
    return id == NetworkId::RanA ? "RAN_A" : "RAN_B";
}

bool is_stationary_ar(const std::vector<double>& ar_coeffs) {
    std::vector<double> phi = ar_coeffs;
    while (!phi.empty() && phi.back() == 0.0) {
        phi.pop_back();
    }
    for (double c : phi) {
        if (!std::isfinite(c)) {
            return false;
        }
    }
    while (!phi.empty()) {
        const std::size_t p = phi.size();
        const double k = phi[p - 1];
        if (std::abs(k) >= 1.0) {
            return false;
        }
        const double denom = 1.0 - k * k;
        std::vector<double> lower(p - 1);
        for (std::size_t i = 0; i + 1 < p; ++i) {
            lower[i] = (phi[i] + k * phi[p - 2 - i]) / denom;
        }
        phi = std::move(lower);
    }
    return true;
}

double variance_gain(const std::vector<double>& ar_coeffs,
                     const std::vector<double>& ma_coeffs) {
    if (!is_stationary_ar(ar_coeffs)) {
        invalid("AR polynomial has a root on or inside the unit circle");
    }
    const std::size_t p = ar_coeffs.size();
    const std::size_t q = ma_coeffs.size();
    constexpr std::size_t kMaxTerms = 1'000'000;

    std::vector<double> psi{1.0};
    double gain = 1.0;
    for (std::size_t j = 1; j < kMaxTerms; ++j) {
        double value = j <= q ? ma_coeffs[j - 1] : 0.0;
        for (std::size_t i = 1; i <= p && i <= j; ++i) {
            value += ar_coeffs[i - 1] * psi[j - i];
        }
        psi.push_back(value);
        gain += value * value;
        if (j > q && j >= p) {
            double tail = 0.0;
            for (std::size_t i = 0; i < std::max<std::size_t>(p, 1); ++i) {
                tail += std::abs(psi[j - i]);
            }
            if (tail < 1e-17) {
                break;
            }
        }
    }
    return gain;
}

double innovation_stddev_for_variance(const std::vector<double>& ar_coeffs,
                                      const std::vector<double>& ma_coeffs,
                                      double variance) {
    if (!(variance >= 0.0) || !std::isfinite(variance)) {
        invalid("target variance must be finite and >= 0");
    }
    return std::sqrt(variance / variance_gain(ar_coeffs, ma_coeffs));
}

void ArmaParams::validate() const {
    if (!std::isfinite(mean_level) || mean_level < 0.0) {
        invalid("mean_level must be finite and >= 0");
    }
    if (!std::isfinite(innovation_stddev) || innovation_stddev < 0.0) {
        invalid("innovation_stddev must be finite and >= 0");
    }
    for (double c : ma_coeffs) {
        if (!std::isfinite(c)) {
            invalid("MA coefficients must be finite");
        }
    }
    if (!is_stationary_ar(ar_coeffs)) {
        invalid("AR polynomial has a root on or inside the unit circle");
    }
}

ArmaParams ArmaParams::ar1(double mean_level, double phi, double variance,
                           std::size_t burn_in) {
    ArmaParams params;
    params.mean_level = mean_level;
    params.ar_coeffs = {phi};
    params.innovation_stddev = innovation_stddev_for_variance({phi}, {}, variance);
    params.burn_in = burn_in;
    params.validate();
    return params;
}

ArmaParams default_ran_a_params() { return ArmaParams::ar1(30.0, kDefaultPhi, 20.46); }

ArmaParams default_ran_b_params() { return ArmaParams::ar1(50.0, kDefaultPhi, 29.74); }

std::uint64_t derived_seed(std::uint64_t base, std::uint64_t k) noexcept {
    return splitmix64_mix(base + (k + 1) * kGoldenGamma);
}

std::int64_t quantize_demand(double raw) noexcept {
    const double rounded = std::floor(raw + 0.5);
    return rounded <= 0.0 ? 0 : static_cast<std::int64_t>(rounded);
}

DemandTrace generate_trace(const ArmaParams& params, std::size_t length,
                           std::uint64_t seed, NetworkId network) {
    params.validate();
    if (length == 0) {
        throw Error(ErrorCode::ZeroLength, "trace length must be >= 1");
    }

    const std::size_t p = params.ar_coeffs.size();
    const std::size_t q = params.ma_coeffs.size();
    const std::size_t steps = params.burn_in + length;

    GaussianStream noise(seed);
    // Newest value last; zero initial state.
    std::vector<double> past_y(p, 0.0);
    std::vector<double> past_e(q, 0.0);

    DemandTrace trace;
    trace.seed = seed;
    trace.network = network;
    trace.values.reserve(length);

    for (std::size_t t = 0; t < steps; ++t) {
        const double e = params.innovation_stddev * noise.next();
        double y = e;
        for (std::size_t i = 0; i < p; ++i) {
            y += params.ar_coeffs[i] * past_y[p - 1 - i];
        }
        for (std::size_t j = 0; j < q; ++j) {
            y += params.ma_coeffs[j] * past_e[q - 1 - j];
        }
        if (p > 0) {
            past_y.erase(past_y.begin());
            past_y.push_back(y);
        }
        if (q > 0) {
            past_e.erase(past_e.begin());
            past_e.push_back(e);
        }
        if (t >= params.burn_in) {
            trace.values.push_back(quantize_demand(params.mean_level + y));
        }
    }
    return trace;
}

std::vector<DemandTrace> generate_ensemble(const ArmaParams& params, std::size_t length,
                                           std::size_t n_realizations,
                                           std::uint64_t base_seed, NetworkId network) {
    if (n_realizations == 0) {
        throw Error(ErrorCode::InsufficientRealizations, "n_realizations must be >= 1");
    }
    std::vector<DemandTrace> ensemble;
    ensemble.reserve(n_realizations);
    for (std::size_t k = 0; k < n_realizations; ++k) {
        ensemble.push_back(generate_trace(params, length, derived_seed(base_seed, k), network));
    }
    return ensemble;
}

}  // namespace sshare
