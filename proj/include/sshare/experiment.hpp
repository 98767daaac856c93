#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sshare/demand_model.hpp"
#include "sshare/metrics.hpp"
#include "sshare/stats_engine.hpp"

namespace sshare {

/// Seed used by the default scenario.
inline constexpr std::uint64_t kDefaultBaseSeed = 20230601;

struct ScenarioConfig {
    std::string name = "coexistence";
    ArmaParams ran_a = default_ran_a_params();
    ArmaParams ran_b = default_ran_b_params();
    std::vector<std::int64_t> pool_sizes{20, 60, 100};
    double gamma_step = 0.01;
    std::size_t n_realizations = 1000;
    std::size_t trace_length = 1000;
    double confidence_level = 0.95;
    std::vector<StatisticSelector> modes{
        {StatisticMode::MeanBased, CiBound::Lower},
        {StatisticMode::MaximaBased, CiBound::Lower},
    };
    std::uint64_t base_seed = kDefaultBaseSeed;

    /// Throws Error(ValidationError) naming the violated invariant.
    void validate() const;

    bool operator==(const ScenarioConfig&) const = default;
};

struct Provenance {
    std::uint64_t base_seed = 0;
    std::string tool_version;
    std::string timestamp;  // ISO-8601 UTC
};

struct ScenarioResult {
    ScenarioConfig config;
    DemandStatistics stats_a;
    DemandStatistics stats_b;
    std::vector<SweepResult> sweeps;  // pool-major, then mode order
    Provenance provenance;
};

/// Seeds used inside a scenario, all derived from config.base_seed.
struct ScenarioSeeds {
    std::uint64_t ensemble_a;
    std::uint64_t ensemble_b;
    std::uint64_t holdout_a;
    std::uint64_t holdout_b;

    static ScenarioSeeds from_base(std::uint64_t base_seed) noexcept;
};

ScenarioResult run_scenario(const ScenarioConfig& config);

/// Default configuration: pools {20, 60, 100}, gamma step 0.01, 1000 x 1000
/// realizations, level 0.95, MeanBased/Lower and MaximaBased/Lower.
ScenarioResult reproduce_default_experiment();

std::string tool_version();

}  // namespace sshare
