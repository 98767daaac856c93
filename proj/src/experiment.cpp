#include "sshare/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <set>
#include <utility>

#include "sshare/allocator.hpp"
#include "sshare/error.hpp"

namespace sshare {

namespace {

[[noreturn]] void violated(const std::string& what) {
    throw Error(ErrorCode::ValidationError, "invalid scenario config: " + what);
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

}  // namespace

std::string tool_version() { return SSHARE_VERSION_STRING; }

void ScenarioConfig::validate() const {
    if (name.empty() || name.find_first_of("\r\n#") != std::string::npos ||
        name.front() == ' ' || name.back() == ' ' || name.front() == '\t' || name.back() == '\t') {
        violated("name must be non-empty without surrounding blanks, newlines or '#'");
    }
    for (const auto& [label, params] : {std::pair{"ran_a", &ran_a}, std::pair{"ran_b", &ran_b}}) {
        try {
            params->validate();
        } catch (const Error& e) {
            violated(std::string(label) + ": " + e.what());
        }
    }
    if (pool_sizes.empty()) {
        violated("pool_sizes must be non-empty");
    }
    if (std::set(pool_sizes.begin(), pool_sizes.end()).size() != pool_sizes.size()) {
        violated("pool_sizes must not repeat");
    }
    if (std::ranges::any_of(pool_sizes, [](std::int64_t n) { return n < 0; })) {
        violated("pool_sizes must be >= 0");
    }
    try {
        make_gamma_grid(gamma_step);
    } catch (const Error& e) {
        violated(std::string("gamma_step: ") + e.what());
    }
    if (n_realizations < 2) {
        violated("n_realizations must be >= 2 for a confidence interval");
    }
    if (trace_length < 1) {
        violated("trace_length must be >= 1");
    }
    if (!(confidence_level > 0.0 && confidence_level < 1.0)) {
        violated("confidence_level must lie in (0, 1)");
    }
    if (modes.empty()) {
        violated("modes must be non-empty");
    }
    for (std::size_t i = 0; i < modes.size(); ++i) {
        for (std::size_t j = i + 1; j < modes.size(); ++j) {
            if (modes[i] == modes[j]) {
                violated("modes must not repeat");
            }
        }
    }
}

ScenarioSeeds ScenarioSeeds::from_base(std::uint64_t base_seed) noexcept {
    return {derived_seed(base_seed, 0), derived_seed(base_seed, 1), derived_seed(base_seed, 2),
            derived_seed(base_seed, 3)};
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    config.validate();
    try {
        const ScenarioSeeds seeds = ScenarioSeeds::from_base(config.base_seed);

        ScenarioResult result;
        result.config = config;
        result.provenance = {config.base_seed, tool_version(), utc_timestamp()};

        {
            const auto ensemble_a = generate_ensemble(config.ran_a, config.trace_length,
                                                      config.n_realizations, seeds.ensemble_a,
                                                      NetworkId::RanA);
            result.stats_a = ensemble_confidence_intervals(ensemble_a, config.confidence_level);
        }
        {
            const auto ensemble_b = generate_ensemble(config.ran_b, config.trace_length,
                                                      config.n_realizations, seeds.ensemble_b,
                                                      NetworkId::RanB);
            result.stats_b = ensemble_confidence_intervals(ensemble_b, config.confidence_level);
        }

        const DemandTrace holdout_a =
            generate_trace(config.ran_a, config.trace_length, seeds.holdout_a, NetworkId::RanA);
        const DemandTrace holdout_b =
            generate_trace(config.ran_b, config.trace_length, seeds.holdout_b, NetworkId::RanB);

        const std::vector<double> grid = make_gamma_grid(config.gamma_step);
        for (std::int64_t pool : config.pool_sizes) {
            for (const StatisticSelector& selector : config.modes) {
                const double x_a = select_statistic(result.stats_a, selector);
                const double x_b = select_statistic(result.stats_b, selector);
                SweepResult sweep = sweep_gamma(pool, x_a, x_b, grid, selector);
                attach_empirical_surplus(sweep, holdout_a, holdout_b);
                result.sweeps.push_back(std::move(sweep));
            }
        }
        return result;
    } catch (const Error& e) {
        throw Error(e.code(), "scenario '" + config.name + "': " + e.what());
    }
}

ScenarioResult reproduce_default_experiment() { return run_scenario(ScenarioConfig{}); }

}  // namespace sshare
