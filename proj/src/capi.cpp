#include "sshare/sshare.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "sshare/allocator.hpp"
#include "sshare/config_io.hpp"
#include "sshare/error.hpp"
#include "sshare/experiment.hpp"
#include "sshare/metrics.hpp"

struct sshare_config {
    sshare::ScenarioConfig value;
};

struct sshare_result {
    sshare::ScenarioResult value;
};

namespace {

thread_local std::string g_last_error;

sshare_status status_for(sshare::ErrorCode code) {
    using sshare::ErrorCode;
    switch (code) {
    case ErrorCode::FileNotFound: return SSHARE_ERR_FILE_NOT_FOUND;
    case ErrorCode::ParseError: return SSHARE_ERR_PARSE;
    case ErrorCode::ValidationError: return SSHARE_ERR_VALIDATION;
    case ErrorCode::IoError: return SSHARE_ERR_IO;
    case ErrorCode::InvalidArmaParams:
    case ErrorCode::ZeroLength:
    case ErrorCode::EmptyTrace:
    case ErrorCode::InsufficientRealizations:
    case ErrorCode::InvalidLevel:
    case ErrorCode::NonPositiveStatistic:
    case ErrorCode::InvalidProblem:
    case ErrorCode::InvalidGrid:
    case ErrorCode::AllSamplesZeroDemand:
    case ErrorCode::UndefinedFairness: return SSHARE_ERR_DOMAIN;
    }
    return SSHARE_ERR_INTERNAL;
}

sshare_status fail(sshare_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs `body` and converts any exception into a status code.
template <typename Body>
sshare_status guarded(Body&& body) noexcept {
    try {
        body();
        return SSHARE_OK;
    } catch (const sshare::Error& e) {
        return fail(status_for(e.code()),
                    std::string(sshare::to_string(e.code())) + ": " + e.what());
    } catch (const std::bad_alloc&) {
        return fail(SSHARE_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SSHARE_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SSHARE_ERR_INTERNAL, "unknown error");
    }
}

sshare_status null_argument(const char* name) {
    return fail(SSHARE_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

sshare_interval to_c(const sshare::ConfidenceInterval& ci) {
    return {ci.lower, ci.upper, ci.level};
}

}  // namespace

extern "C" {

const char* sshare_version(void) { return SSHARE_VERSION_STRING; }

const char* sshare_last_error(void) { return g_last_error.c_str(); }

const char* sshare_status_name(sshare_status status) {
    switch (status) {
    case SSHARE_OK: return "ok";
    case SSHARE_ERR_INTERNAL: return "internal error";
    case SSHARE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SSHARE_ERR_FILE_NOT_FOUND: return "file not found";
    case SSHARE_ERR_PARSE: return "parse error";
    case SSHARE_ERR_VALIDATION: return "validation error";
    case SSHARE_ERR_IO: return "i/o error";
    case SSHARE_ERR_DOMAIN: return "domain error";
    }
    return "unknown status";
}

sshare_status sshare_config_default(sshare_config** out) {
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = new sshare_config{}; });
}

sshare_status sshare_config_load(const char* path, sshare_config** out) {
    if (path == nullptr) return null_argument("path");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = new sshare_config{sshare::parse_config(path)}; });
}

sshare_status sshare_config_parse(const char* text, sshare_config** out) {
    if (text == nullptr) return null_argument("text");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = new sshare_config{sshare::parse_config_text(text)}; });
}

sshare_status sshare_config_set_seed(sshare_config* config, uint64_t seed) {
    if (config == nullptr) return null_argument("config");
    config->value.base_seed = seed;
    return SSHARE_OK;
}

sshare_status sshare_config_get_seed(const sshare_config* config, uint64_t* out) {
    if (config == nullptr) return null_argument("config");
    if (out == nullptr) return null_argument("out");
    *out = config->value.base_seed;
    return SSHARE_OK;
}

sshare_status sshare_config_format(const sshare_config* config, char** out) {
    if (config == nullptr) return null_argument("config");
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        const std::string text = sshare::format_config(config->value);
        char* buffer = static_cast<char*>(std::malloc(text.size() + 1));
        if (buffer == nullptr) throw std::bad_alloc();
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
    });
}

void sshare_config_free(sshare_config* config) { delete config; }

void sshare_string_free(char* text) { std::free(text); }

sshare_status sshare_run(const sshare_config* config, sshare_result** out) {
    if (config == nullptr) return null_argument("config");
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = new sshare_result{sshare::run_scenario(config->value)}; });
}

sshare_status sshare_reproduce(sshare_result** out) {
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = new sshare_result{sshare::reproduce_default_experiment()}; });
}

void sshare_result_free(sshare_result* result) { delete result; }

sshare_status sshare_result_statistics(const sshare_result* result, sshare_network network,
                                       sshare_demand_statistics* out) {
    if (result == nullptr) return null_argument("result");
    if (out == nullptr) return null_argument("out");
    if (network != SSHARE_RAN_A && network != SSHARE_RAN_B) {
        return fail(SSHARE_ERR_INVALID_ARGUMENT, "unknown network id");
    }
    const sshare::DemandStatistics& s =
        network == SSHARE_RAN_A ? result->value.stats_a : result->value.stats_b;
    *out = {to_c(s.mean_ci), to_c(s.variance_ci), to_c(s.max_ci), s.n_realizations};
    return SSHARE_OK;
}

size_t sshare_result_sweep_count(const sshare_result* result) {
    return result == nullptr ? 0 : result->value.sweeps.size();
}

sshare_status sshare_result_sweep_info(const sshare_result* result, size_t sweep,
                                       sshare_sweep_info* out) {
    if (result == nullptr) return null_argument("result");
    if (out == nullptr) return null_argument("out");
    if (sweep >= result->value.sweeps.size()) {
        return fail(SSHARE_ERR_INVALID_ARGUMENT, "sweep index out of range");
    }
    const sshare::SweepResult& s = result->value.sweeps[sweep];
    out->pool_size = s.pool_size;
    out->mode = s.selector.mode == sshare::StatisticMode::MeanBased ? SSHARE_MODE_MEAN
                                                                    : SSHARE_MODE_MAXIMA;
    out->bound = s.selector.bound == sshare::CiBound::Lower ? SSHARE_BOUND_LOWER
                                                            : SSHARE_BOUND_UPPER;
    out->x_a = s.x_a;
    out->x_b = s.x_b;
    out->n_rows = s.rows.size();
    return SSHARE_OK;
}

sshare_status sshare_result_sweep_row(const sshare_result* result, size_t sweep, size_t row,
                                      sshare_sweep_row* out) {
    if (result == nullptr) return null_argument("result");
    if (out == nullptr) return null_argument("out");
    if (sweep >= result->value.sweeps.size() || row >= result->value.sweeps[sweep].rows.size()) {
        return fail(SSHARE_ERR_INVALID_ARGUMENT, "sweep or row index out of range");
    }
    const sshare::SweepRow& r = result->value.sweeps[sweep].rows[row];
    *out = {r.gamma,
            r.allocation.n_a,
            r.allocation.n_b,
            r.allocation.objective,
            r.surplus_a.deterministic,
            r.surplus_a.empirical_mean,
            r.surplus_b.deterministic,
            r.surplus_b.empirical_mean,
            r.fairness};
    return SSHARE_OK;
}

sshare_status sshare_result_write(const sshare_result* result, const char* dir,
                                  sshare_format format, size_t* n_files) {
    if (result == nullptr) return null_argument("result");
    if (dir == nullptr) return null_argument("dir");
    if (format != SSHARE_FORMAT_CSV && format != SSHARE_FORMAT_JSON) {
        return fail(SSHARE_ERR_INVALID_ARGUMENT, "unknown output format");
    }
    return guarded([&] {
        const auto files = sshare::write_results(
            result->value, dir,
            format == SSHARE_FORMAT_CSV ? sshare::OutputFormat::Csv : sshare::OutputFormat::Json);
        if (n_files != nullptr) *n_files = files.size();
    });
}

sshare_status sshare_evaluate_objective(double n_a, double n_b, double gamma, double x_a,
                                        double x_b, double* out) {
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        const sshare::AllocationProblem problem{0, gamma, x_a, x_b};
        *out = sshare::evaluate_objective(n_a, n_b, problem);
    });
}

sshare_status sshare_optimize(int64_t pool_size, double gamma, double x_a, double x_b,
                              sshare_allocation* out) {
    if (out == nullptr) return null_argument("out");
    return guarded([&] {
        const sshare::Allocation a = sshare::optimize_partition({pool_size, gamma, x_a, x_b});
        *out = {a.n_a, a.n_b, a.objective};
    });
}

sshare_status sshare_jain_fairness(int64_t n_a, int64_t n_b, double* out) {
    if (out == nullptr) return null_argument("out");
    return guarded([&] { *out = sshare::jain_fairness(n_a, n_b); });
}

}  // extern "C"
