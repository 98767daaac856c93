// Command-line front end. Talks to the library only through sshare.h.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 file not found,
// 4 config parse error, 5 config validation error, 6 i/o error,
// 7 numerical/domain error.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sshare/sshare.h"

namespace {

constexpr int kUsageExit = 2;

struct ConfigDeleter {
    void operator()(sshare_config* c) const { sshare_config_free(c); }
};
struct ResultDeleter {
    void operator()(sshare_result* r) const { sshare_result_free(r); }
};
using ConfigPtr = std::unique_ptr<sshare_config, ConfigDeleter>;
using ResultPtr = std::unique_ptr<sshare_result, ResultDeleter>;

int report(sshare_status status) {
    std::fprintf(stderr, "sshare-cli: %s: %s\n", sshare_status_name(status), sshare_last_error());
    return static_cast<int>(status);
}

std::string shortest(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

int write_result(const sshare_result* result, const std::string& dir, const std::string& format) {
    size_t n_files = 0;
    const sshare_format fmt = format == "json" ? SSHARE_FORMAT_JSON : SSHARE_FORMAT_CSV;
    if (const sshare_status s = sshare_result_write(result, dir.c_str(), fmt, &n_files); s != SSHARE_OK) {
        return report(s);
    }
    std::printf("wrote %zu files to %s\n", n_files, dir.c_str());
    return 0;
}

int run_config(sshare_config* config, std::optional<std::uint64_t> seed, const std::string& dir,
               const std::string& format) {
    if (seed) {
        sshare_config_set_seed(config, *seed);
    }
    sshare_result* raw = nullptr;
    if (const sshare_status s = sshare_run(config, &raw); s != SSHARE_OK) {
        return report(s);
    }
    const ResultPtr result(raw);
    return write_result(result.get(), dir, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-network resource pool partitioning experiments"};
    app.set_version_flag("--version", std::string(sshare_version()));
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;

    auto add_output_options = [&](CLI::App* cmd) {
        cmd->add_option("--output-dir,-o", output_dir, "Directory for result tables")->required();
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Override the scenario base seed");
    };

    CLI::App* run = app.add_subcommand("run", "Run the scenario described by a config file");
    run->add_option("--config,-c", config_path, "Scenario config file")->required();
    add_output_options(run);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "Run the default three-pool experiment");
    add_output_options(reproduce);

    CLI::App* validate = app.add_subcommand("validate-config", "Parse and validate a config file");
    validate->add_option("--config,-c", config_path, "Scenario config file")->required();

    std::int64_t pool = 0;
    double gamma = 0.5;
    double x_a = 0.0;
    double x_b = 0.0;
    CLI::App* single =
        app.add_subcommand("sweep-single", "Optimise one (pool, gamma, x_a, x_b) instance");
    single->add_option("--pool", pool, "Resource pool size")->required()->check(CLI::NonNegativeNumber);
    single->add_option("--gamma", gamma, "Weight of RAN_A in [0, 1]")->required();
    single->add_option("--x-a", x_a, "Demand statistic of RAN_A")->required();
    single->add_option("--x-b", x_b, "Demand statistic of RAN_B")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageExit;
    }

    if (*run || *validate) {
        sshare_config* raw = nullptr;
        if (const sshare_status s = sshare_config_load(config_path.c_str(), &raw); s != SSHARE_OK) {
            return report(s);
        }
        const ConfigPtr config(raw);
        if (*validate) {
            std::printf("%s: ok\n", config_path.c_str());
            return 0;
        }
        return run_config(config.get(), seed, output_dir, format);
    }

    if (*reproduce) {
        sshare_config* raw = nullptr;
        if (const sshare_status s = sshare_config_default(&raw); s != SSHARE_OK) {
            return report(s);
        }
        const ConfigPtr config(raw);
        return run_config(config.get(), seed, output_dir, format);
    }

    sshare_allocation allocation{};
    if (const sshare_status s = sshare_optimize(pool, gamma, x_a, x_b, &allocation); s != SSHARE_OK) {
        return report(s);
    }
    std::printf("%lld %lld %s\n", static_cast<long long>(allocation.n_a),
                static_cast<long long>(allocation.n_b), shortest(allocation.objective).c_str());
    return 0;
}
