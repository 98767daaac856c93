#include "sshare/config_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "sshare/error.hpp"

namespace sshare {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
    T value{};
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_list(std::string_view text) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<std::string_view> items;
    if (text.empty()) {
        return items;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        items.push_back(trim(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return items;
}

struct Entry {
    std::string value;
    std::size_t line;
};

using Section = std::map<std::string, Entry, std::less<>>;

const std::map<std::string, std::set<std::string>, std::less<>>& known_keys() {
    static const std::map<std::string, std::set<std::string>, std::less<>> keys{
        {"scenario",
         {"name", "seed", "pool_sizes", "gamma_step", "n_realizations", "trace_length",
          "confidence_level", "modes"}},
        {"ran_a", {"mean_level", "ar", "ma", "innovation_stddev", "stationary_variance", "burn_in"}},
        {"ran_b", {"mean_level", "ar", "ma", "innovation_stddev", "stationary_variance", "burn_in"}},
    };
    return keys;
}

class Reader {
public:
    explicit Reader(const Section& section) : section_(section) {}

    template <typename T>
    std::optional<T> number(std::string_view key) const {
        const Entry* e = find(key);
        if (e == nullptr) {
            return std::nullopt;
        }
        auto value = parse_number<T>(trim(e->value));
        if (!value) {
            parse_error(e->line, "'" + std::string(key) + "' expects a number, got '" + e->value + "'");
        }
        return value;
    }

    template <typename T>
    std::optional<std::vector<T>> list(std::string_view key) const {
        const Entry* e = find(key);
        if (e == nullptr) {
            return std::nullopt;
        }
        std::vector<T> values;
        for (std::string_view item : split_list(e->value)) {
            auto value = parse_number<T>(item);
            if (!value) {
                parse_error(e->line, "'" + std::string(key) + "' has a malformed item '" +
                                         std::string(item) + "'");
            }
            values.push_back(*value);
        }
        return values;
    }

    const Entry* find(std::string_view key) const {
        const auto it = section_.find(key);
        return it == section_.end() ? nullptr : &it->second;
    }

private:
    const Section& section_;
};

ArmaParams read_network(const Section& section, ArmaParams defaults, double default_variance) {
    const Reader in(section);
    ArmaParams params = std::move(defaults);
    if (auto v = in.number<double>("mean_level")) params.mean_level = *v;
    if (auto v = in.list<double>("ar")) params.ar_coeffs = *v;
    if (auto v = in.list<double>("ma")) params.ma_coeffs = *v;
    if (auto v = in.number<std::size_t>("burn_in")) params.burn_in = *v;

    const auto stddev = in.number<double>("innovation_stddev");
    const auto variance = in.number<double>("stationary_variance");
    if (stddev && variance) {
        parse_error(in.find("stationary_variance")->line,
                    "innovation_stddev and stationary_variance are mutually exclusive");
    }
    try {
        if (stddev) {
            params.innovation_stddev = *stddev;
        } else {
            params.innovation_stddev = innovation_stddev_for_variance(
                params.ar_coeffs, params.ma_coeffs, variance.value_or(default_variance));
        }
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, std::string("invalid scenario config: ") + e.what());
    }
    return params;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
    }
}

std::string join_numbers(const auto& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        if constexpr (std::is_floating_point_v<std::decay_t<decltype(values[i])>>) {
            out += format_double(values[i]);
        } else {
            out += std::to_string(values[i]);
        }
    }
    return out;
}

std::string sweep_stem(const SweepResult& sweep) {
    return "sweep_N" + std::to_string(sweep.pool_size) + "_" + selector_name(sweep.selector);
}

nlohmann::json interval_json(const ConfidenceInterval& ci) {
    return {{"lower", ci.lower}, {"upper", ci.upper}, {"level", ci.level}};
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

std::string selector_name(StatisticSelector selector) {
    std::string name = selector.mode == StatisticMode::MeanBased ? "mean" : "maxima";
    name += selector.bound == CiBound::Lower ? "_lower" : "_upper";
    return name;
}

StatisticSelector parse_selector(std::string_view text) {
    for (StatisticMode mode : {StatisticMode::MeanBased, StatisticMode::MaximaBased}) {
        for (CiBound bound : {CiBound::Lower, CiBound::Upper}) {
            if (selector_name({mode, bound}) == text) {
                return {mode, bound};
            }
        }
    }
    throw Error(ErrorCode::ParseError, "unknown statistic mode '" + std::string(text) +
                                           "' (expected mean_lower, mean_upper, maxima_lower "
                                           "or maxima_upper)");
}

ScenarioConfig parse_config_text(std::string_view text) {
    std::map<std::string, Section, std::less<>> sections;
    std::string current;
    std::size_t line_no = 0;
    std::istringstream lines{std::string(text)};
    for (std::string raw; std::getline(lines, raw);) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';') {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                parse_error(line_no, "unterminated section header");
            }
            current = std::string(trim(line.substr(1, line.size() - 2)));
            if (!known_keys().contains(current)) {
                parse_error(line_no, "unknown section [" + current + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            parse_error(line_no, "expected 'key = value'");
        }
        if (current.empty()) {
            parse_error(line_no, "key outside of a section");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (!known_keys().at(current).contains(key)) {
            parse_error(line_no, "unknown key '" + key + "' in [" + current + "]");
        }
        auto [it, inserted] =
            sections[current].emplace(key, Entry{std::string(trim(line.substr(eq + 1))), line_no});
        if (!inserted) {
            parse_error(line_no, "duplicate key '" + key + "' in [" + current + "]");
        }
    }

    ScenarioConfig config;
    const Section empty;
    const auto section = [&](std::string_view name) -> const Section& {
        const auto it = sections.find(name);
        return it == sections.end() ? empty : it->second;
    };

    const Reader scenario(section("scenario"));
    if (const Entry* e = scenario.find("name")) config.name = e->value;
    if (auto v = scenario.number<std::uint64_t>("seed")) config.base_seed = *v;
    if (auto v = scenario.list<std::int64_t>("pool_sizes")) config.pool_sizes = *v;
    if (auto v = scenario.number<double>("gamma_step")) config.gamma_step = *v;
    if (auto v = scenario.number<std::size_t>("n_realizations")) config.n_realizations = *v;
    if (auto v = scenario.number<std::size_t>("trace_length")) config.trace_length = *v;
    if (auto v = scenario.number<double>("confidence_level")) config.confidence_level = *v;
    if (const Entry* e = scenario.find("modes")) {
        config.modes.clear();
        for (std::string_view item : split_list(e->value)) {
            try {
                config.modes.push_back(parse_selector(item));
            } catch (const Error& err) {
                parse_error(e->line, err.what());
            }
        }
    }

    config.ran_a = read_network(section("ran_a"), default_ran_a_params(), 20.46);
    config.ran_b = read_network(section("ran_b"), default_ran_b_params(), 29.74);
    config.validate();
    return config;
}

ScenarioConfig parse_config(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw Error(ErrorCode::FileNotFound, "config file not found: '" + path.string() + "'");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::FileNotFound, "cannot read config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_config_text(buffer.str());
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string format_config(const ScenarioConfig& config) {
    std::string modes;
    for (std::size_t i = 0; i < config.modes.size(); ++i) {
        if (i > 0) modes += ", ";
        modes += selector_name(config.modes[i]);
    }

    std::ostringstream out;
    out << "[scenario]\n"
        << "name = " << config.name << "\n"
        << "seed = " << config.base_seed << "\n"
        << "pool_sizes = " << join_numbers(config.pool_sizes) << "\n"
        << "gamma_step = " << format_double(config.gamma_step) << "\n"
        << "n_realizations = " << config.n_realizations << "\n"
        << "trace_length = " << config.trace_length << "\n"
        << "confidence_level = " << format_double(config.confidence_level) << "\n"
        << "modes = " << modes << "\n";
    for (const auto& [label, params] :
         {std::pair{"ran_a", &config.ran_a}, std::pair{"ran_b", &config.ran_b}}) {
        out << "\n[" << label << "]\n"
            << "mean_level = " << format_double(params->mean_level) << "\n"
            << "ar = " << join_numbers(params->ar_coeffs) << "\n"
            << "ma = " << join_numbers(params->ma_coeffs) << "\n"
            << "innovation_stddev = " << format_double(params->innovation_stddev) << "\n"
            << "burn_in = " << params->burn_in << "\n";
    }
    return out.str();
}

std::vector<fs::path> write_results(const ScenarioResult& result, const fs::path& dir,
                                    OutputFormat format) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error(ErrorCode::IoError, "cannot create output directory '" + dir.string() + "'");
    }

    const bool csv = format == OutputFormat::Csv;
    const std::string ext = csv ? ".csv" : ".json";
    std::vector<fs::path> written;

    for (const SweepResult& sweep : result.sweeps) {
        const fs::path path = dir / (sweep_stem(sweep) + ext);
        std::string body;
        if (csv) {
            body = "gamma,n_a,n_b,objective,surplus_a_det,surplus_a_emp,surplus_b_det,"
                   "surplus_b_emp,fairness\n";
            for (const SweepRow& r : sweep.rows) {
                body += format_double(r.gamma) + ',' + std::to_string(r.allocation.n_a) + ',' +
                        std::to_string(r.allocation.n_b) + ',' +
                        format_double(r.allocation.objective) + ',' +
                        format_double(r.surplus_a.deterministic) + ',' +
                        format_double(r.surplus_a.empirical_mean) + ',' +
                        format_double(r.surplus_b.deterministic) + ',' +
                        format_double(r.surplus_b.empirical_mean) + ',' +
                        format_double(r.fairness) + '\n';
            }
        } else {
            nlohmann::json rows = nlohmann::json::array();
            for (const SweepRow& r : sweep.rows) {
                rows.push_back({{"gamma", r.gamma},
                                {"n_a", r.allocation.n_a},
                                {"n_b", r.allocation.n_b},
                                {"objective", r.allocation.objective},
                                {"surplus_a_det", r.surplus_a.deterministic},
                                {"surplus_a_emp", r.surplus_a.empirical_mean},
                                {"surplus_b_det", r.surplus_b.deterministic},
                                {"surplus_b_emp", r.surplus_b.empirical_mean},
                                {"fairness", r.fairness}});
            }
            const nlohmann::json doc{{"pool_size", sweep.pool_size},
                                     {"selector", selector_name(sweep.selector)},
                                     {"x_a", sweep.x_a},
                                     {"x_b", sweep.x_b},
                                     {"rows", rows}};
            body = doc.dump(2) + "\n";
        }
        write_file(path, body);
        written.push_back(path);
    }

    const std::pair<NetworkId, const DemandStatistics*> networks[] = {
        {NetworkId::RanA, &result.stats_a}, {NetworkId::RanB, &result.stats_b}};
    {
        const fs::path path = dir / ("statistics" + ext);
        std::string body;
        if (csv) {
            body = "network,statistic,lower,upper,level,n_realizations\n";
            for (const auto& [id, stats] : networks) {
                for (const auto& [label, ci] : {std::pair{"mean", &stats->mean_ci},
                                                std::pair{"variance", &stats->variance_ci},
                                                std::pair{"maximum", &stats->max_ci}}) {
                    body += std::string(to_string(id)) + ',' + label + ',' +
                            format_double(ci->lower) + ',' + format_double(ci->upper) + ',' +
                            format_double(ci->level) + ',' +
                            std::to_string(stats->n_realizations) + '\n';
                }
            }
        } else {
            nlohmann::json doc = nlohmann::json::object();
            for (const auto& [id, stats] : networks) {
                doc[std::string(to_string(id))] = {{"mean", interval_json(stats->mean_ci)},
                                                   {"variance", interval_json(stats->variance_ci)},
                                                   {"maximum", interval_json(stats->max_ci)},
                                                   {"n_realizations", stats->n_realizations}};
            }
            body = doc.dump(2) + "\n";
        }
        write_file(path, body);
        written.push_back(path);
    }

    {
        const Provenance& p = result.provenance;
        const fs::path path = dir / (csv ? "provenance.conf" : "provenance.json");
        std::string body;
        if (csv) {
            // Comment lines keep the file loadable as a scenario config.
            body = "# tool_version = " + p.tool_version + "\n# seed = " +
                   std::to_string(p.base_seed) + "\n# timestamp = " + p.timestamp + "\n" +
                   format_config(result.config);
        } else {
            const nlohmann::json doc{{"tool_version", p.tool_version},
                                     {"seed", p.base_seed},
                                     {"timestamp", p.timestamp},
                                     {"config", format_config(result.config)}};
            body = doc.dump(2) + "\n";
        }
        write_file(path, body);
        written.push_back(path);
    }
    return written;
}

}  // namespace sshare
