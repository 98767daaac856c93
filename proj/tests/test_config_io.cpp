#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sshare/config_io.hpp"
#include "sshare/error.hpp"

using namespace sshare;
namespace fs = std::filesystem;

namespace {

ErrorCode parse_code(const std::string& text) {
    try {
        parse_config_text(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted:\n" << text;
    return ErrorCode::IoError;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("sshare_test_" + name);
    fs::remove_all(dir);
    return dir;
}

ScenarioConfig small_config() {
    ScenarioConfig c;
    c.n_realizations = 20;
    c.trace_length = 100;
    c.gamma_step = 0.25;
    return c;
}

}  // namespace

TEST(ConfigParse, SeedOnlyGivesDefaults) {
    ScenarioConfig expected;
    expected.base_seed = 7;
    EXPECT_EQ(parse_config_text("[scenario]\nseed = 7\n"), expected);
}

TEST(ConfigParse, EmptyTextGivesDefaults) {
    EXPECT_EQ(parse_config_text(""), ScenarioConfig{});
    EXPECT_EQ(parse_config_text("# only comments\n; here\n\n"), ScenarioConfig{});
}

TEST(ConfigParse, FullFile) {
    const ScenarioConfig c = parse_config_text(R"(
# default pools
[scenario]
name = custom run
seed = 18446744073709551615
pool_sizes = [20, 60, 100]
gamma_step = 0.05
n_realizations = 300
trace_length = 400
confidence_level = 0.99
modes = mean_upper, maxima_lower

[ran_a]
mean_level = 25
ar = 0.3, 0.2
ma = 0.1
stationary_variance = 16
burn_in = 50

[ran_b]
mean_level = 40
ar =
innovation_stddev = 2.5
)");
    EXPECT_EQ(c.name, "custom run");
    EXPECT_EQ(c.base_seed, 18446744073709551615ULL);
    EXPECT_EQ(c.pool_sizes, (std::vector<std::int64_t>{20, 60, 100}));
    EXPECT_EQ(c.gamma_step, 0.05);
    EXPECT_EQ(c.n_realizations, 300u);
    EXPECT_EQ(c.trace_length, 400u);
    EXPECT_EQ(c.confidence_level, 0.99);
    ASSERT_EQ(c.modes.size(), 2u);
    EXPECT_EQ(c.modes[0], (StatisticSelector{StatisticMode::MeanBased, CiBound::Upper}));
    EXPECT_EQ(c.modes[1], (StatisticSelector{StatisticMode::MaximaBased, CiBound::Lower}));
    EXPECT_EQ(c.ran_a.ar_coeffs, (std::vector<double>{0.3, 0.2}));
    EXPECT_EQ(c.ran_a.ma_coeffs, (std::vector<double>{0.1}));
    EXPECT_NEAR(c.ran_a.innovation_stddev,
                innovation_stddev_for_variance({0.3, 0.2}, {0.1}, 16.0), 1e-15);
    EXPECT_EQ(c.ran_a.burn_in, 50u);
    EXPECT_TRUE(c.ran_b.ar_coeffs.empty());
    EXPECT_EQ(c.ran_b.innovation_stddev, 2.5);
    EXPECT_EQ(c.ran_b.burn_in, 200u);
}

TEST(ConfigParse, Errors) {
    EXPECT_EQ(parse_code("[scenario]\ngamma_step = 0\n"), ErrorCode::ValidationError);
    EXPECT_EQ(parse_code("[scenario]\nbogus = 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[nowhere]\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("seed = 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[scenario]\nseed\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[scenario]\nseed = 1\nseed = 2\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[scenario]\nseed = -4\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[scenario]\npool_sizes = 20, x\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[scenario]\nmodes = median_lower\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[scenario\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[ran_a]\nar = 1.5\n"), ErrorCode::ValidationError);
    EXPECT_EQ(parse_code("[ran_a]\ninnovation_stddev = 1\nstationary_variance = 4\n"),
              ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[ran_b]\nmean_level = -1\n"), ErrorCode::ValidationError);
}

TEST(ConfigParse, ParseErrorReportsLine) {
    try {
        parse_config_text("[scenario]\n\n# c\nunknown_key = 3\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}

TEST(ConfigParse, MissingFile) {
    try {
        parse_config("/definitely/not/here.conf");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FileNotFound);
    }
}

TEST(ConfigParse, RoundTrip) {
    ScenarioConfig c;
    c.name = "round trip";
    c.base_seed = 123456789012345ULL;
    c.pool_sizes = {0, 7, 99};
    c.gamma_step = 0.125;
    c.confidence_level = 0.9;
    c.ran_a = ArmaParams::ar1(12.3456789, 0.37, 8.1);
    c.ran_b.ma_coeffs = {0.25, -0.1};
    c.ran_b.innovation_stddev = 1.0 / 3.0;
    c.modes = {{StatisticMode::MaximaBased, CiBound::Upper}};
    EXPECT_EQ(parse_config_text(format_config(c)), c);
    EXPECT_EQ(parse_config_text(format_config(ScenarioConfig{})), ScenarioConfig{});
}

TEST(ConfigParse, DefaultPools) {
    const ScenarioConfig c = parse_config_text("[scenario]\npool_sizes = 20, 60, 100\n");
    EXPECT_EQ(c.pool_sizes, ScenarioConfig{}.pool_sizes);
}

TEST(Formatting, LocaleIndependentShortest) {
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(-1.0), "-1");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    EXPECT_EQ(selector_name({StatisticMode::MaximaBased, CiBound::Lower}), "maxima_lower");
    EXPECT_EQ(parse_selector("mean_upper"),
              (StatisticSelector{StatisticMode::MeanBased, CiBound::Upper}));
}

TEST(WriteResults, CsvLayout) {
    ScenarioConfig c = small_config();
    const ScenarioResult r = run_scenario(c);
    const fs::path dir = scratch("csv");
    const auto files = write_results(r, dir, OutputFormat::Csv);
    ASSERT_EQ(files.size(), 8u);
    EXPECT_EQ(files[0].filename(), "sweep_N20_mean_lower.csv");
    EXPECT_EQ(files[1].filename(), "sweep_N20_maxima_lower.csv");
    EXPECT_EQ(files[6].filename(), "statistics.csv");
    EXPECT_EQ(files[7].filename(), "provenance.conf");

    std::istringstream sweep(slurp(files[0]));
    std::string header;
    std::getline(sweep, header);
    EXPECT_EQ(header,
              "gamma,n_a,n_b,objective,surplus_a_det,surplus_a_emp,surplus_b_det,surplus_b_emp,"
              "fairness");
    int rows = 0;
    for (std::string line; std::getline(sweep, line);) ++rows;
    EXPECT_EQ(rows, 5);

    const std::string stats = slurp(files[6]);
    EXPECT_EQ(std::count(stats.begin(), stats.end(), '\n'), 7);
    EXPECT_NE(stats.find("RAN_B,maximum,"), std::string::npos);

    // provenance reloads as the same scenario
    EXPECT_EQ(parse_config(files[7]), c);
    fs::remove_all(dir);
}

TEST(WriteResults, ZeroVarianceRow) {
    ScenarioConfig c;
    c.ran_a = ArmaParams{};
    c.ran_a.mean_level = 30;
    c.ran_b = ArmaParams{};
    c.ran_b.mean_level = 50;
    c.pool_sizes = {20};
    c.modes = {{StatisticMode::MeanBased, CiBound::Lower}};
    c.n_realizations = 3;
    c.trace_length = 5;
    c.gamma_step = 0.5;
    const fs::path dir = scratch("row");
    const auto files = write_results(run_scenario(c), dir, OutputFormat::Csv);
    const std::string body = slurp(files[0]);
    EXPECT_NE(body.find("\n0.5,14,6,0.5294222222222222,-0.5333333333333333,-0.5333333333333333,"
                        "-0.88,-0.88,0.8620689655172413\n"),
              std::string::npos)
        << body;
    fs::remove_all(dir);
}

TEST(WriteResults, ByteIdenticalTables) {
    const ScenarioConfig c = small_config();
    const fs::path d1 = scratch("det1");
    const fs::path d2 = scratch("det2");
    const auto f1 = write_results(run_scenario(c), d1, OutputFormat::Csv);
    const auto f2 = write_results(run_scenario(c), d2, OutputFormat::Csv);
    ASSERT_EQ(f1.size(), f2.size());
    for (std::size_t i = 0; i + 1 < f1.size(); ++i) {
        EXPECT_EQ(slurp(f1[i]), slurp(f2[i])) << f1[i];
    }
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST(WriteResults, JsonLayout) {
    const fs::path dir = scratch("json");
    const auto files = write_results(run_scenario(small_config()), dir, OutputFormat::Json);
    ASSERT_EQ(files.size(), 8u);
    EXPECT_EQ(files[7].filename(), "provenance.json");
    const std::string sweep = slurp(files[0]);
    EXPECT_NE(sweep.find("\"surplus_b_emp\""), std::string::npos);
    EXPECT_NE(sweep.find("\"pool_size\": 20"), std::string::npos);
    fs::remove_all(dir);
}

TEST(WriteResults, UnwritableDirectory) {
    const fs::path file = scratch("blocker");
    std::ofstream(file) << "x";
    try {
        write_results(run_scenario(small_config()), file / "sub", OutputFormat::Csv);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IoError);
    }
    fs::remove(file);
}
