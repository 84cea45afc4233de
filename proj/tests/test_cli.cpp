#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confh/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace confh;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr)
{
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    if (header) {
        *header = line;
    }
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) {
            row.push_back(std::stod(field));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("single-value commands")
{
    auto r = run_cli({"perturb", "--model", "moving-poly", "--lambda", "0", "--beta", "0"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out == "5\n");

    r = run_cli({"critical", "--model", "clamped-series"});
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(r.out) - 1.835246330) < 1e-8);

    r = run_cli({"critical", "--model", "moving-variational"});
    CHECK(r.code == 0);
    CHECK(std::abs(std::stod(r.out) - 2.262) < 5e-3);

    r = run_cli({"critical", "--model", "moving-poly", "--beta", "0"});
    CHECK(std::stod(r.out) == 2.8);

    r = run_cli({"clamped", "--lambda", "2"});
    CHECK(std::abs(std::stod(r.out) + 0.5) < 1e-10);

    r = run_cli({"perturb", "--model", "clamped-sinc", "--lambda", "1"});
    CHECK(std::abs(std::stod(r.out) - 2.497148808) < 1e-9);
}

TEST_CASE("variational command prints the optimum")
{
    const auto r = run_cli({"variational", "--lambda", "1"});
    REQUIRE(r.code == 0);
    std::string header;
    const auto rows = parse_csv(r.out, &header);
    CHECK(header == "lambda,alpha,epsilon,kinetic,coulomb");
    REQUIRE(rows.size() == 1);
    REQUIRE(rows[0].size() == 5);
    CHECK(rows[0][0] == 1.0);
    CHECK(rows[0][1] > 0.0);
    CHECK(rows[0][2] == doctest::Approx(rows[0][3] - rows[0][4]).epsilon(1e-12));
}

TEST_CASE("fig1 rows respect the expected ordering")
{
    const auto r = run_cli({"fig1", "--lambda-max", "5", "--step", "0.1"});
    REQUIRE(r.code == 0);
    std::string header;
    const auto rows = parse_csv(r.out, &header);
    CHECK(header == "lambda,eps_moving_sinc,eps_moving_poly,eps_clamped_poly,eps_clamped_sinc,eps_clamped_series");
    REQUIRE(rows.size() == 51);
    CHECK(rows.front()[0] == 0.0);
    CHECK(rows.back()[0] == doctest::Approx(5.0));
    for (const auto& row : rows) {
        REQUIRE(row.size() == 6);
        CHECK(row[1] > row[4]);
        CHECK(row[2] > row[3]);
        CHECK(row[3] >= row[5] - 1e-9);
        CHECK(row[4] >= row[5] - 1e-9);
    }
}

TEST_CASE("fig2 rows")
{
    const auto r = run_cli({"fig2", "--lambda-max", "2", "--step", "0.25"});
    REQUIRE(r.code == 0);
    std::string header;
    const auto rows = parse_csv(r.out, &header);
    CHECK(header == "lambda,eps_over_lambda2_poly,eps_over_lambda2_variational,free_atom_limit");
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
        CHECK(row[2] <= row[1] + 1e-9);
        CHECK(row[3] == doctest::Approx(-0.5 / (1.0 + 1.0 / 1836.15267343)).epsilon(1e-15));
    }
}

TEST_CASE("output is deterministic and can go to a file")
{
    const auto a = run_cli({"fig1", "--lambda-max", "1", "--step", "0.25"});
    const auto b = run_cli({"fig1", "--lambda-max", "1", "--step", "0.25"});
    CHECK(a.out == b.out);

    const auto path = std::filesystem::temp_directory_path() / "confh_fig1_test.csv";
    const auto c = run_cli({"fig1", "--lambda-max", "1", "--step", "0.25", "--output", path.string()});
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == a.out);
    std::filesystem::remove(path);
}

TEST_CASE("full precision in CSV output")
{
    const auto r = run_cli({"perturb", "--model", "moving-sinc", "--lambda", "1"});
    // 17 significant digits
    const auto digits = std::count_if(r.out.begin(), r.out.end(), [](char c) { return std::isdigit(c); });
    CHECK(digits >= 16);
}

TEST_CASE("errors map to exit codes")
{
    CHECK(run_cli({}).code == cli::kUsageError);
    CHECK(run_cli({"perturb", "--model", "nonsense", "--lambda", "1"}).code == cli::kUsageError);
    CHECK(run_cli({"perturb", "--model", "moving-poly"}).code == cli::kUsageError);
    CHECK(run_cli({"clamped", "--lambda", "-1"}).code == cli::kUsageError);
    CHECK(run_cli({"fig1", "--step", "0"}).code == cli::kUsageError);
    CHECK(run_cli({"critical", "--model", "moving-poly", "--beta", "-2"}).code == cli::kUsageError);

    const auto bad_out = run_cli({"critical", "--model", "clamped-poly", "--output", "/nonexistent/dir/x.csv"});
    CHECK(bad_out.code == cli::kUsageError);
    CHECK(bad_out.err.find("cannot open") != std::string::npos);

    // a single level cannot produce an error estimate
    const auto nc = run_cli({"perturb", "--model", "moving-sinc", "--lambda", "1", "--refinements", "0"});
    CHECK(nc.code == cli::kNonConvergence);
    CHECK_FALSE(nc.err.empty());

    const auto nc3 = run_cli({"variational", "--lambda", "1", "--order", "4", "--refinements", "1", "--rel-tol", "1e-14"});
    CHECK(nc3.code == cli::kNonConvergence);
}

TEST_CASE("help")
{
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("fig1") != std::string::npos);
}
