#include <doctest.h>

#include "osctail/cli.hpp"
#include "osctail/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace osctail;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Data rows of a CSV document, comment and header lines dropped.
std::vector<std::vector<double>> csv_rows(const std::string& text)
{
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            row.push_back(cell.empty() ? std::nan("") : std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

double two_figures(double v)
{
    const double scale = std::pow(10.0, std::floor(std::log10(std::abs(v))) - 1);
    return std::round(v / scale) * scale;
}

} // namespace

TEST_CASE("table 2 error column to two significant figures")
{
    const Outcome o = call({"table", "--id", "2"});
    REQUIRE(o.code == 0);
    const auto rows = csv_rows(o.out);
    REQUIRE(rows.size() == 5);
    const double printed[] = {1.0e-3, 1.1e-4, 1.9e-5, 1.9e-6, 3.4e-7};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(two_figures(rows[i][1]) == doctest::Approx(printed[i]).epsilon(1e-9));
    CHECK(o.out.find("x_or_alpha,eps_rel,trunc_rel,eps_abs,trunc_abs\n") != std::string::npos);
}

TEST_CASE("table 3 row at 20 pi")
{
    const Outcome o = call({"table", "--id", "3"});
    REQUIRE(o.code == 0);
    const auto rows = csv_rows(o.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0][0] == doctest::Approx(20 * std::numbers::pi).epsilon(1e-5));
    CHECK(rows[0][2] == doctest::Approx(0.0105).epsilon(0.05));
}

TEST_CASE("integrate subcommand")
{
    const Outcome zero = call({"integrate", "--kernel", "sin", "--fn", "zero", "--order", "2"});
    CHECK(zero.code == 0);
    CHECK(csv_rows(zero.out).at(0).at(0) == 0.0);

    const Outcome inv = call({"integrate", "--kernel", "sin", "--omega", "1", "--fn", "invsqrt",
                              "--min-length", "314.159", "--order", "0", "--format", "text"});
    REQUIRE(inv.code == 0);
    CHECK(inv.out.find("total") != std::string::npos);
    CHECK(inv.out.find("error_estimate") != std::string::npos);
    CHECK(inv.out.find("evaluations") != std::string::npos);

    // Printed values carry 6 significant digits.
    const Outcome csv = call({"integrate", "--fn", "invsqrt", "--min-length", "314.159"});
    CHECK(csv_rows(csv.out).at(0).at(0)
          == doctest::Approx(std::sqrt(std::numbers::pi / 2)).epsilon(5e-6));

    const Outcome shifted = call({"integrate", "--fn", "exp:0.5", "--kernel", "cos", "--a", "1",
                                  "--omega", "2", "--order", "3"});
    REQUIRE(shifted.code == 0);
    // Integral of e^(-x/2) cos(2x) over [1, inf).
    const double e = std::exp(-0.5);
    const double exact = e * (0.5 * std::cos(2.0) - 2 * std::sin(2.0)) / 4.25;
    CHECK(csv_rows(shifted.out).at(0).at(0) == doctest::Approx(exact).epsilon(5e-6));

    const Outcome warn = call({"integrate", "--fn", "cosoverx:0.6"});
    CHECK(warn.code == 0);
    CHECK(warn.err.find("warning") != std::string::npos);
}

TEST_CASE("output is byte identical across runs")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"table", "--id", "1"}, {"figure", "--id", "1"}, {"figure", "--id", "4"}}) {
        const Outcome a = call(args);
        const Outcome b = call(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("figures carry a provenance comment and a header")
{
    for (int id = 1; id <= 6; ++id) {
        const Outcome o = call({"figure", "--id", std::to_string(id)});
        REQUIRE(o.code == 0);
        CHECK(o.out.rfind("# figure " + std::to_string(id) + ":", 0) == 0);
        std::istringstream in(o.out);
        std::string line;
        while (std::getline(in, line) && line[0] == '#') {
        }
        CHECK(line.find(',') != std::string::npos);
        CHECK(std::isalpha(static_cast<unsigned char>(line[0])));
        CHECK_FALSE(csv_rows(o.out).empty());
    }
}

TEST_CASE("text format")
{
    const Outcome o = call({"table", "--id", "1", "--format", "text"});
    CHECK(o.code == 0);
    CHECK(o.out.find("x_or_alpha,") == std::string::npos);
    CHECK(o.out.find("trunc_abs") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(call({}).code == cli::UsageError);
    CHECK(call({"bogus"}).code == cli::UsageError);
    CHECK(call({"table", "--id", "4"}).code == cli::UsageError);
    CHECK(call({"figure"}).code == cli::UsageError);
    CHECK(call({"integrate", "--fn", "sinc"}).code == cli::UsageError);
    CHECK(call({"integrate", "--fn", "exp"}).code == cli::UsageError);
    CHECK(call({"integrate", "--fn", "exp:-1"}).code == cli::UsageError);
    CHECK(call({"integrate", "--fn", "exp:1", "--omega", "0"}).code == cli::UsageError);
    CHECK(call({"integrate", "--fn", "cosoverx:0.2", "--kernel", "cos"}).code == cli::UsageError);
    CHECK(call({"--help"}).code == cli::Success);

    const Outcome io = call({"table", "--id", "1", "--out", "/nonexistent-dir/t.csv"});
    CHECK(io.code == cli::IoFailure);
    CHECK_FALSE(io.err.empty());
}

TEST_CASE("--out writes the file")
{
    const std::string path = "osctail_cli_test_table.csv";
    const Outcome o = call({"table", "--id", "1", "--out", path});
    REQUIRE(o.code == 0);
    CHECK(o.out.empty());
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == call({"table", "--id", "1"}).out);
    std::remove(path.c_str());
}

TEST_CASE("function registry")
{
    CHECK(cli::parse_function("exp:0.25")(4.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(cli::parse_function("invsqrt")(4.0) == 0.5);
    CHECK(cli::parse_function("zero").analytic_order() >= 18);
    CHECK_THROWS_AS(cli::parse_function("cosoverx:abc"), DomainError);
    CHECK_THROWS_AS(cli::parse_function("invsqrt:2"), DomainError);
}
