#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitkit/cli.hpp"

using namespace orbitkit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "orbitkit");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

// data rows only: skip the header and trailing metadata
std::vector<std::string> data_rows(const std::string& text)
{
    std::vector<std::string> out;
    auto all = lines(text);
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].rfind("# ", 0) != 0) {
            out.push_back(all[i]);
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& row)
{
    std::vector<std::string> out;
    std::istringstream in(row);
    for (std::string cell; std::getline(in, cell, ',');) {
        out.push_back(cell);
    }
    return out;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("orbitkit_test_" + name);
}

} // namespace

TEST_CASE("table")
{
    auto r = run({"table", "--map", "f", "--max", "6"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).front() == "n,F_n,L_n,O_n");
    auto rows = data_rows(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows.back() == "6,7,0,0");
    CHECK(r.out.find("# map=f") != std::string::npos);
    CHECK(r.out.find("# entropy=log 2") != std::string::npos);

    auto g = run({"table", "--map", "g", "--max", "1"});
    CHECK(data_rows(g.out) == std::vector<std::string>{"1,1,1,1"});

    auto g2 = run({"table", "--map", "g2", "--max", "2"});
    CHECK(data_rows(g2.out) == std::vector<std::string>{"1,3,3,3", "2,15,12,6"});

    auto bad = run({"table", "--map", "f", "--max", "0"});
    CHECK(bad.code == kExitValidation);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"table", "--map", "f", "--max", "10001"}).code == kExitValidation);
    CHECK(run({"table", "--map", "h", "--max", "3"}).code == kExitValidation);
    CHECK(run({"table", "--map", "f"}).code == kExitValidation);
    CHECK(run({"bogus"}).code == kExitValidation);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("big integers are printed in full")
{
    auto r = run({"table", "--map", "g", "--max", "100"});
    auto last = split(data_rows(r.out).back());
    CHECK(last[1] == "1267650600228229401496703205375"); // 2^100 - 1
}

TEST_CASE("custom orbit file")
{
    auto path = temp_file("custom.txt");
    {
        std::ofstream out(path);
        out << "1\n3\n";
    }
    auto r = run({"table", "--map", "custom", "--custom-file", path.string(), "--max", "3"});
    REQUIRE(r.code == 0);
    CHECK(data_rows(r.out) == std::vector<std::string>{"1,1,1,1", "2,7,6,3", "3,1,0,0"});

    CHECK(run({"table", "--map", "custom", "--max", "3"}).code == kExitValidation);
    CHECK(run({"table", "--map", "custom", "--custom-file", "/nonexistent/orbits.txt", "--max", "3"}).code ==
          kExitValidation);
    {
        std::ofstream out(path);
        out << "1\nthree\n";
    }
    CHECK(run({"table", "--map", "custom", "--custom-file", path.string(), "--max", "3"}).code == kExitValidation);
    std::filesystem::remove(path);
}

TEST_CASE("pnt")
{
    auto r = run({"pnt", "--map", "f", "--max", "6", "--burn-in", "1"});
    REQUIRE(r.code == 0);
    CHECK(lines(r.out).front() == "X,pi,ratio,running_min,running_max");
    auto last = split(data_rows(r.out).back());
    CHECK(last[0] == "6");
    CHECK(last[1] == "10");
    CHECK(last[2] == "0.468750000000");
    CHECK(last[3] == "0.250000000000");

    auto g = run({"pnt", "--map", "g", "--max", "128"});
    REQUIRE(g.code == 0);
    auto rows = data_rows(g.out);
    CHECK(rows.size() == 65);
    CHECK(std::fabs(std::stod(split(rows.back())[2]) - 1.0) < 0.02);

    CHECK(run({"pnt", "--map", "f", "--max", "6", "--burn-in", "7"}).code == kExitValidation);
}

TEST_CASE("pnt over the full window")
{
    auto r = run({"pnt", "--map", "f", "--max", "2000"});
    REQUIRE(r.code == 0);
    auto last = split(data_rows(r.out).back());
    CHECK(std::stod(last[3]) >= 0.313);
    CHECK(std::stod(last[4]) <= 1.02);
    CHECK(r.out.find("# ratio_clusters=") != std::string::npos);
}

TEST_CASE("merten")
{
    auto f3 = run({"merten", "--map", "f", "--max", "3"});
    REQUIRE(f3.code == 0);
    CHECK(lines(f3.out).front() == "X,sum,sum_decimal,ln_X,normalized");
    CHECK(split(data_rows(f3.out).back())[1] == "3/4");
    auto g3 = run({"merten", "--map", "g", "--max", "3"});
    CHECK(split(data_rows(g3.out).back())[1] == "1/1");
    auto f1 = run({"merten", "--map", "f", "--max", "1"});
    auto row = data_rows(f1.out).front();
    CHECK(row == "1,1/2,0.500000000000,0.000000000000,");
    auto f20 = run({"merten", "--map", "f", "--max", "20", "--digits", "4"});
    CHECK(f20.out.find("# sum_minus_lnX=") != std::string::npos);
    CHECK(split(data_rows(f20.out).back())[3] == "2.9957");
}

TEST_CASE("zeta subcommands")
{
    auto c = run({"zeta", "coeffs", "--map", "f", "--degree", "5"});
    REQUIRE(c.code == 0);
    std::vector<std::string> got;
    for (const auto& row : data_rows(c.out)) {
        got.push_back(split(row)[1]);
    }
    CHECK(got == std::vector<std::string>{"1", "1", "1", "3", "4", "10"});

    auto x = run({"zeta", "xi1-check", "--degree", "500"});
    REQUIRE(x.code == 0);
    CHECK(data_rows(x.out) == std::vector<std::string>{"500,,PASS"});

    auto b = run({"zeta", "boundary", "--angle", "1/3", "--radii", "0.49,0.499,0.4999", "--terms", "10"});
    REQUIRE(b.code == 0);
    auto rows = data_rows(b.out);
    REQUIRE(rows.size() == 3);
    double prev = 2.0;
    for (const auto& row : rows) {
        double m = std::stod(split(row)[3]);
        CHECK(m < prev);
        prev = m;
    }
    CHECK(run({"zeta", "boundary", "--radii", "0.5"}).code == kExitValidation);
    CHECK(run({"zeta", "boundary", "--angle", "1/0", "--radii", "0.4"}).code == kExitValidation);
    CHECK(run({"zeta", "boundary", "--map", "g", "--radii", "0.4"}).code == kExitValidation);
    CHECK(run({"zeta"}).code == kExitValidation);
}

TEST_CASE("verify")
{
    auto ok = run({"verify", "--max", "500"});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.find("# result=PASS") != std::string::npos);

    auto tiny = run({"verify", "--max", "1"});
    CHECK(tiny.code == kExitOk);

    auto fault = run({"verify", "--max", "20", "--inject-fault"});
    CHECK(fault.code == kExitVerification);
    CHECK(fault.out.find("killed_orbits,\"n=2,6\",FAIL") != std::string::npos);
}

TEST_CASE("json output mirrors the csv columns")
{
    auto r = run({"table", "--map", "f", "--max", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["rows"].size() == 6);
    CHECK(doc["rows"][5]["n"] == 6);
    CHECK(doc["rows"][5]["F_n"] == "7");
    CHECK(doc["rows"][4]["O_n"] == "6");
    CHECK(doc["meta"]["map"] == "f");
    CHECK(doc["meta"]["precision_bits"] == "64");
}

TEST_CASE("output file and determinism")
{
    auto path = temp_file("out.csv");
    auto r = run({"merten", "--map", "f", "--max", "40", "--output", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream file;
    file << in.rdbuf();
    CHECK(file.str() == run({"merten", "--map", "f", "--max", "40"}).out);
    std::filesystem::remove(path);

    CHECK(run({"pnt", "--map", "f", "--max", "300"}).out == run({"pnt", "--map", "f", "--max", "300"}).out);
    CHECK(run({"table", "--map", "f", "--max", "3", "--output", "/nonexistent/dir/x.csv"}).code == kExitValidation);
}

TEST_CASE("precision environment variable")
{
    setenv("ORBITKIT_PRECISION_BITS", "200", 1);
    auto hi = run({"merten", "--map", "g", "--max", "2", "--digits", "40"});
    CHECK(split(data_rows(hi.out).back())[3] == "0.6931471805599453094172321214581765680755");
    CHECK(hi.out.find("# precision_bits=200") != std::string::npos);
    setenv("ORBITKIT_PRECISION_BITS", "12", 1);
    CHECK(run({"merten", "--map", "g", "--max", "2"}).code == kExitValidation);
    setenv("ORBITKIT_PRECISION_BITS", "abc", 1);
    CHECK(run({"merten", "--map", "g", "--max", "2"}).code == kExitValidation);
    unsetenv("ORBITKIT_PRECISION_BITS");
}
