#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <galois_diff/cli.hpp>

#include "generators.hpp"

using namespace galois_diff;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class ThreadsEnv {
public:
    explicit ThreadsEnv(const char* value) { ::setenv("GALOIS_DIFF_THREADS", value, 1); }
    ~ThreadsEnv() { ::unsetenv("GALOIS_DIFF_THREADS"); }
};

} // namespace

TEST(CliAnalyze, JsonReport)
{
    const Result r = run({"analyze", "-p", "5", "-m", "7", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["delta"], json::parse("[1,2,1,1]"));
    EXPECT_EQ(j["genus"], 12);
    EXPECT_EQ(report_from_json(j), verify_all(make_params(PrimeP(5), 7)));
}

TEST(CliAnalyze, HumanTable)
{
    const Result r = run({"analyze", "-p", "3", "-m", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("genus 1"), std::string::npos);
    EXPECT_NE(r.out.find("V_0^1"), std::string::npos);
}

TEST(CliAnalyze, UsageErrors)
{
    const Result div = run({"analyze", "-p", "5", "-m", "10"});
    EXPECT_EQ(div.code, 2);
    EXPECT_NE(div.err.find("ConductorDivisible"), std::string::npos);
    EXPECT_EQ(run({"analyze", "-p", "4", "-m", "7"}).code, 2);
    EXPECT_EQ(run({"analyze", "-p", "5", "-m", "0"}).code, 2);
    EXPECT_EQ(run({"analyze", "-p", "5"}).code, 2);
    EXPECT_EQ(run({"analyze", "-p", "five", "-m", "7"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliAnalyze, Help)
{
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(CliSweep, FullGrid)
{
    const Result r = run({"sweep", "--p-max", "13", "--q-max", "5"});
    EXPECT_EQ(r.code, 0);
    // (2 + 4 + 6 + 10 + 12) * 5 grid points
    EXPECT_EQ(r.out, "170 cases, 170 passed\n");
}

TEST(CliSweep, Bounds)
{
    EXPECT_EQ(run({"sweep", "--p-max", "3", "--q-max", "1"}).out, "2 cases, 2 passed\n");
    EXPECT_EQ(run({"sweep", "--p-max", "4"}).code, 2);
    EXPECT_EQ(run({"sweep", "--p-max", "2"}).code, 2);
    EXPECT_EQ(run({"sweep", "--q-max", "0"}).code, 2);
}

TEST(CliSweep, ThreadCountDoesNotChangeOutput)
{
    const Result one = run({"sweep", "--p-max", "7", "--q-max", "3", "--json"});
    ThreadsEnv env("3");
    const Result three = run({"sweep", "--p-max", "7", "--q-max", "3", "--json"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, three.out);
    const auto grid = cli::sweep_grid(13, 5);
    EXPECT_EQ(cli::run_sweep(grid, 4), cli::run_sweep(grid, 1));
}

TEST(CliSweep, BadThreadCount)
{
    ThreadsEnv env("zero");
    EXPECT_EQ(run({"sweep", "--p-max", "3"}).code, 2);
}

TEST(CliBoseck, Tables)
{
    const Result r = run({"boseck", "-p", "5", "-m", "7", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["char0"]["basis_size"], 12);
    EXPECT_EQ(j["charp"]["basis_size"], 12);
    EXPECT_EQ(j["blocks"]["dims"], json::parse("[1,2,1,1]"));
    EXPECT_EQ(run({"boseck", "-p", "5", "-m", "7", "--mult", "1,1"}).code, 0);
    EXPECT_EQ(run({"boseck", "-p", "5", "-m", "7", "--mult", "3"}).code, 2);
    EXPECT_EQ(run({"boseck", "-p", "5", "-m", "7"}).code, 0);
}

TEST(CliMatrices, Certificate)
{
    const Result r = run({"matrices", "-p", "5", "--a0", "1", "--a1", "2", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    for (const auto& [name, ok] : j["checks"].items()) EXPECT_TRUE(ok.get<bool>()) << name;
    EXPECT_EQ(rep_matrix_from_json(PrimeP(5), j["rep_matrix"]), rep_matrix(1, 2, PrimeP(5)));
    EXPECT_EQ(run({"matrices", "-p", "5", "--a1", "4"}).code, 2);
    EXPECT_EQ(run({"matrices", "-p", "7"}).code, 0);
}

TEST(CliFiber, Examples)
{
    const Result a = run({"fiber", "-p", "3", "-m", "2", "--a-coeffs", "0"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("X^3 - X"), std::string::npos);
    EXPECT_NE(a.out.find("confirmed"), std::string::npos);

    const Result b = run({"fiber", "-p", "5", "-m", "7", "--seed", "42", "--json"});
    EXPECT_EQ(b.code, 0) << b.err;
    const json j = json::parse(b.out);
    EXPECT_TRUE(j["smooth"].get<bool>());
    EXPECT_TRUE(j["reduction_ok"].get<bool>());
    EXPECT_EQ(j["lhs"], json::parse("[0,4,0,0,0,1]"));

    EXPECT_EQ(run({"fiber", "-p", "5", "-m", "7", "--a-coeffs", "1,1"}).code, 2);
}

TEST(CliFiber, CoefficientForms)
{
    EXPECT_EQ(run({"fiber", "-p", "5", "-m", "7", "--a-coeffs", "1:2:0:-1,0"}).code, 0);
    EXPECT_EQ(run({"fiber", "-p", "5", "-m", "7", "--a-coeffs", "1:2,0"}).code, 2);
    EXPECT_EQ(run({"fiber", "-p", "5", "-m", "7", "--a-coeffs", "x,0"}).code, 2);
    EXPECT_EQ(run({"fiber", "-p", "5", "-m", "7", "--a-coeffs", "1"}).code, 2);
    EXPECT_EQ(run({"fiber", "-p", "5", "-m", "7", "--seed", "1", "--a-coeffs", "1,0"}).code, 2);
    EXPECT_EQ(run({"fiber", "-p", "5", "-m", "7"}).code, 0);
}

TEST(CliFiber, SingularMemberFailsCheck)
{
    // x_1 = (7 - zeta)/3 = 2 - lambda/3, x_2 = (1 + 2 zeta)/3 = 1 + 2 lambda/3
    const Result r = run({"fiber", "-p", "3", "-m", "5", "--a-coeffs", "7:-1,1:2", "--denominator", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("smooth: no"), std::string::npos);
    EXPECT_EQ(run({"fiber", "-p", "3", "-m", "5", "--a-coeffs", "1,1", "--denominator", "0"}).code, 2);
}

TEST(CliFiber, SeedIsReproducible)
{
    const Result a = run({"fiber", "-p", "7", "-m", "12", "--seed", "9", "--json"});
    const Result b = run({"fiber", "-p", "7", "-m", "12", "--seed", "9", "--json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}
