#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "copent/rng.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args)
{
    const std::string cmd = std::string(COPENT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / "copent_cli_test";
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        copent::Rng rng(81);
        std::ofstream normal(path("normal.csv"));
        normal << "x,y,z\n";
        for (int i = 0; i < 300; ++i) {
            const double a = rng.normal();
            normal << a << ',' << 0.5 * a + rng.normal() << ',' << rng.normal() << '\n';
        }
        std::ofstream dup(path("dup.csv"));
        for (int i = 0; i < 20; ++i) dup << (i % 10) << ',' << (i % 10) * 2 << '\n';
        std::ofstream ragged(path("ragged.csv"));
        ragged << "1,2\n3\n";
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, EstimatePrintsOneValue)
{
    const auto r = run_cli("estimate --input " + path("normal.csv") + " --k 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(std::regex_match(r.out, std::regex("ce\t-?[0-9.e+-]+\n"))) << r.out;
}

TEST_F(CliTest, MvnTestPrintsMethodStatisticPValue)
{
    const auto r = run_cli("mvn-test --input " + path("normal.csv") + " --bootstrap 20 --seed 4");
    EXPECT_EQ(r.code, 0);
    const std::regex line("(ce|mardia\\.skewness|mardia\\.kurtosis|hz|dh|energy)\t[-0-9.e+]+\t[0-9.e+-]+");
    std::istringstream lines(r.out);
    std::string l;
    std::size_t count = 0;
    while (std::getline(lines, l)) {
        EXPECT_TRUE(std::regex_match(l, line)) << l;
        ++count;
    }
    EXPECT_EQ(count, 6u);
}

TEST_F(CliTest, MvnTestWithoutBootstrapLeavesCeUntested)
{
    const auto r = run_cli("mvn-test --input " + path("normal.csv") + " --method ce");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(std::regex_match(r.out, std::regex("ce\t[-0-9.e+]+\tNA\n"))) << r.out;
}

TEST_F(CliTest, InvalidInputExitsTwo)
{
    EXPECT_EQ(run_cli("estimate").code, 2);
    EXPECT_EQ(run_cli("estimate --input " + path("missing.csv")).code, 2);
    EXPECT_EQ(run_cli("estimate --input " + path("ragged.csv")).code, 2);
    EXPECT_EQ(run_cli("estimate --input " + path("normal.csv") + " --k 0").code, 2);
    EXPECT_EQ(run_cli("mvn-test --input " + path("normal.csv") + " --method royston").code, 2);
    EXPECT_EQ(run_cli("simulate --experiment exp3 --out " + path("sim")).code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
}

TEST_F(CliTest, NumericalFailureExitsThree)
{
    EXPECT_EQ(run_cli("estimate --input " + path("dup.csv")).code, 3);
    EXPECT_EQ(run_cli("mvn-test --input " + path("dup.csv") + " --method mardia").code, 3);
}

TEST_F(CliTest, JitterSeedResolvesTies)
{
    EXPECT_EQ(run_cli("estimate --input " + path("dup.csv") + " --jitter-seed 3").code, 0);
}

TEST_F(CliTest, ConfigFileWithFlagOverride)
{
    {
        std::ofstream cfg(path("est.cfg"));
        cfg << "# estimate settings\ninput = " << path("normal.csv") << "\nk = 5\n";
    }
    const auto from_file = run_cli("estimate --config " + path("est.cfg"));
    const auto explicit_k5 = run_cli("estimate --input " + path("normal.csv") + " --k 5");
    const auto overridden = run_cli("estimate --config " + path("est.cfg") + " --k 3");
    const auto explicit_k3 = run_cli("estimate --input " + path("normal.csv") + " --k 3");
    EXPECT_EQ(from_file.code, 0);
    EXPECT_EQ(from_file.out, explicit_k5.out);
    EXPECT_EQ(overridden.out, explicit_k3.out);
    EXPECT_NE(from_file.out, overridden.out);
}

TEST_F(CliTest, SimulateWritesCsvAndPlots)
{
    const auto r = run_cli("simulate --experiment exp1 --grid 1,2 --n 100 --runs 2 --methods ce,hz --out " +
                           path("sim"));
    EXPECT_EQ(r.code, 0);
    for (const char* f : {"exp1_detail.csv", "exp1_summary.csv", "exp1_ce.svg", "exp1_hz.svg"}) {
        EXPECT_TRUE(fs::exists(dir_ / "sim" / f)) << f;
    }
}
