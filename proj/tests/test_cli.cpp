#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("lfwa_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    Result run(const std::string& args) const {
        const fs::path out = dir_ / "stdout.txt";
        const std::string cmd = "cd '" + dir_.string() + "' && '" LFWA_CLI_PATH "' " + args + " > '" +
                                out.string() + "' 2> '" + (dir_ / "stderr.txt").string() + "'";
        const int status = std::system(cmd.c_str());
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
    }

    static std::string slurp(const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    static std::size_t lines(const std::string& s) {
        std::size_t n = 0;
        for (char c : s) n += c == '\n';
        return n;
    }

    fs::path dir_;
};

TEST_F(Cli, ListFunctions) {
    const auto r = run("list-functions");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out), 10u);  // header + 9
    std::istringstream in(r.out);
    std::string line;
    bool f6_flagged = false, f7_optimum = false;
    while (std::getline(in, line)) {
        if (line.rfind("f6,", 0) == 0) f6_flagged = line.find("INCONSISTENT") != std::string::npos;
        if (line.rfind("f7,", 0) == 0) f7_optimum = line.find("-1.0316285") != std::string::npos;
    }
    EXPECT_TRUE(f6_flagged);
    EXPECT_TRUE(f7_optimum);
}

TEST_F(Cli, RunIsByteIdenticalAcrossReruns) {
    const std::string args = "run --algorithm lfwa --function f1 --runs 1 --iterations 10 --seed 42 --output out";
    ASSERT_EQ(run(args).code, 0);
    const auto summary = slurp(dir_ / "out.summary.csv");
    const auto curves = slurp(dir_ / "out.curves.csv");
    const auto prov = slurp(dir_ / "out.provenance.json");
    ASSERT_EQ(run(args).code, 0);
    EXPECT_EQ(summary, slurp(dir_ / "out.summary.csv"));
    EXPECT_EQ(curves, slurp(dir_ / "out.curves.csv"));
    EXPECT_EQ(prov, slurp(dir_ / "out.provenance.json"));
    EXPECT_EQ(lines(curves), 12u);  // header + 11 iterations
    EXPECT_EQ(summary.rfind("algorithm,function,runs,iterations,pop_size,", 0), 0u);
}

TEST_F(Cli, DefaultOutputNameIsContentDerived) {
    const std::string args = "run --algorithm spso --function f9 --runs 2 --iterations 5 --seed 1";
    ASSERT_EQ(run(args).code, 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir_)) files += e.path().filename().string().rfind("run_spso_f9", 0) == 0;
    EXPECT_EQ(files, 3u);
    ASSERT_EQ(run(args).code, 0);
    files = 0;
    for (const auto& e : fs::directory_iterator(dir_)) files += e.path().filename().string().rfind("run_spso_f9", 0) == 0;
    EXPECT_EQ(files, 3u);
}

TEST_F(Cli, UnknownFunctionIsUsageError) {
    EXPECT_EQ(run("run --function f99").code, 2);
    EXPECT_NE(slurp(dir_ / "stderr.txt").find("f1, f2"), std::string::npos);
    EXPECT_EQ(run("run --function f1 --algorithm ga").code, 2);
    EXPECT_EQ(run("run --function f1 --bogus").code, 2);
    EXPECT_EQ(run("compare --functions f3..f1").code, 2);
}

TEST_F(Cli, CompareGridHasOneRowPerPair) {
    const auto r = run("compare --functions f1..f9 --algorithms lfwa,fwa,spso,ba --runs 2 --iterations 5 --output grid");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(slurp(dir_ / "grid.summary.csv")), 37u);
    EXPECT_TRUE(fs::exists(dir_ / "grid.provenance.json"));
}

TEST_F(Cli, CurveLogTransformAndJsonSummary) {
    ASSERT_EQ(run("curve --function f3 --runs 2 --iterations 8 --transform log10 --per-run --output c").code, 0);
    const auto curves = slurp(dir_ / "c.curves.csv");
    EXPECT_EQ(curves.rfind("iteration,mean_best,run_0,run_1\n", 0), 0u);
    ASSERT_EQ(run("run --function f7 --runs 2 --iterations 5 --format json --output j").code, 0);
    EXPECT_EQ(slurp(dir_ / "j.summary.json").front(), '[');
}

}  // namespace
