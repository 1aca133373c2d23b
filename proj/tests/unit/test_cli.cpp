#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "common.hpp"
#include "mpv/io.hpp"

using namespace mpv;
using mpv::testing::e1;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("mpv_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())
                                           + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text)
    {
        auto path = (dir / name).string();
        std::ofstream(path) << text;
        return path;
    }

    static std::string read(const std::string& path)
    {
        std::ifstream in(path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    static Result run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    fs::path dir;
};

}  // namespace

TEST_F(Cli, SolveReportsYesWithWitness)
{
    auto path = write("e1.mpv", emit_instance(e1(Variant::revolutionary, 1, 2, 1)));
    auto r = run({"solve", path, "--witness"});
    EXPECT_EQ(r.code, cli::exit_yes);
    EXPECT_EQ(r.out.substr(0, 4), "YES\n");
    EXPECT_NE(r.out.find("stage 1: 1"), std::string::npos);
}

TEST_F(Cli, SolveReportsNo)
{
    auto path = write("e1.mpv", emit_instance(e1(Variant::conservative, 1, 0, 1)));
    for (const auto& algorithm : {"brute", "layered-k", "dp-tau", "auto"}) {
        auto r = run({"solve", path, "-a", algorithm});
        EXPECT_EQ(r.code, cli::exit_no) << algorithm;
        EXPECT_EQ(r.out, "NO\n");
    }
}

TEST_F(Cli, SolveBudgetAndErrors)
{
    auto path = write("e1.mpv", emit_instance(e1(Variant::revolutionary, 1, 2, 1)));
    EXPECT_EQ(run({"solve", path, "-a", "brute", "--budget", "1"}).code, cli::exit_budget);
    EXPECT_EQ(run({"solve", (dir / "missing.mpv").string()}).code, cli::exit_error);
    auto bad = write("bad.mpv", "mpv 1\nvariant C\nagents 1\ncandidates 1\nstages 1\nk 1\nell 0\n"
                                "x 1\nprofile 1: 2\n");
    auto r = run({"solve", bad});
    EXPECT_EQ(r.code, cli::exit_error);
    EXPECT_NE(r.err.find("line 9"), std::string::npos) << r.err;
}

TEST_F(Cli, VerifyValidAndInvalid)
{
    auto solution = write("sol.txt", "stage 1: 1\nstage 2: 2\nstage 3: 1\n");
    auto good = write("good.mpv", emit_instance(e1(Variant::conservative, 1, 2, 1)));
    auto bad = write("bad.mpv", emit_instance(e1(Variant::conservative, 1, 0, 1)));
    auto ok = run({"verify", good, solution});
    EXPECT_EQ(ok.code, 0);
    EXPECT_EQ(ok.out, "VALID\n");
    auto fail = run({"verify", bad, solution});
    EXPECT_EQ(fail.code, 1);
    EXPECT_EQ(fail.out.substr(0, 8), "INVALID\n");
    EXPECT_GT(fail.out.size(), 8u);
}

TEST_F(Cli, UsageErrors)
{
    EXPECT_EQ(run({"frobnicate"}).code, cli::exit_error);
    EXPECT_EQ(run({"solve", "--no-such-flag"}).code, cli::exit_error);
    EXPECT_EQ(run({}).code, cli::exit_error);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, GenerateIsDeterministic)
{
    std::vector<std::string> args{"generate", "--agents", "4", "--candidates", "5", "--stages", "3",
                                  "--seed", "7"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(parse_instance(a.out).agents(), 4u);
    args.back() = "8";
    EXPECT_NE(run(args).out, a.out);
}

TEST_F(Cli, KernelizeWritesInstanceAndMap)
{
    Instance wide(Variant::conservative, 2, 10, {{1, 2}, {3, 4}}, 2, 1, 1);
    auto input = write("wide.mpv", emit_instance(wide));
    auto output = (dir / "out.mpv").string();
    EXPECT_EQ(run({"kernelize", input, "-t", "ntau", "-o", output}).code, 0);
    EXPECT_EQ(parse_instance(read(output)).candidates(), 4u);
    EXPECT_EQ(read(output + ".idmap"), "idmap 1\nmap 1 1\nmap 2 2\nmap 3 3\nmap 4 4\n");

    auto weighted = run({"kernelize", input, "-t", "mtau"});
    EXPECT_EQ(weighted.code, 0);
    EXPECT_TRUE(is_weighted_text(weighted.out));
    auto weighted_path = write("w.mpv", weighted.out);
    EXPECT_EQ(run({"solve", weighted_path}).code, cli::exit_yes);
}

TEST_F(Cli, TransformChainsReductions)
{
    auto graph = write("edge.graph", "graph 2 1\n1 2\n");
    auto cmpv = run({"transform", "-r", "vc-cmpv", graph});
    ASSERT_EQ(cmpv.code, 0) << cmpv.err;
    auto cmpv_path = write("edge.mpv", cmpv.out);
    auto rmpv = run({"transform", "-r", "cmpv-rmpv", cmpv_path});
    ASSERT_EQ(rmpv.code, 0) << rmpv.err;
    EXPECT_EQ(parse_instance(rmpv.out).stages(), 3u);
    EXPECT_EQ(run({"solve", write("r.mpv", rmpv.out)}).code, cli::exit_yes);

    auto empty = write("empty.graph", "graph 4 0\n");
    EXPECT_EQ(run({"transform", "-r", "vc-cmpv", empty}).out, "YES\n");

    auto yes = write("yes.mpv", emit_instance(Instance(Variant::conservative, 2, 3,
                                                       {{1, 2}, {1, 3}}, 1, 1, 1)));
    auto composed = run({"transform", "-r", "and-cmpv", yes, yes});
    ASSERT_EQ(composed.code, 0) << composed.err;
    EXPECT_EQ(parse_instance(composed.out).stages(), 6u);
    EXPECT_EQ(run({"transform", "-r", "no-such", yes}).code, cli::exit_error);
}

TEST_F(Cli, BenchEmitsCsv)
{
    fs::create_directories(dir / "corpus");
    std::ofstream(dir / "corpus" / "a.mpv") << emit_instance(e1(Variant::revolutionary, 1, 2, 1));
    std::ofstream(dir / "corpus" / "b.mpv") << emit_instance(e1(Variant::conservative, 1, 0, 1));
    auto r = run({"bench", (dir / "corpus").string(), "--algorithms", "brute,inout-ell"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "instance,algorithm,answer,states,time_ms");
    std::vector<std::string> rows;
    while (std::getline(lines, line))
        rows.push_back(line.substr(0, line.find(',', line.find(',', line.find(',') + 1) + 1)));
    EXPECT_EQ(rows, (std::vector<std::string>{"a.mpv,brute,yes", "a.mpv,inout-ell,yes",
                                              "b.mpv,brute,no", "b.mpv,inout-ell,n/a"}));
}
