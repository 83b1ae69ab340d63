#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "thermo/cli.hpp"

using namespace thermo;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "thermo");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        v.push_back(l);
    return v;
}

std::vector<std::string> fields(const std::string& line)
{
    std::vector<std::string> v;
    std::string f;
    std::istringstream is(line);
    while (std::getline(is, f, ','))
        v.push_back(f);
    if (!line.empty() && line.back() == ',')
        v.push_back("");
    return v;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("thermo_cli_test_" + name);
}

} // namespace

TEST(Range, Parsing)
{
    auto r = cli::parse_range("0.5");
    EXPECT_EQ(r.values(), std::vector<double>{0.5});
    r = cli::parse_range("0:1:5");
    ASSERT_EQ(r.values().size(), 5u);
    EXPECT_DOUBLE_EQ(r.values()[1], 0.25);
    EXPECT_EQ(r.values().back(), 1.0);
    r = cli::parse_range("0.01:100:5:log");
    EXPECT_NEAR(r.values()[2], 1.0, 1e-14);
    EXPECT_THROW(cli::parse_range("1:0:3"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("0:1:3:log"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("0:1"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("a"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("0:1:2.5"), cli::UsageError);
    EXPECT_THROW(cli::parse_range("0:1:1"), cli::UsageError);
}

TEST(Format, FixedScientificAndNan)
{
    EXPECT_EQ(cli::format_number(1.5), "1.500000000000e+00");
    EXPECT_EQ(cli::format_number(std::nan("")), "nan");
    EXPECT_EQ(cli::format_number(-0.001), "-1.000000000000e-03");
}

TEST(Cli, SheetHeaderAndRows)
{
    const auto r = run({"sheet", "--tmin", "0.1", "--tmax", "1", "--tpts", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "Omega0,omega0,T,F_TE,S_TE,F_TM,S_TM,F_sf,S_sf,F_subtr,S_subtr,F_raw,S_raw,max_err,status,scale");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const auto f = fields(ls[i]);
        ASSERT_EQ(f.size(), 16u);
        EXPECT_EQ(f[14], "ok");
        EXPECT_GE(std::stod(f[10]), 0.0); // entropy positive without resonance
    }
}

TEST(Cli, SlabHeaderAndUnselectedPartsEmpty)
{
    const auto r = run({"slab", "--parts", "exp", "--tmin", "1", "--tmax", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 2u);
    const auto h = fields(ls[0]);
    const auto f = fields(ls[1]);
    ASSERT_EQ(h.size(), 21u);
    ASSERT_EQ(f.size(), 21u);
    EXPECT_EQ(h[18], "plasmon_excluded");
    EXPECT_EQ(f[3], "");
    EXPECT_EQ(f[10], "");
    EXPECT_NE(f[11], "");
    EXPECT_EQ(f[11], f[13]); // total equals the only selected part
    EXPECT_EQ(f[18], "1");
}

TEST(Cli, ExpEntropyDoublesWithThickness)
{
    const auto a = fields(lines(run({"slab", "--parts", "exp", "--tmin", "2", "--tmax", "2"}).out)[1]);
    const auto b = fields(lines(run({"slab", "--parts", "exp", "--L", "2", "--tmin", "2", "--tmax", "2"}).out)[1]);
    EXPECT_NEAR(std::stod(b[12]) / std::stod(a[12]), 2.0, 1e-9);
}

TEST(Cli, JobsDoNotChangeOutput)
{
    const std::vector<std::string> base{"sheet", "--omega0", "0:1.2:4", "--tpts", "3"};
    auto one = base, many = base;
    one.insert(one.end(), {"--jobs", "1"});
    many.insert(many.end(), {"--jobs", "7"});
    const auto a = run(one), b = run(many);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, run(one).out);
}

TEST(Cli, ScaleOnlyRelabels)
{
    const auto a = lines(run({"sheet", "--tmin", "1", "--tmax", "1"}).out);
    const auto b = lines(run({"sheet", "--tmin", "1", "--tmax", "1", "--scale", "3.5"}).out);
    ASSERT_EQ(a.size(), 2u);
    auto fa = fields(a[1]), fb = fields(b[1]);
    EXPECT_EQ(fb.back(), "3.500000000000e+00");
    fa.pop_back();
    fb.pop_back();
    EXPECT_EQ(fa, fb);
}

TEST(Cli, FailedRowsAreNan)
{
    // one subdivision cannot reach the tolerance
    const auto r = run({"sheet", "--tmin", "1", "--tmax", "1", "--rel-tol", "1e-14", "--abs-tol", "1e-300", "--max-subdiv",
                        "1"});
    ASSERT_EQ(r.code, 0);
    const auto f = fields(lines(r.out)[1]);
    EXPECT_EQ(f[14], "error");
    EXPECT_EQ(f[3], "nan");
    EXPECT_EQ(f[9], "nan");
    EXPECT_EQ(f[13], "nan");
    EXPECT_EQ(f[0], "1.000000000000e+00");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"sheet", "--tmin", "1", "--tmax", "0.5"}).code, cli::exit_usage);
    EXPECT_EQ(run({"sheet", "--tmin", "0"}).code, cli::exit_usage);
    EXPECT_EQ(run({"sheet", "--parts", "TE,nope"}).code, cli::exit_usage);
    EXPECT_EQ(run({"sheet", "--omega0", "-1"}).code, cli::exit_usage);
    EXPECT_EQ(run({"slab", "--L", "0"}).code, cli::exit_usage);
    EXPECT_EQ(run({"slab", "--omegap", "1:2"}).code, cli::exit_usage);
    EXPECT_EQ(run({"sheet", "--jobs", "0"}).code, cli::exit_usage);
    EXPECT_EQ(run({"sheet", "--bogus"}).code, cli::exit_usage);
    EXPECT_EQ(run({}).code, cli::exit_usage);
    EXPECT_EQ(run({"verify"}).code, cli::exit_usage);
    const auto u = run({"verify", "no-such-suite"});
    EXPECT_EQ(u.code, cli::exit_usage);
    EXPECT_NE(u.err.find("unknown suite"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, OutputFileAndConfig)
{
    const auto cfg = temp_file("cfg.toml");
    const auto out = temp_file("out.csv");
    {
        std::ofstream f(cfg);
        f << "[sheet]\nomega0 = \"0.5\"\ntmin = 0.1\ntmax = 10\ntpts = 1\n";
    }
    const auto r = run({"--config", cfg.string(), "sheet", "--tmax", "1", "--out", out.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    const auto ls = lines(ss.str());
    ASSERT_EQ(ls.size(), 3u); // flag tmax overrides the file
    EXPECT_EQ(fields(ls[1])[1], "5.000000000000e-01");
    std::filesystem::remove(cfg);
    std::filesystem::remove(out);
    EXPECT_EQ(run({"sheet", "--out", "/nonexistent/dir/x.csv", "--tmin", "1", "--tmax", "1"}).code, cli::exit_failure);
}

TEST(Cli, ScanReportsWindow)
{
    const auto r = run({"scan", "--omega0", "0.6:0.95:8", "--tmax", "10", "--tpts", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 9u);
    EXPECT_EQ(ls[0], "Omega0,omega0,c,min_S,T_at_min,max_err,status,scale");
    EXPECT_NE(r.err.find("c < 0 for omega0 in [0.75, 0.95]"), std::string::npos) << r.err;
    const auto single = run({"scan", "--omega0", "0", "--tmax", "10", "--tpts", "2"});
    EXPECT_EQ(lines(single.out).size(), 2u);
    EXPECT_NE(single.err.find("no negative"), std::string::npos);
}

TEST(Cli, SlabDispersionFile)
{
    const auto disp = temp_file("disp.csv");
    const auto r = run({"slab", "--parts", "exp", "--tmin", "1", "--tmax", "1", "--dispersion", disp.string(), "--kpts",
                        "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream f(disp);
    std::stringstream ss;
    ss << f.rdbuf();
    const auto ls = lines(ss.str());
    ASSERT_EQ(ls.size(), 10u);
    EXPECT_EQ(ls[0], "omega_p,L,k,omega_sf,omega_single,status,scale");
    for (std::size_t i = 1; i < ls.size(); ++i)
        EXPECT_LE(std::stod(fields(ls[i])[3]), 1 / std::sqrt(2.0));
    std::filesystem::remove(disp);
}

TEST(Cli, VerifyEmitsJsonLines)
{
    const auto r = run({"verify", "nernst"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_FALSE(ls.empty());
    for (const auto& l : ls) {
        const auto j = nlohmann::json::parse(l);
        for (const char* key : {"suite", "check", "expected", "measured", "tolerance", "pass"})
            EXPECT_TRUE(j.contains(key)) << key;
        EXPECT_EQ(j["suite"], "nernst");
        EXPECT_TRUE(j["pass"].get<bool>()) << l;
    }
}
