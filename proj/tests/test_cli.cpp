#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"

using namespace superhopf;

namespace {

const std::string data_dir = SUPERHOPF_TEST_DATA;

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args)
{
    const std::string cmd = std::string(SUPERHOPF_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / "superhopf_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

Session session(const std::string& algebra)
{
    SessionConfig cfg;
    cfg.algebra = algebra;
    return load_session(cfg);
}

int check(const std::string& algebra, CheckOptions opt, std::string& text, SessionConfig cfg = {})
{
    cfg.algebra = algebra;
    std::ostringstream out;
    const int code = cmd_check(load_session(cfg), cfg, opt, out);
    text = out.str();
    return code;
}

CheckOptions suite(const std::string& name)
{
    CheckOptions o;
    o.suite = name;
    return o;
}

} // namespace

TEST(LoadSession, BuiltIns)
{
    const auto plain = session("pl11");
    EXPECT_FALSE(plain.bosonized.has_value());
    EXPECT_EQ(plain.carrier()->size(), 4u);
    const auto b = session("pl11-bosonized");
    ASSERT_TRUE(b.bosonized.has_value());
    EXPECT_EQ(b.carrier()->size(), 5u);
    const auto borel = session("b-bosonized");
    EXPECT_EQ(borel.carrier()->size(), 3u);
    EXPECT_EQ(borel.lie->dimension(), 2u);
}

TEST(LoadSession, DefinitionFiles)
{
    SessionConfig cfg;
    cfg.algebra = data_dir + "/pl11.def";
    EXPECT_FALSE(load_session(cfg).bosonized.has_value());
    cfg.bosonize = true;
    EXPECT_TRUE(load_session(cfg).bosonized.has_value());
    cfg.algebra = data_dir + "/bad_jacobi.def";
    EXPECT_THROW(load_session(cfg), InvalidStructure);
    cfg.algebra = data_dir + "/nope.def";
    EXPECT_THROW(load_session(cfg), InputError);
}

TEST(LoadSession, RejectsNonPositiveBounds)
{
    SessionConfig cfg;
    cfg.max_degree = 0;
    EXPECT_THROW(load_session(cfg), InputError);
    cfg.max_degree.reset();
    cfg.samples = 0;
    EXPECT_THROW(load_session(cfg), InputError);
}

TEST(LoadSession, BorelRelationsMatchGenerated)
{
    const auto s = session("b-bosonized");
    EXPECT_TRUE(check_relations(s.carrier(), bosonized_relations(*s.lie)).passed());
    EXPECT_THROW(assert_relations(s.carrier(), {{"u*y", "y*u"}}), InvalidStructure);
}

TEST(Normalize, Examples)
{
    const SessionConfig cfg;
    const auto s = session("pl11-bosonized");
    for (const auto& [in, expected] : std::vector<std::pair<std::string, std::string>>{
             {"v*u", "x - u*v\n"}, {"t^2", "1\n"}, {"u*y^2", "y^2*u - 2*y*u + u\n"}}) {
        std::ostringstream out;
        EXPECT_EQ(cmd_normalize(s, cfg, in, out), exit_code::ok);
        EXPECT_EQ(out.str(), expected);
    }
    std::ostringstream out;
    EXPECT_THROW(cmd_normalize(s, cfg, "u*+", out), ParseError);
    EXPECT_THROW(cmd_normalize(s, cfg, "w", out), ParseError);
}

TEST(Check, AllOnBosonizationPasses)
{
    std::string text;
    EXPECT_EQ(check("pl11-bosonized", suite("all"), text), exit_code::ok);
    EXPECT_EQ(text.find(" FAIL\n"), std::string::npos);
    for (const char* name : {"coassociativity", "counit", "antipode", "bialgebra", "ad-equals-bracket", "normality",
                             "biproduct-decomposition", "shift-identity[u]", "shift-identity[v]", "ideal-not-nilpotent",
                             "zero-divisor-scan"})
        EXPECT_NE(text.find(std::string("CHECK ") + name), std::string::npos) << name;
}

TEST(Check, AllOnOtherAlgebrasPasses)
{
    std::string text;
    EXPECT_EQ(check("pl11", suite("all"), text), exit_code::ok) << text;
    EXPECT_NE(text.find("CHECK biproduct-decomposition INCONCLUSIVE"), std::string::npos);
    EXPECT_EQ(check("b-bosonized", suite("all"), text), exit_code::ok) << text;
    EXPECT_NE(text.find("CHECK annihilating-pair-found PASS"), std::string::npos);
}

TEST(Check, NilpotencyOnBorel)
{
    std::string text;
    EXPECT_EQ(check("b-bosonized", suite("nilpotency"), text), exit_code::ok);
    EXPECT_NE(text.find("CHECK nilpotent-ideal PASS"), std::string::npos);
}

TEST(Check, NilpotencyExpectationCanBeOverridden)
{
    auto opt = suite("nilpotency");
    opt.expect_nilpotency = "nilpotent";
    std::string text;
    EXPECT_EQ(check("pl11-bosonized", opt, text), exit_code::failed);
    EXPECT_NE(text.find("CHECK nilpotent-ideal FAIL"), std::string::npos);
    opt.expect_nilpotency = "not-nilpotent";
    EXPECT_EQ(check("b-bosonized", opt, text), exit_code::failed);
    EXPECT_NE(text.find("CHECK ideal-not-nilpotent FAIL"), std::string::npos);
}

TEST(Check, NormalityOfGroupAlgebraFails)
{
    auto opt = suite("normality");
    opt.sub = "t";
    std::string text;
    EXPECT_EQ(check("pl11-bosonized", opt, text), exit_code::failed);
    EXPECT_NE(text.find("input=ad_l(u)(t) expected=member of A actual=2*u*t"), std::string::npos);
}

TEST(Check, UnknownSuite)
{
    std::string text;
    EXPECT_THROW(check("pl11-bosonized", suite("bogus"), text), InputError);
}

TEST(Check, ShiftIdentityWithExplicitEigenvector)
{
    auto opt = suite("shift-identity");
    opt.w = "u*x";
    std::string text;
    EXPECT_EQ(check("pl11-bosonized", opt, text), exit_code::ok);
    opt.w = "x";
    EXPECT_THROW(check("pl11-bosonized", opt, text), InputError);
}

TEST(Check, SeedRecordedInEveryReport)
{
    SessionConfig cfg;
    cfg.seed = 77;
    cfg.samples = 5;
    std::string text;
    check("pl11-bosonized", suite("hopf-axioms"), text, cfg);
    std::size_t headers = 0, seeds = 0;
    for (std::size_t pos = 0; (pos = text.find("CHECK ", pos)) != std::string::npos; ++pos)
        ++headers;
    for (std::size_t pos = 0; (pos = text.find("param seed=77", pos)) != std::string::npos; ++pos)
        ++seeds;
    EXPECT_EQ(headers, 4u);
    EXPECT_EQ(seeds, headers);
}

TEST(Check, ReportFilesAreDeterministic)
{
    const auto a = scratch("det_a.txt"), b = scratch("det_b.txt");
    for (const auto& path : {a, b}) {
        SessionConfig cfg;
        cfg.out = path.string();
        cfg.samples = 20;
        std::string text;
        EXPECT_EQ(check("pl11-bosonized", suite("all"), text, cfg), exit_code::ok);
        EXPECT_EQ(slurp(path), text);
    }
    EXPECT_EQ(slurp(a), slurp(b));
    const std::string summary = slurp(a.string() + ".summary");
    EXPECT_EQ(summary, slurp(b.string() + ".summary"));
    EXPECT_NE(summary.find("seed=1\n"), std::string::npos);
    EXPECT_NE(summary.find("checks="), std::string::npos);
}

TEST(Growth, Commands)
{
    SessionConfig cfg;
    std::ostringstream out;
    EXPECT_EQ(cmd_growth(session("pl11-bosonized"), cfg, std::nullopt, out), exit_code::ok);
    EXPECT_NE(out.str().find("degree: 2 onset: 3"), std::string::npos);
    std::ostringstream borel;
    cmd_growth(session("b-bosonized"), cfg, std::nullopt, borel);
    EXPECT_NE(borel.str().find("degree: 1 onset: 2"), std::string::npos);
    std::ostringstream poly;
    cmd_growth(session("pl11-bosonized"), cfg, std::string("x,y"), poly);
    EXPECT_NE(poly.str().find("\n12 91 13 1 0\n"), std::string::npos);
    EXPECT_NE(poly.str().find("degree: 2"), std::string::npos);
}

TEST(ModuleFinite, Commands)
{
    SessionConfig cfg;
    const auto s = session("pl11-bosonized");
    std::ostringstream pass;
    EXPECT_EQ(cmd_module_finite(s, cfg, "x,y", "1,u,v,u*v,t,u*t,v*t,u*v*t", Side::Both, pass), exit_code::ok);
    std::ostringstream fail;
    EXPECT_EQ(cmd_module_finite(s, cfg, "x", "1,u,v,t", Side::Left, fail), exit_code::failed);
    EXPECT_NE(fail.str().find("CHECK growth-obstruction PASS"), std::string::npos);
    EXPECT_NE(fail.str().find("obstruction: 1 < 2"), std::string::npos);
    std::ostringstream trivial;
    EXPECT_EQ(cmd_module_finite(s, cfg, "x,y,u,v,t", "1", Side::Both, trivial), exit_code::ok);
}

TEST(Centralizer, Command)
{
    SessionConfig cfg;
    std::ostringstream out;
    EXPECT_EQ(cmd_centralizer(session("pl11-bosonized"), cfg, std::nullopt, 0, out), exit_code::ok);
    EXPECT_NE(out.str().find("dimension: 1\n  1\n"), std::string::npos);
}

TEST(Eigen, Command)
{
    SessionConfig cfg;
    std::ostringstream out;
    EXPECT_EQ(cmd_eigen(session("pl11"), cfg, std::nullopt, std::nullopt, out), exit_code::ok);
    EXPECT_NE(out.str().find("eigenvalue 1: u\n"), std::string::npos);
    EXPECT_NE(out.str().find("eigenvalue -1: v\n"), std::string::npos);
}

TEST(Binary, ExitCodes)
{
    EXPECT_EQ(cli("normalize 'v*u'").code, 0);
    const auto parse = cli("normalize 'u*+'");
    EXPECT_EQ(parse.code, 2);
    EXPECT_NE(parse.out.find("position"), std::string::npos);
    EXPECT_EQ(cli("normalize 'w*u'").code, 2);
    EXPECT_EQ(cli("check bogus").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    EXPECT_EQ(cli("check normality --sub t").code, 1);
    EXPECT_EQ(cli("check nilpotency --algebra b-bosonized").code, 0);
    EXPECT_EQ(cli("growth --algebra " + data_dir + "/bad_jacobi.def").code, 1);
    EXPECT_EQ(cli("growth --max-degree 0").code, 2);
}

TEST(Binary, ExitZeroIffNoFailLine)
{
    for (const std::string args : {"check normality --sub t", "check normality", "check adjoint --algebra pl11",
                                   "module-finite --sub x --gens 1,u,v,t", "check zero-divisors --algebra b-bosonized",
                                   "check shift-identity --algebra b-bosonized"}) {
        const auto r = cli(args);
        const bool has_fail = r.out.find(" FAIL\n") != std::string::npos;
        EXPECT_EQ(r.code == 0, !has_fail) << args;
    }
}

TEST(Binary, OutFileMirrorsStdout)
{
    const auto path = scratch("growth.txt");
    const auto r = cli("growth --max-degree 6 --out " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(slurp(path), r.out);
}
