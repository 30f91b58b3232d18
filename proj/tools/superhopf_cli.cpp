#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "superhopf/superhopf.hpp"

using namespace superhopf;

namespace {

void add_common(CLI::App* cmd, SessionConfig& cfg)
{
    cmd->add_option("--algebra", cfg.algebra, "pl11, pl11-bosonized, b-bosonized or a definition file");
    cmd->add_flag("--bosonize", cfg.bosonize, "bosonize an algebra read from a definition file");
    cmd->add_option("--max-degree", cfg.max_degree, "degree bound (command-specific default)");
    cmd->add_option("--seed", cfg.seed, "PRNG seed");
    cmd->add_option("--out", cfg.out, "report file; check also writes <out>.summary");
    cmd->add_option("--samples", cfg.samples, "random sample count");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in enveloping superalgebras and their bosonizations"};
    app.require_subcommand(1);
    SessionConfig cfg;

    std::string expr;
    auto* normalize = app.add_subcommand("normalize", "print the normal form of an expression");
    add_common(normalize, cfg);
    normalize->add_option("expression", expr)->required();

    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "run a verification suite");
    add_common(check, cfg);
    check->add_option("suite", check_opt.suite)->check(CLI::IsMember(suite_names()));
    check->add_option("--sub", check_opt.sub, "subalgebra generators, comma separated");
    check->add_option("--w", check_opt.w, "shift-identity eigenvectors");
    check->add_option("--acting", check_opt.h, "shift-identity acting element");
    check->add_option("--ideal", check_opt.ideal, "ideal generators for the nilpotency suite");
    check->add_option("--power", check_opt.power, "nilpotency exponent")->check(CLI::PositiveNumber);
    check->add_option("--expect-nilpotency", check_opt.expect_nilpotency)
        ->check(CLI::IsMember({"nilpotent", "not-nilpotent"}));
    check->add_option("--expect-primeness", check_opt.expect_primeness)
        ->check(CLI::IsMember({"prime", "not-semiprime"}));

    std::optional<std::string> growth_gens;
    auto* growth = app.add_subcommand("growth", "filtration dimensions and growth degree");
    add_common(growth, cfg);
    growth->add_option("--gens,--sub", growth_gens, "generators, comma separated (default: all)");

    std::string mf_sub, mf_gens, mf_side = "both";
    auto* module_finite = app.add_subcommand("module-finite", "module finiteness over a subalgebra");
    add_common(module_finite, cfg);
    module_finite->add_option("--sub", mf_sub, "subalgebra generators")->required();
    module_finite->add_option("--gens", mf_gens, "module generators")->required();
    module_finite->add_option("--side", mf_side)->check(CLI::IsMember({"left", "right", "both"}));

    std::optional<std::string> constraints;
    std::optional<int> zdegree;
    auto* centralizer = app.add_subcommand("centralizer", "degree-bounded centralizer");
    add_common(centralizer, cfg);
    centralizer->add_option("--constraints", constraints, "elements to commute with (default: all generators)");
    centralizer->add_option("--zdegree", zdegree, "restrict to one Z-degree");

    std::optional<std::string> eigen_h, eigen_sub;
    auto* eigen = app.add_subcommand("eigen", "eigenvectors of ad(h) on a graded subspace of the Lie superalgebra");
    add_common(eigen, cfg);
    eigen->add_option("--acting", eigen_h, "Lie element (default y)");
    eigen->add_option("--sub", eigen_sub, "spanning vectors (default: whole algebra)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    try {
        const Session s = load_session(cfg);
        if (*normalize)
            return cmd_normalize(s, cfg, expr, std::cout);
        if (*check)
            return cmd_check(s, cfg, check_opt, std::cout);
        if (*growth)
            return cmd_growth(s, cfg, growth_gens, std::cout);
        if (*module_finite)
            return cmd_module_finite(s, cfg, mf_sub, mf_gens, parse_side(mf_side), std::cout);
        if (*centralizer)
            return cmd_centralizer(s, cfg, constraints, zdegree, std::cout);
        if (*eigen)
            return cmd_eigen(s, cfg, eigen_h, eigen_sub, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::failed;
    }
    return exit_code::usage;
}
