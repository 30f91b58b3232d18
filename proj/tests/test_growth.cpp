#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"

using namespace superhopf;
using fixtures::bu;

namespace {

PresentationPtr ubar() { return fixtures::bar_u().carrier(); }
PresentationPtr smash() { return fixtures::borel_smash().carrier(); }

std::vector<Element> gens(const PresentationPtr& p, const std::string& list) { return parse_element_list(p, list); }

bool in_span(const std::vector<Element>& rows, const Element& x)
{
    ElementBasis span;
    for (const auto& r : rows)
        span.insert(r.terms());
    return span.contains(x.terms());
}

} // namespace

TEST(FiltrationDim, Examples)
{
    EXPECT_EQ(filtration_dim(ubar(), all_generators(ubar()), 5), 102u);
    EXPECT_EQ(filtration_dim(ubar(), all_generators(ubar()), 3), 38u);
    EXPECT_EQ(filtration_dim(ubar(), all_generators(ubar()), 0), 1u);
    EXPECT_EQ(filtration_dim(smash(), gens(smash(), "y,u"), 0), 1u);
}

TEST(GrowthSeries, Bosonization)
{
    const auto r = growth_series(ubar(), all_generators(ubar()), 12);
    ASSERT_EQ(r.dims.size(), 13u);
    for (int n = 3; n <= 12; ++n)
        EXPECT_EQ(r.dims[static_cast<std::size_t>(n)], 4LL * n * n + 2) << n;
    EXPECT_EQ(r.dims[1], 6);
    EXPECT_EQ(r.dims[2], 18);
    EXPECT_EQ(r.detected_degree, 2);
    EXPECT_EQ(r.onset, 3);
    EXPECT_EQ(r.differences[2][12], 8);
}

TEST(GrowthSeries, BorelSmashProduct)
{
    const auto r = growth_series(smash(), all_generators(smash()), 12);
    for (int n = 2; n <= 12; ++n)
        EXPECT_EQ(r.dims[static_cast<std::size_t>(n)], 4LL * n) << n;
    EXPECT_EQ(r.detected_degree, 1);
    EXPECT_EQ(r.onset, 2);
}

TEST(GrowthSeries, PolynomialRing)
{
    const auto r = growth_series(ubar(), gens(ubar(), "x,y"), 12);
    for (int n = 0; n <= 12; ++n)
        EXPECT_EQ(r.dims[static_cast<std::size_t>(n)], (n + 1LL) * (n + 2) / 2) << n;
    EXPECT_EQ(r.detected_degree, 2);
}

TEST(GrowthSeries, MonotoneAndStable)
{
    const auto r = growth_series(ubar(), all_generators(ubar()), 10);
    for (std::size_t n = 1; n < r.dims.size(); ++n)
        EXPECT_GE(r.dims[n], r.dims[n - 1]);
    for (std::size_t n = 4; n < r.dims.size(); ++n)
        EXPECT_EQ(r.differences[3][n], 0);
}

TEST(GrowthSeries, NotStabilizedInShortWindow)
{
    const auto r = growth_series(ubar(), all_generators(ubar()), 2);
    EXPECT_FALSE(r.detected_degree.has_value());
    EXPECT_NE(to_string(r).find("degree: not-stabilized onset: -"), std::string::npos);
    EXPECT_THROW(growth_series(ubar(), all_generators(ubar()), -1), InputError);
}

TEST(GrowthSeries, DetectDegreeOnSyntheticSequences)
{
    GrowthReport constant;
    constant.dims = {1, 1, 1, 1, 1};
    detect_degree(constant);
    EXPECT_EQ(constant.detected_degree, 0);
    EXPECT_EQ(constant.onset, 0);

    GrowthReport cubic;
    for (long long n = 0; n <= 8; ++n)
        cubic.dims.push_back(n * n * n + 1);
    detect_degree(cubic);
    EXPECT_EQ(cubic.detected_degree, 3);
    EXPECT_EQ(cubic.onset, 3);

    GrowthReport linear_late;
    linear_late.dims = {1, 5, 6, 8, 10, 12};
    detect_degree(linear_late);
    EXPECT_EQ(linear_late.detected_degree, 1);
    EXPECT_EQ(linear_late.onset, 3);
}

TEST(GrowthReportFormat, Lines)
{
    const auto r = growth_series(smash(), all_generators(smash()), 4);
    const std::string s = to_string(r);
    EXPECT_EQ(s,
              "# generators: y,u,t\n"
              "# window: 0..4\n"
              "0 1 - - -\n"
              "1 4 3 - -\n"
              "2 8 4 1 -\n"
              "3 12 4 0 -1\n"
              "4 16 4 0 0\n"
              "degree: 1 onset: 2\n");
}

TEST(ModuleFinite, OverPolynomialRingBothSides)
{
    const auto c = module_finite_check(ubar(), gens(ubar(), "x,y"), gens(ubar(), "1,u,v,u*v,t,u*t,v*t,u*v*t"),
                                       Side::Both, 8);
    EXPECT_EQ(c.status(), Status::Pass) << to_string(c.report);
    EXPECT_EQ(c.degree_checked, 8);
    EXPECT_EQ(c.report.cases, 2 * normal_monomials(*ubar(), 8).size());
}

TEST(ModuleFinite, OverCentralPolynomialsFails)
{
    const auto c = module_finite_check(ubar(), gens(ubar(), "x"), gens(ubar(), "1,u,v,u*v,t,y,y^2,y^3"), Side::Left, 8);
    EXPECT_EQ(c.status(), Status::Fail);
    EXPECT_FALSE(c.report.witnesses.empty());
}

TEST(ModuleFinite, OverItselfWithUnit)
{
    const auto c = module_finite_check(ubar(), all_generators(ubar()), gens(ubar(), "1"), Side::Right, 6);
    EXPECT_EQ(c.status(), Status::Pass);
}

TEST(ModuleFinite, BorelOverY)
{
    const auto c = module_finite_check(smash(), gens(smash(), "y"), gens(smash(), "1,u,t,u*t"), Side::Both, 8);
    EXPECT_EQ(c.status(), Status::Pass);
}

TEST(ModuleFinite, Errors)
{
    EXPECT_THROW(module_finite_check(ubar(), gens(ubar(), "x"), {}, Side::Left, 3), InputError);
    EXPECT_THROW(module_finite_check(ubar(), gens(ubar(), "x"), gens(smash(), "1"), Side::Left, 3),
                 PresentationMismatch);
    EXPECT_THROW(parse_side("up"), InputError);
    EXPECT_EQ(parse_side("right"), Side::Right);
}

TEST(GrowthObstruction, Examples)
{
    const auto kx = growth_obstruction(ubar(), gens(ubar(), "x"), 10);
    EXPECT_EQ(kx.status, Status::Pass);
    EXPECT_NE(kx.notes.back().find("1 < 2"), std::string::npos);

    EXPECT_EQ(growth_obstruction(ubar(), gens(ubar(), "x,y"), 10).status, Status::Fail);
    EXPECT_EQ(growth_obstruction(smash(), gens(smash(), "y"), 10).status, Status::Fail);
    EXPECT_EQ(growth_obstruction(ubar(), gens(ubar(), "x"), 2).status, Status::Inconclusive);
}

TEST(GrowthObstruction, FinitenessImpliesEqualDegree)
{
    const auto sub = gens(ubar(), "x,y");
    ASSERT_EQ(module_finite_check(ubar(), sub, gens(ubar(), "1,u,v,u*v,t,u*t,v*t,u*v*t"), Side::Both, 8).status(),
              Status::Pass);
    EXPECT_EQ(growth_series(ubar(), sub, 10).detected_degree,
              growth_series(ubar(), all_generators(ubar()), 10).detected_degree);
}

TEST(Centralizer, DegreeZeroCenterIsScalars)
{
    const auto c = centralizer_degree_bounded(ubar(), all_generators(ubar()), 4, 0);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0], bu("1"));
}

TEST(Centralizer, ContainsPowersOfX)
{
    const auto c = centralizer_degree_bounded(ubar(), all_generators(ubar()), 4);
    EXPECT_TRUE(in_span(c, bu("x")));
    EXPECT_TRUE(in_span(c, bu("x^2")));
    EXPECT_FALSE(in_span(c, bu("y")));
    for (const auto& e : c)
        for (const auto& g : all_generators(ubar()))
            EXPECT_TRUE(commutator(e, g).is_zero());
}

TEST(Centralizer, NoConstraintsGivesWholeSpan)
{
    EXPECT_EQ(centralizer_degree_bounded(ubar(), {}, 3).size(), normal_monomials(*ubar(), 3).size());
}

TEST(Centralizer, ZDegreeNeedsDeclaredDegrees)
{
    std::istringstream def("[generators]\ny 0\nu 1\n[brackets]\ny u = u\n");
    const auto b = bosonize(enveloping(parse_lie_definition(def)));
    EXPECT_THROW(centralizer_degree_bounded(b.carrier(), all_generators(b.carrier()), 2, 0), InputError);
}

TEST(EnvelopingGrowth, SubLieSuperalgebras)
{
    const auto g = fixtures::pl11_ptr();
    EXPECT_EQ(enveloping_growth_bound(*g, SubSuperSpace(g, {g->unit("y"), g->unit("u")}), 10).detected_degree, 1);
    EXPECT_EQ(enveloping_growth_bound(*g, SubSuperSpace(g, {g->unit("x")}), 10).detected_degree, 1);
    EXPECT_EQ(enveloping_growth_bound(*g, SubSuperSpace(g, {g->unit("x"), g->unit("y")}), 10).detected_degree, 2);
    EXPECT_THROW(enveloping_growth_bound(*g, SubSuperSpace(g, {g->unit("u"), g->unit("v")}), 4), InvalidStructure);
}

TEST(EnvelopingGrowth, OddPartBoundedByEvenPart)
{
    // every sub Lie superalgebra generated by basis vectors with dim a_0 <= 1
    const auto g = fixtures::pl11_ptr();
    for (std::size_t i = 0; i < g->dimension(); ++i) {
        for (std::size_t j = i; j < g->dimension(); ++j) {
            const auto a = subalgebra_generated(g, {g->unit(i), g->unit(j)});
            std::size_t even = 0;
            for (const auto& row : a.basis())
                even += g->parity(row) == 0 ? 1 : 0;
            if (even > 1)
                continue;
            const auto r = enveloping_growth_bound(*g, a, 10);
            ASSERT_TRUE(r.detected_degree.has_value());
            EXPECT_LE(*r.detected_degree, 1) << g->basis(i).name << "," << g->basis(j).name;
        }
    }
}
