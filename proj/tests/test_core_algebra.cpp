#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace superhopf;
using fixtures::bu;

namespace {

using Names = std::vector<std::string>;

PresentationPtr ubar() { return fixtures::bar_u().carrier(); }
PresentationPtr upl() { return fixtures::u_pl11().carrier(); }

GeneratorSymbol sym(std::string name, int parity, std::optional<int> cap = std::nullopt)
{
    GeneratorSymbol s;
    s.name = std::move(name);
    s.parity = parity;
    s.exp_cap = cap;
    return s;
}

Monomial mono(std::vector<int> e)
{
    Monomial m(e.size());
    m.exps = std::move(e);
    return m;
}

} // namespace

TEST(Scalar, NormalizesSignAndGcd)
{
    EXPECT_EQ(to_string(make_scalar(2, -4)), "-1/2");
    EXPECT_EQ(to_string(parse_scalar("3/6")), "1/2");
    EXPECT_EQ(to_string(parse_scalar("7")), "7");
    EXPECT_THROW(parse_scalar("1/0"), InputError);
    EXPECT_THROW(parse_scalar("abc"), InputError);
    EXPECT_EQ(sign_power(3), -1);
    EXPECT_EQ(sign_power(4), 1);
}

TEST(Normalize, AnticommutatorOfOddGenerators)
{
    EXPECT_EQ(to_string(normalize(ubar(), Names{"v", "u"})), "x - u*v");
}

TEST(Normalize, ShiftRelation)
{
    EXPECT_EQ(normalize(ubar(), Names{"u", "y"}), bu("y*u - u"));
}

TEST(Normalize, SquaresOfTAndOddGenerators)
{
    EXPECT_EQ(to_string(normalize(ubar(), Names{"t", "t"})), "1");
    EXPECT_TRUE(normalize(ubar(), Names{"u", "u"}).is_zero());
    EXPECT_TRUE(normalize(ubar(), Names{"v", "v"}).is_zero());
}

TEST(Normalize, EmptyWordIsOne)
{
    EXPECT_EQ(normalize(ubar(), Word{}), Element::one(ubar()));
}

TEST(Normalize, ScalarCoefficient)
{
    EXPECT_EQ(normalize(ubar(), Names{"v", "u"}, Scalar(1, 2)), bu("1/2*x - 1/2*u*v"));
}

TEST(Normalize, UnknownGeneratorRejected)
{
    EXPECT_THROW(normalize(ubar(), Names{"w"}), InputError);
    EXPECT_THROW(bu("w*u"), ParseError);
}

TEST(Normalize, StepBudgetSignalsNonTermination)
{
    const auto& p = *ubar();
    const Word w = {p.index_of("v"), p.index_of("u"), p.index_of("t"), p.index_of("y")};
    EXPECT_THROW(p.reduce(w, 1, 1), NonTerminationError);
}

TEST(Normalize, NormalFormIsFixed)
{
    const Element e = bu("y^2*u - 2*y*u + u");
    for (const auto& [m, c] : e.terms())
        EXPECT_EQ(normalize(ubar(), ubar()->word(m), c), Element::monomial(ubar(), m, c));
}

TEST(Mul, ExamplesFromDefiningRelations)
{
    EXPECT_EQ(bu("u") * bu("v") + bu("v") * bu("u"), bu("x"));
    EXPECT_EQ(bu("t") * bu("u"), -bu("u*t"));
    EXPECT_TRUE((bu("u*y + 3") * Element::zero(ubar())).is_zero());
    EXPECT_EQ(bu("u*y") * Element::one(ubar()), bu("u*y"));
}

TEST(Mul, PresentationMismatch)
{
    const Element a = Element::generator(ubar(), "u");
    const Element b = Element::generator(upl(), "u");
    EXPECT_THROW(a * b, PresentationMismatch);
    EXPECT_THROW(a + b, PresentationMismatch);
}

TEST(AddScale, VectorSpaceBasics)
{
    EXPECT_TRUE(add(bu("u"), -bu("u")).is_zero());
    EXPECT_EQ(scale(Scalar(1, 2), bu("2*u")), bu("u"));
    EXPECT_EQ(add(bu("x"), bu("y")).size(), 2u);
    EXPECT_TRUE(scale(0, bu("x + y")).is_zero());
}

TEST(ElementData, DegreeParityZDegree)
{
    EXPECT_EQ(bu("x*u + y").degree(), 2);
    EXPECT_EQ(Element::zero(ubar()).degree(), -1);
    EXPECT_EQ(bu("u*t").parity(), 1);
    EXPECT_EQ(bu("u*v").parity(), 0);
    EXPECT_FALSE(bu("u + y").parity().has_value());
    EXPECT_EQ(Element::zero(ubar()).parity(), 0);
    EXPECT_EQ(bu("x*u").z_degree(), 3);
    EXPECT_EQ(bu("y*t").z_degree(), 0);
    EXPECT_FALSE(bu("x + u").z_degree().has_value());
}

TEST(Printing, CanonicalForms)
{
    EXPECT_EQ(to_string(bu("u*y^2")), "y^2*u - 2*y*u + u");
    EXPECT_EQ(to_string(bu("1/2*x")), "1/2*x");
    EXPECT_EQ(to_string(bu("t*u")), "-u*t");
    EXPECT_EQ(to_string(bu("0")), "0");
    EXPECT_EQ(to_string(bu("3 - 2/4*x")), "-1/2*x + 3");
    EXPECT_EQ(to_string(bu("x^2*y + y^3")), "x^2*y + y^3");
}

TEST(Parser, PrecedenceAndPowers)
{
    EXPECT_EQ(bu("(u + v)^2"), bu("x"));
    EXPECT_EQ(bu("2*y^2"), bu("2*y*y"));
    EXPECT_EQ(bu("y^0"), bu("1"));
    EXPECT_EQ(bu("-u + v"), bu("v - u"));
    EXPECT_EQ(bu("2^3*x"), bu("8*x"));
    EXPECT_EQ(bu(" y * ( u - 1 ) "), bu("y*u - y"));
}

TEST(Parser, ErrorsCarryPositions)
{
    try {
        bu("u*+");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(bu("(u"), ParseError);
    EXPECT_THROW(bu("u)"), ParseError);
    EXPECT_THROW(bu("u^"), ParseError);
    EXPECT_THROW(bu("u^1000"), ParseError);
    EXPECT_THROW(bu(""), ParseError);
    EXPECT_THROW(bu("1/0"), InputError);
}

TEST(Parser, ElementLists)
{
    const auto v = parse_element_list(ubar(), "1, u*v ,t");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[1], bu("u*v"));
    EXPECT_THROW(parse_element_list(ubar(), "u,,v"), ParseError);
}

TEST(TensorMul, SuperModeKoszulSign)
{
    const auto p = upl();
    const Element one = Element::one(p);
    const auto a = TensorElement::pure({one, fixtures::el(p, "u")});
    const auto b = TensorElement::pure({fixtures::el(p, "v"), one});
    EXPECT_EQ(tensor_mul(a, b, ExtensionMode::Super), -TensorElement::pure({fixtures::el(p, "v"), fixtures::el(p, "u")}));
    EXPECT_EQ(tensor_mul(a, b, ExtensionMode::Ordinary),
              TensorElement::pure({fixtures::el(p, "v"), fixtures::el(p, "u")}));
}

TEST(TensorMul, UnitAndMismatch)
{
    const auto p = upl();
    const auto s = TensorElement::pure({fixtures::el(p, "u + y"), fixtures::el(p, "v*x")});
    EXPECT_EQ(tensor_mul(tensor_one(p, 2), s, ExtensionMode::Super), s);
    EXPECT_EQ(tensor_mul(s, tensor_one(p, 2), ExtensionMode::Super), s);
    const auto other = tensor_one(ubar(), 2);
    EXPECT_THROW(tensor_mul(s, other, ExtensionMode::Super), PresentationMismatch);
}

TEST(TensorElementData, PrintsAndPrunes)
{
    const auto p = upl();
    auto s = TensorElement::pure({fixtures::el(p, "u"), fixtures::el(p, "1")});
    EXPECT_EQ(to_string(s), "u⊗1");
    s -= s;
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(to_string(s), "0");
}

TEST(Confluence, BuiltInPresentationsHaveNoDiscrepancies)
{
    for (const auto& p : {upl(), ubar(), fixtures::borel_smash().carrier()}) {
        const auto r = check_overlaps(p, 6);
        EXPECT_TRUE(r.confluent());
        EXPECT_GT(r.overlaps_checked, 0u);
    }
}

TEST(Confluence, CorruptedRuleIsDetected)
{
    PresentationSpec spec = upl()->spec();
    const auto& g = *upl();
    const GeneratorIndex y = g.index_of("y"), u = g.index_of("u"), v = g.index_of("v");
    Terms rhs;
    rhs.emplace(g.generator_monomial(y), 1);
    Monomial uv = g.one();
    uv.exps[u] = uv.exps[v] = 1;
    rhs.emplace(uv, -1);
    spec.swap_rules[{v, u}] = rhs;
    const auto bad = Presentation::create(std::move(spec));
    const auto r = check_overlaps(bad, 4);
    EXPECT_FALSE(r.confluent());
    bool saw_vuu = false;
    for (const auto& d : r.discrepancies)
        saw_vuu = saw_vuu || d.word == "v*u*u";
    EXPECT_TRUE(saw_vuu);
}

TEST(PresentationValidation, RejectsMalformedSpecs)
{
    PresentationSpec dup;
    dup.generators = {sym("a", 0), sym("a", 0)};
    EXPECT_THROW(Presentation::create(dup), InvalidStructure);

    PresentationSpec missing;
    missing.generators = {sym("a", 0), sym("b", 0)};
    EXPECT_THROW(Presentation::create(missing), InvalidStructure);

    PresentationSpec raising;
    raising.generators = {sym("a", 0), sym("b", 0)};
    raising.swap_rules[{1, 0}] = Terms{{mono({2, 1}), Scalar(1)}};
    EXPECT_THROW(Presentation::create(raising), InvalidStructure);

    PresentationSpec unnormal;
    unnormal.generators = {sym("a", 0), sym("b", 0, 2)};
    unnormal.swap_rules[{1, 0}] = Terms{{mono({1, 1}), Scalar(1)}};
    unnormal.power_rules[1] = Terms{{mono({0, 2}), Scalar(1)}};
    EXPECT_THROW(Presentation::create(unnormal), InvalidStructure);

    PresentationSpec mixed;
    mixed.generators = {sym("a", 0), sym("b", 1)};
    mixed.swap_rules[{1, 0}] = Terms{{mono({1, 0}), Scalar(1)}};
    EXPECT_THROW(Presentation::create(mixed), InvalidStructure);

    PresentationSpec no_power;
    no_power.generators = {sym("a", 1, 2)};
    EXPECT_THROW(Presentation::create(no_power), InvalidStructure);

    PresentationSpec commutative;
    commutative.generators = {sym("a", 0), sym("b", 0)};
    commutative.swap_rules[{1, 0}] = Terms{{mono({1, 1}), Scalar(1)}};
    EXPECT_NO_THROW(Presentation::create(commutative));
}

TEST(NormalMonomials, CountsInBosonization)
{
    // x^a y^b u^e v^f t^d with e,f,d in {0,1}
    for (int n = 0; n <= 8; ++n) {
        const std::size_t expected = n == 0 ? 1 : static_cast<std::size_t>(4 * n * n + 2);
        EXPECT_EQ(normal_monomials(*ubar(), n).size(), expected) << "n=" << n;
    }
}
