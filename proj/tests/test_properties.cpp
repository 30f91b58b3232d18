#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace superhopf;

namespace {

PresentationPtr ubar() { return fixtures::bar_u().carrier(); }
PresentationPtr upl() { return fixtures::u_pl11().carrier(); }

Word random_word(const PresentationPtr& p, std::mt19937_64& rng, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<GeneratorIndex> gen(0, p->size() - 1);
    Word w(len(rng));
    for (auto& g : w)
        g = gen(rng);
    return w;
}

Element random_monomial(const PresentationPtr& p, std::mt19937_64& rng, int max_degree)
{
    const auto basis = normal_monomials(*p, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    return Element::monomial(p, basis[pick(rng)]);
}

} // namespace

TEST(Properties, NormalizationIsIdempotent)
{
    std::mt19937_64 rng(101);
    for (const auto& p : {ubar(), upl()}) {
        for (int k = 0; k < 1000; ++k) {
            const Word w = random_word(p, rng, 7);
            const Element e = normalize(p, w);
            Element again(p);
            for (const auto& [m, c] : e.terms())
                again += normalize(p, p->word(m), c);
            ASSERT_EQ(again, e) << to_string(e);
        }
    }
}

TEST(Properties, WordNormalFormEqualsProductOfGenerators)
{
    std::mt19937_64 rng(102);
    for (int k = 0; k < 300; ++k) {
        const Word w = random_word(ubar(), rng, 6);
        Element prod = Element::one(ubar());
        for (GeneratorIndex g : w)
            prod = prod * Element::generator(ubar(), g);
        ASSERT_EQ(prod, normalize(ubar(), w));
    }
}

TEST(Properties, MultiplicationIsAssociative)
{
    std::mt19937_64 rng(103);
    for (const auto& p : {ubar(), upl(), fixtures::borel_smash().carrier()}) {
        for (int k = 0; k < 500; ++k) {
            const Element a = random_element(p, 3, rng);
            const Element b = random_element(p, 3, rng);
            const Element c = random_element(p, 3, rng);
            ASSERT_EQ((a * b) * c, a * (b * c)) << to_string(a) << " | " << to_string(b) << " | " << to_string(c);
        }
    }
}

TEST(Properties, MultiplicationIsBilinear)
{
    std::mt19937_64 rng(104);
    for (int k = 0; k < 200; ++k) {
        const Element a = random_element(ubar(), 3, rng);
        const Element b = random_element(ubar(), 3, rng);
        const Element c = random_element(ubar(), 3, rng);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((Scalar(2, 3) * a) * c, Scalar(2, 3) * (a * c));
    }
}

TEST(Properties, ParityAndZDegreeAreMultiplicative)
{
    std::mt19937_64 rng(105);
    for (int k = 0; k < 500; ++k) {
        const Element a = random_monomial(ubar(), rng, 4);
        const Element b = random_monomial(ubar(), rng, 4);
        const Element prod = a * b;
        if (prod.is_zero())
            continue;
        ASSERT_EQ(prod.parity(), (*a.parity() + *b.parity()) % 2);
        ASSERT_EQ(prod.z_degree(), *a.z_degree() + *b.z_degree());
    }
}

TEST(Properties, ParseOfPrintIsIdentity)
{
    std::mt19937_64 rng(106);
    for (const auto& p : {ubar(), upl()}) {
        for (int k = 0; k < 200; ++k) {
            const Element e = random_element(p, 4, rng);
            ASSERT_EQ(parse_element(p, to_string(e)), e) << to_string(e);
        }
    }
    const Element f = Scalar(-7, 3) * fixtures::bu("x^3*y*u*v*t") + Element::scalar(ubar(), Scalar(1, 2));
    EXPECT_EQ(parse_element(ubar(), to_string(f)), f);
}

TEST(Properties, CoinvariantExactlyWhenTFree)
{
    const auto& b = fixtures::bar_u();
    std::mt19937_64 rng(107);
    for (int k = 0; k < 300; ++k) {
        const Element e = random_element(ubar(), 4, rng);
        ASSERT_EQ(b.is_coinvariant(e), b.is_t_free(e)) << to_string(e);
    }
    EXPECT_TRUE(check_coinvariants_are_t_free(b, 6).passed());
}

TEST(Properties, ConjugationByTIsParity)
{
    const auto& b = fixtures::bar_u();
    EXPECT_TRUE(check_parity_conjugation(b, 6).passed());
    std::mt19937_64 rng(108);
    for (int k = 0; k < 300; ++k) {
        const Element a = random_monomial(ubar(), rng, 6);
        ASSERT_EQ(b.t() * a * b.t(), sign_power(*a.parity()) * a);
    }
}

TEST(Properties, AntipodeIsAntiMultiplicative)
{
    std::mt19937_64 rng(109);
    const auto& h = fixtures::bar_u().hopf();
    for (int k = 0; k < 200; ++k) {
        const Element a = random_element(ubar(), 3, rng);
        const Element b = random_element(ubar(), 3, rng);
        ASSERT_EQ(h.antipode(a * b), h.antipode(b) * h.antipode(a));
    }
    const auto& u = fixtures::u_pl11();
    for (int k = 0; k < 200; ++k) {
        const Element a = random_monomial(upl(), rng, 3);
        const Element b = random_monomial(upl(), rng, 3);
        ASSERT_EQ(u.antipode(a * b), sign_power(*a.parity() * *b.parity()) * (u.antipode(b) * u.antipode(a)));
    }
}

TEST(Properties, AntipodeSquaredIsConjugationByT)
{
    std::mt19937_64 rng(110);
    const auto& b = fixtures::bar_u();
    for (int k = 0; k < 200; ++k) {
        const Element a = random_element(ubar(), 4, rng);
        ASSERT_EQ(b.hopf().antipode(b.hopf().antipode(a)), b.t() * a * b.t());
    }
}

TEST(Properties, ShiftIdentityForRandomEigenvectorMultiples)
{
    const auto& h = fixtures::bar_u().hopf();
    std::mt19937_64 rng(111);
    std::uniform_int_distribution<int> exp(0, 3);
    for (int k = 0; k < 50; ++k) {
        const Element c = normalize(ubar(), Word(static_cast<std::size_t>(exp(rng)), ubar()->index_of("x")));
        for (const char* w : {"u", "v"}) {
            const Element e = c * fixtures::bu(w);
            ASSERT_TRUE(check_shift_identity(h, fixtures::bu("y"), e, 4).passed());
        }
    }
}
