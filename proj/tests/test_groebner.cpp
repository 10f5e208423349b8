#include <gtest/gtest.h>

#include <random>

#include "detlab/groebner.hpp"
#include "detlab/matrix.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace detlab;
using support::names;
using support::P;
using support::Ps;

namespace {

// Krull dimension of k[x]/(monomials) by brute force over all variable subsets.
unsigned brute_monomial_dimension(const std::vector<Monomial>& gens, std::size_t n) {
    unsigned best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& g : gens) {
            bool inside = true;
            for (std::size_t v = 0; v < n; ++v)
                if (g[v] && !(mask >> v & 1)) inside = false;
            if (inside) independent = false;
        }
        if (independent) best = std::max(best, static_cast<unsigned>(__builtin_popcount(mask)));
    }
    return best;
}

std::vector<Polynomial> two_minors(const SymbolicMatrix& M) { return minors(M.cells(), 2, M.vars()); }

}  // namespace

TEST(Buchberger, Examples) {
    auto xy = names({"x", "y"});
    auto G = buchberger(Ideal(xy, Ps(xy, {"x^2 - y", "y"})));
    ASSERT_EQ(G.elements().size(), 2u);
    EXPECT_EQ(G.elements()[0], P(xy, "y"));
    EXPECT_EQ(G.elements()[1], P(xy, "x^2"));
}

TEST(Buchberger, MinorsOfGenericTwoByThree) {
    MatrixSpec s = MatrixSpec::custom({{std::pair{1, 1}, std::pair{1, 2}, std::pair{1, 3}},
                                       {std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3}}});
    auto M = build(s);
    auto mins = two_minors(M);
    ASSERT_EQ(mins.size(), 3u);
    auto G = buchberger(Ideal(M.vars(), mins));
    ASSERT_EQ(G.elements().size(), 3u);
    for (const auto& p : mins) {
        bool found = false;
        for (const auto& g : G.elements()) found |= g == p.monic();
        EXPECT_TRUE(found) << p.to_string();
    }
}

TEST(Buchberger, SubmaximalMinorsOfGenericThreeAreTheirOwnBasis) {
    auto M = build(MatrixSpec::generic(3));
    auto mins = submaximal_minors(M);
    auto G = buchberger(Ideal(M.vars(), mins));
    EXPECT_EQ(G.elements().size(), 9u);
    auto ord = MonomialOrder::degrevlex();
    std::set<std::string> leads, anti;
    for (const auto& m : G.leading_monomials()) leads.insert(monomial_to_string(m, *M.vars()));
    for (int i = 1; i <= 2; ++i)
        for (int i2 = i + 1; i2 <= 3; ++i2)
            for (int j = 1; j <= 2; ++j)
                for (int j2 = j + 1; j2 <= 3; ++j2) {
                    Polynomial a = M.at(i, j2) * M.at(i2, j);
                    anti.insert(monomial_to_string(a.terms().front().mono, *M.vars()));
                }
    EXPECT_EQ(leads, anti);
    for (const auto& p : mins) EXPECT_TRUE(reduces_to_zero(p, G));
}

TEST(Buchberger, IsReducedAndSatisfiesCriterion) {
    auto M = build(MatrixSpec::cloned(3));
    auto G = buchberger(Ideal(M.vars(), gradient_generators(M)));
    const auto& E = G.elements();
    auto ord = MonomialOrder::degrevlex();
    for (std::size_t i = 0; i < E.size(); ++i) {
        EXPECT_EQ(leading_term(E[i], ord).coeff, 1);
        for (std::size_t j = 0; j < E.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : E[j].terms()) EXPECT_FALSE(G.leading_monomials()[i].divides(t.mono));
        }
    }
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            Term a = leading_term(E[i], ord), b = leading_term(E[j], ord);
            Monomial l = a.mono.lcm(b.mono);
            Polynomial s = E[i].mul_term(l.quotient(a.mono), 1) - E[j].mul_term(l.quotient(b.mono), 1);
            EXPECT_TRUE(normal_form(s, G).is_zero());
        }
}

TEST(Buchberger, Idempotent) {
    for (auto spec : {MatrixSpec::cloned(3), MatrixSpec::zeros(3, 1), MatrixSpec::zeros(4, 2)}) {
        auto M = build(spec);
        auto G = buchberger(Ideal(M.vars(), gradient_generators(M)));
        auto G2 = buchberger(Ideal(M.vars(), G.elements()));
        EXPECT_EQ(G.elements(), G2.elements());
    }
}

TEST(Buchberger, DeterministicUnderGeneratorShuffle) {
    auto M = build(MatrixSpec::zeros(4, 1));
    auto gens = submaximal_minors(M);
    auto G = buchberger(Ideal(M.vars(), gens));
    std::mt19937_64 rng(4);
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(buchberger(Ideal(M.vars(), gens)).elements(), G.elements());
}

TEST(Buchberger, BudgetExhaustionThrows) {
    auto M = build(MatrixSpec::cloned(4));
    Budget b;
    b.max_pairs = 5;
    EXPECT_THROW(buchberger(Ideal(M.vars(), gradient_generators(M)), b), ResourceError);
    EXPECT_THROW(buchberger(Ideal(M.vars(), gradient_generators(M)), Budget{}.with_timeout_ms(0)), ResourceError);
}

TEST(Ideal, MismatchedTablesThrow) {
    auto a = names({"x", "y"}), b = names({"u", "v"});
    EXPECT_THROW(Ideal(a, {P(a, "x"), P(b, "u")}), ContextError);
    EXPECT_THROW(contains(Ideal(a, {P(a, "x")}), Ideal(b, {P(b, "u")})), ContextError);
}

TEST(Ideal, PrunesZerosAndScalarDuplicates) {
    auto a = names({"x", "y"});
    Ideal I(a, {P(a, "x"), Polynomial(a), P(a, "-3*x"), P(a, "y")});
    EXPECT_EQ(I.gens().size(), 2u);
}

TEST(NormalForm, Examples) {
    auto M = build(MatrixSpec::cloned(3));
    auto gens = gradient_generators(M);
    auto G = buchberger(Ideal(M.vars(), gens));
    for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G).is_zero());
    for (const auto& a : submaximal_minors(M))
        for (const auto& b : submaximal_minors(M)) EXPECT_TRUE(reduces_to_zero(a * b, G));
    EXPECT_FALSE(normal_form(Polynomial::constant(M.vars(), 1), G).is_zero());
    EXPECT_FALSE(G.is_unit());
}

TEST(NormalForm, PathIndependent) {
    std::mt19937_64 rng(31);
    auto M = build(MatrixSpec::zeros(3, 1));
    auto G = buchberger(Ideal(M.vars(), submaximal_minors(M)));
    for (int k = 0; k < 40; ++k) {
        Polynomial p = oracle::random_poly(rng, M.vars(), 4, 2);
        Polynomial nf = normal_form(p, G);
        for (int t = 0; t < 3; ++t) EXPECT_EQ(oracle::random_path_reduce(p, G.elements(), rng), nf);
    }
}

TEST(Dimension, Examples) {
    auto xy = names({"x", "y"});
    EXPECT_EQ(dimension(Ideal(xy, {P(xy, "x*y")})), 1u);
    EXPECT_THROW(dimension(Ideal(xy, {P(xy, "x"), P(xy, "1 - x")})), DomainError);
    EXPECT_EQ(dimension(Ideal::zero(xy)), 2u);

    auto C = build(MatrixSpec::cloned(3));
    EXPECT_EQ(codimension(Ideal(C.vars(), submaximal_minors(C))), 4u);
    auto Z = build(MatrixSpec::zeros(3, 1));
    EXPECT_EQ(codimension(Ideal(Z.vars(), submaximal_minors(Z))), 4u);
}

TEST(Dimension, MonomialBruteForce) {
    std::mt19937_64 rng(77);
    for (int k = 0; k < 200; ++k) {
        std::size_t n = 1 + rng() % 4;
        std::vector<Monomial> gens;
        int count = 1 + rng() % 4;
        for (int g = 0; g < count; ++g) {
            std::vector<Monomial::Exp> e(n);
            for (auto& x : e) x = static_cast<Monomial::Exp>(rng() % 3);
            if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) e[0] = 1;
            gens.emplace_back(e);
        }
        EXPECT_EQ(monomial_dimension(gens, n), brute_monomial_dimension(gens, n));
    }
}

TEST(Quotient, Examples) {
    auto xy = names({"x", "y"});
    Ideal q = ideal_quotient(Ideal(xy, Ps(xy, {"x^2", "x*y"})), Ideal(xy, {P(xy, "x")}));
    EXPECT_TRUE(equals(q, Ideal(xy, Ps(xy, {"x", "y"}))));

    auto C = build(MatrixSpec::cloned(3));
    Ideal J(C.vars(), gradient_generators(C)), Pm(C.vars(), submaximal_minors(C));
    std::vector<Polynomial> entries;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (!(i == 1 && j == 1) && !(i == 3 && j == 3)) entries.push_back(C.at(i, j));
    EXPECT_EQ(entries.size(), 7u);
    EXPECT_TRUE(equals(ideal_quotient(J, Pm), Ideal(C.vars(), entries)));

    auto Z = build(MatrixSpec::zeros(3, 1));
    Ideal cond = ideal_quotient(Ideal(Z.vars(), gradient_generators(Z)), Ideal(Z.vars(), submaximal_minors(Z)));
    EXPECT_EQ(codimension(cond), 4u);
}

TEST(Quotient, Laws) {
    auto Z = build(MatrixSpec::zeros(3, 1));
    Ideal I(Z.vars(), gradient_generators(Z));
    std::mt19937_64 rng(3);
    for (int k = 0; k < 4; ++k) {
        auto gens = submaximal_minors(Z);
        std::vector<Polynomial> pick{gens[rng() % gens.size()], gens[rng() % gens.size()]};
        Ideal K(Z.vars(), pick);
        Ideal Q = ideal_quotient(I, K);
        EXPECT_TRUE(contains(Q, I));
        EXPECT_TRUE(contains(I, product(Q, K)));
    }
}

TEST(Saturation, Examples) {
    auto xy = names({"x", "y"});
    auto s = saturation(Ideal(xy, {P(xy, "x^2*y")}), Ideal(xy, {P(xy, "y")}));
    EXPECT_TRUE(equals(s.ideal, Ideal(xy, {P(xy, "x^2")})));
    EXPECT_FALSE(s.unit);
    auto u = saturation(Ideal(xy, Ps(xy, {"x^2", "x*y"})), Ideal(xy, {P(xy, "x")}));
    EXPECT_TRUE(u.unit);

    auto Z = build(MatrixSpec::zeros(3, 1));
    Ideal J(Z.vars(), gradient_generators(Z)), I(Z.vars(), submaximal_minors(Z));
    auto sat = saturation(J, I);
    EXPECT_GE(sat.steps, 1u);
    EXPECT_TRUE(contains(sat.ideal, ideal_quotient(J, I)));
}

TEST(Contains, Examples) {
    auto xy = names({"x", "y"});
    Ideal a(xy, {P(xy, "x")}), b(xy, Ps(xy, {"x", "y"}));
    EXPECT_TRUE(contains(b, a));
    EXPECT_FALSE(contains(a, b));

    auto C = build(MatrixSpec::cloned(3));
    EXPECT_TRUE(contains(Ideal(C.vars(), submaximal_minors(C)), Ideal(C.vars(), gradient_generators(C))));

    auto Z = build(MatrixSpec::zeros(4, 2));
    Ideal cond = ideal_quotient(Ideal(Z.vars(), gradient_generators(Z)), Ideal(Z.vars(), submaximal_minors(Z)));
    auto G = buchberger(cond);
    for (int j = 0; j <= 2; ++j) {
        Ideal prod = product(Ideal(Z.vars(), corner_strip_minors(Z, j, Strip::Rows)),
                             Ideal(Z.vars(), corner_strip_minors(Z, 2 - j, Strip::Cols)));
        EXPECT_TRUE(contains(G, prod)) << j;
    }
}

TEST(Eliminate, Examples) {
    auto xyz = names({"x", "y", "z"});
    Ideal tc(xyz, Ps(xyz, {"y - x^2", "z - x^3"}));
    Ideal e = eliminate(tc, {0});
    auto G = buchberger(e);
    EXPECT_TRUE(reduces_to_zero(P(xyz, "z^2 - y^3"), G));
    for (const auto& g : e.gens()) {
        EXPECT_FALSE(g.uses_variable(0));
        EXPECT_TRUE(contains(tc, Ideal(xyz, {g})));
    }
    Ideal none = eliminate(tc, {});
    EXPECT_TRUE(equals(none, tc));
}

TEST(RegularSequence, Examples) {
    auto xy = names({"x", "y"});
    EXPECT_EQ(regular_sequence_check(Ideal::zero(xy), Ps(xy, {"x", "y"})).status, Status::Pass);
    auto bad = regular_sequence_check(Ideal(xy, {P(xy, "x")}), {P(xy, "x")});
    EXPECT_EQ(bad.status, Status::Fail);
    ASSERT_FALSE(bad.witnesses.empty());

    auto M = build(MatrixSpec::generic(3));
    std::vector<Polynomial> seq{M.at(1, 1), M.at(3, 3)};
    EXPECT_EQ(regular_sequence_check(Ideal(M.vars(), submaximal_minors(M)), seq).status, Status::Pass);
}

TEST(MaximalMinors, DegeneratedFourByThree) {
    // a x b = 4 x 3, one zero where i + j > a + b - r with r = 1
    std::vector<std::vector<std::optional<std::pair<int, int>>>> cells;
    for (int i = 1; i <= 4; ++i) {
        std::vector<std::optional<std::pair<int, int>>> row;
        for (int j = 1; j <= 3; ++j) {
            if (i + j > 4 + 3 - 1)
                row.emplace_back();
            else
                row.emplace_back(std::pair{i, j});
        }
        cells.push_back(row);
    }
    auto M = build(MatrixSpec::custom(cells));
    EXPECT_EQ(M.vars()->size(), 11u);
    auto maxm = minors(M.cells(), 3, M.vars());
    EXPECT_EQ(maxm.size(), 4u);
    EXPECT_EQ(codimension(Ideal(M.vars(), maxm)), 2u);
}

TEST(Radical, Membership) {
    auto xy = names({"x", "y"});
    EXPECT_TRUE(radical_member(P(xy, "x"), Ideal(xy, {P(xy, "x^3")})));
    EXPECT_FALSE(radical_member(P(xy, "y"), Ideal(xy, {P(xy, "x^3")})));
    EXPECT_TRUE(radical_member(P(xy, "x + y"), Ideal(xy, Ps(xy, {"x^2", "y^2"}))));
}

TEST(Intersect, Basic) {
    auto xy = names({"x", "y"});
    Ideal cap = intersect(Ideal(xy, {P(xy, "x")}), Ideal(xy, {P(xy, "y")}));
    EXPECT_TRUE(equals(cap, Ideal(xy, {P(xy, "x*y")})));
    EXPECT_EQ(cap.context()->size(), 2u);
}
