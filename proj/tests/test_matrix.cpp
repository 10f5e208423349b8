#include <gtest/gtest.h>

#include <random>

#include "detlab/linalg.hpp"
#include "detlab/matrix.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace detlab;
using support::P;

namespace {

std::vector<MatrixSpec> grid_specs(int max_m) {
    std::vector<MatrixSpec> out;
    for (int m = 3; m <= max_m; ++m) {
        out.push_back(MatrixSpec::generic(m));
        out.push_back(MatrixSpec::cloned(m));
        for (int r = 1; r <= m - 2; ++r) out.push_back(MatrixSpec::zeros(m, r));
    }
    return out;
}

std::string label(const MatrixSpec& s) {
    return to_string(s.family) + " m=" + std::to_string(s.m) + " r=" + std::to_string(s.r);
}

}  // namespace

TEST(Build, ClonedThree) {
    auto M = build(MatrixSpec::cloned(3));
    EXPECT_EQ(M.vars()->size(), 8u);
    EXPECT_EQ(M.at(3, 3), M.at(2, 2));
    EXPECT_FALSE(M.vars()->find(3, 3).has_value());
}

TEST(Build, ZerosThreeOne) {
    auto M = build(MatrixSpec::zeros(3, 1));
    EXPECT_EQ(M.vars()->size(), 8u);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) EXPECT_EQ(M.at(i, j).is_zero(), i == 3 && j == 3);
}

TEST(Build, ZerosFourTwo) {
    auto M = build(MatrixSpec::zeros(4, 2));
    EXPECT_EQ(M.vars()->size(), 13u);
    std::vector<std::pair<int, int>> zeros;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            if (M.at(i, j).is_zero()) zeros.push_back({i, j});
    EXPECT_EQ(zeros, (std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {4, 4}}));
}

TEST(Build, RejectsBadSpecs) {
    EXPECT_THROW(build(MatrixSpec::zeros(4, 5)), SpecError);
    EXPECT_THROW(build(MatrixSpec::zeros(4, 0)), SpecError);
    EXPECT_THROW(build(MatrixSpec::zeros(3, 2)), SpecError);
    EXPECT_THROW(MatrixSpec::from_json(nlohmann::json::parse(R"({"family":"nope","m":3})")), SpecError);
    EXPECT_THROW(MatrixSpec::from_json(nlohmann::json::parse(R"({"family":"custom","entries":[["x_1_1","y"]]})")),
                 SpecError);
}

TEST(Build, CellsAreVariablesWithExpectedMultiplicity) {
    for (const auto& s : grid_specs(5)) {
        auto M = build(s);
        std::map<std::size_t, int> uses;
        for (const auto& row : M.cells())
            for (const auto& c : row) {
                if (c.is_zero()) continue;
                ASSERT_EQ(c.size(), 1u);
                ASSERT_EQ(c.total_degree(), 1u);
                for (std::size_t v = 0; v < M.vars()->size(); ++v)
                    if (c.uses_variable(v)) ++uses[v];
            }
        EXPECT_EQ(uses.size(), M.vars()->size()) << label(s);
        int twice = 0;
        for (auto [v, n] : uses) twice += n == 2;
        EXPECT_EQ(twice, s.family == Family::Cloned ? 1 : 0) << label(s);
    }
}

TEST(Build, CustomJsonRoundTrip) {
    auto j = nlohmann::json::parse(R"({"family":"custom","entries":[["x_1_1","x_1_2","x_1_3"],["x_2_1","x_2_2","0"]]})");
    auto s = MatrixSpec::from_json(j);
    auto M = build(s);
    EXPECT_EQ(M.rows(), 2);
    EXPECT_EQ(M.cols(), 3);
    EXPECT_TRUE(M.at(2, 3).is_zero());
    EXPECT_EQ(MatrixSpec::from_json(s.to_json()).cells(), s.cells());
    auto z = MatrixSpec::zeros(5, 2);
    EXPECT_EQ(MatrixSpec::from_json(z.to_json()).cells(), z.cells());
}

TEST(Determinant, Examples) {
    auto G = build(MatrixSpec::generic(2));
    EXPECT_EQ(determinant(G), P(G.vars(), "x_1_1*x_2_2 - x_1_2*x_2_1"));

    auto Z = build(MatrixSpec::zeros(3, 1));
    Polynomial fz = determinant(Z);
    EXPECT_EQ(fz.size(), 4u);
    EXPECT_EQ(fz, P(Z.vars(), "-x_1_1*x_2_3*x_3_2 + x_1_2*x_2_3*x_3_1 + x_1_3*x_2_1*x_3_2 - x_1_3*x_2_2*x_3_1"));

    auto C = build(MatrixSpec::cloned(3));
    Polynomial fc = determinant(C);
    EXPECT_EQ(fc.size(), 6u);
    EXPECT_EQ(fc.coefficient(P(C.vars(), "x_1_1*x_2_2^2").terms().front().mono), 1);
}

TEST(Determinant, MatchesPermutationExpansion) {
    for (const auto& s : grid_specs(5)) {
        auto M = build(s);
        Polynomial f = determinant(M);
        EXPECT_EQ(f, oracle::leibniz_det(M.cells(), M.vars())) << label(s);
        EXPECT_TRUE(f.is_homogeneous());
        EXPECT_EQ(f.total_degree(), static_cast<unsigned>(s.m));
        if (s.family == Family::Zeros) EXPECT_EQ(static_cast<long>(f.size()), oracle::surviving_permutations(M.cells())) << label(s);
    }
}

TEST(Determinant, BareissAgrees) {
    for (const auto& s : grid_specs(4)) {
        auto M = build(s);
        EXPECT_EQ(bareiss_determinant(M.cells(), M.vars()), determinant(M)) << label(s);
    }
}

TEST(Determinant, RowPermutationChangesSignOnly) {
    std::mt19937_64 rng(17);
    for (const auto& s : grid_specs(5)) {
        auto M = build(s);
        std::vector<int> perm(s.m);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        PolyGrid g;
        for (int i : perm) g.push_back(M.cells()[i]);
        Polynomial d = determinant(g, M.vars());
        EXPECT_EQ(d, determinant(M) * mpq_class(oracle::permutation_sign(perm))) << label(s);
    }
}

TEST(Cofactor, Examples) {
    auto G = build(MatrixSpec::generic(2));
    EXPECT_EQ(cofactor(G, 1, 1), P(G.vars(), "x_2_2"));
    auto C = build(MatrixSpec::cloned(3));
    EXPECT_EQ(cofactor(C, 1, 1), P(C.vars(), "x_2_2^2 - x_2_3*x_3_2"));
    auto Z = build(MatrixSpec::zeros(3, 1));
    EXPECT_EQ(cofactor(Z, 3, 3), P(Z.vars(), "x_1_1*x_2_2 - x_1_2*x_2_1"));
}

TEST(Cofactor, MatchesOracle) {
    for (const auto& s : grid_specs(4)) {
        auto M = build(s);
        for (int i = 1; i <= s.m; ++i)
            for (int j = 1; j <= s.m; ++j)
                EXPECT_EQ(cofactor(M, i, j), oracle::leibniz_cofactor(M.cells(), M.vars(), i - 1, j - 1)) << label(s);
    }
}

TEST(Adjugate, GenericTwo) {
    auto G = build(MatrixSpec::generic(2));
    PolyGrid A = adjugate(G);
    EXPECT_EQ(A[0][0], P(G.vars(), "x_2_2"));
    EXPECT_EQ(A[0][1], P(G.vars(), "-x_1_2"));
    EXPECT_EQ(A[1][0], P(G.vars(), "-x_2_1"));
    EXPECT_EQ(A[1][1], P(G.vars(), "x_1_1"));
}

TEST(Adjugate, CauchyAndInversionIdentities) {
    for (const auto& s : grid_specs(4)) {
        auto M = build(s);
        const auto& ctx = M.vars();
        Polynomial f = determinant(M);
        PolyGrid A = adjugate(M);
        PolyGrid MA = grid_multiply(M.cells(), A, ctx), AM = grid_multiply(A, M.cells(), ctx);
        PolyGrid AA = adjugate(A, ctx);
        Polynomial scale = f.pow(static_cast<unsigned>(s.m - 2));
        for (int i = 0; i < s.m; ++i)
            for (int j = 0; j < s.m; ++j) {
                Polynomial d = i == j ? f : Polynomial(ctx);
                EXPECT_EQ(MA[i][j], d) << label(s);
                EXPECT_EQ(AM[i][j], d) << label(s);
                EXPECT_EQ(AA[i][j], scale * M.cells()[i][j]) << label(s);
            }
    }
}

TEST(Gradient, Examples) {
    auto G = build(MatrixSpec::generic(2));
    auto g = gradient_generators(G);
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g[G.vars()->index(1, 2)], cofactor(G, 1, 2));

    auto C = build(MatrixSpec::cloned(3));
    auto gc = gradient_generators(C);
    EXPECT_EQ(gc[C.vars()->index(2, 2)], cofactor(C, 2, 2) + cofactor(C, 3, 3));

    auto Z = build(MatrixSpec::zeros(3, 1));
    EXPECT_EQ(gradient_generators(Z).size(), 8u);
}

TEST(Gradient, AgreesWithDerivatives) {
    for (const auto& s : grid_specs(5)) {
        auto M = build(s);
        Polynomial f = determinant(M);
        auto g = gradient_generators(M);
        ASSERT_EQ(g.size(), M.vars()->size());
        for (std::size_t v = 0; v < g.size(); ++v) EXPECT_EQ(g[v], derivative(f, v)) << label(s) << " v=" << v;
    }
}

TEST(SubmaximalMinors, Examples) {
    auto G = build(MatrixSpec::generic(2));
    auto mg = submaximal_minors(G);
    ASSERT_EQ(mg.size(), 4u);
    for (const auto& p : mg) EXPECT_EQ(p.total_degree(), 1u);

    auto C = build(MatrixSpec::cloned(3));
    auto mc = submaximal_minors(C);
    EXPECT_EQ(mc.size(), 9u);
    auto grads = gradient_generators(C);
    std::size_t hits = 0;
    for (const auto& g : grads)
        hits += std::count(mc.begin(), mc.end(), g) > 0;
    EXPECT_EQ(hits, 7u);  // the two cloned-cell cofactors merge into the x_2_2 generator
    EXPECT_EQ(grads.size(), 8u);

    auto Z = build(MatrixSpec::zeros(3, 1));
    auto mz = submaximal_minors(Z);
    auto gz = gradient_generators(Z);
    EXPECT_EQ(mz.size(), 9u);
    std::size_t in = 0;
    for (const auto& p : mz) in += std::count(gz.begin(), gz.end(), p) > 0;
    EXPECT_EQ(in, 8u);
}

TEST(CornerStrips, Examples) {
    auto M = build(MatrixSpec::zeros(4, 2));
    auto n1 = corner_strip_minors(M, 1, Strip::Rows);
    EXPECT_EQ(n1.size(), 2u);  // last row: x_4_1, x_4_2
    auto m2 = corner_strip_minors(M, 2, Strip::Cols);
    // rows 3 and 4 of the last two columns hold a zero pair and a single variable
    for (const auto& p : m2) EXPECT_EQ(p.total_degree(), 2u);
    EXPECT_EQ(m2.size(), 3u);
    auto one = corner_strip_minors(M, 0, Strip::Rows);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(one[0].is_constant());
}

TEST(CornerStrips, MatchMinorsOfTheStrip) {
    auto M = build(MatrixSpec::zeros(5, 2));
    for (int j = 1; j <= 3; ++j) {
        PolyGrid strip;
        for (int i = 1; i <= 5; ++i) {
            std::vector<Polynomial> row;
            for (int c = 5 - j + 1; c <= 5; ++c) row.push_back(M.at(i, c));
            strip.push_back(row);
        }
        EXPECT_EQ(corner_strip_minors(M, j, Strip::Cols), minors(strip, j, M.vars()));
    }
}
