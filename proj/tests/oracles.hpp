// Independent reference computations used to derive expected values in tests.
// They favour obviousness over speed.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "detlab/matrix.hpp"
#include "detlab/poly.hpp"

namespace oracle {

using detlab::Polynomial;
using detlab::PolyGrid;

inline int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// Leibniz expansion over all permutations.
inline Polynomial leibniz_det(const PolyGrid& g, const detlab::VarTablePtr& ctx) {
    const int n = static_cast<int>(g.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Polynomial acc(ctx);
    do {
        Polynomial t = Polynomial::constant(ctx, permutation_sign(p));
        for (int i = 0; i < n && !t.is_zero(); ++i) t = t * g[i][p[i]];
        acc += t;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

// Number of permutations avoiding every zero cell.
inline long surviving_permutations(const PolyGrid& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = !g[i][p[i]].is_zero();
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

inline PolyGrid delete_row_col(const PolyGrid& g, int i, int j) {
    PolyGrid out;
    for (int r = 0; r < static_cast<int>(g.size()); ++r) {
        if (r == i) continue;
        std::vector<Polynomial> row;
        for (int c = 0; c < static_cast<int>(g[r].size()); ++c)
            if (c != j) row.push_back(g[r][c]);
        out.push_back(row);
    }
    return out;
}

inline Polynomial leibniz_cofactor(const PolyGrid& g, const detlab::VarTablePtr& ctx, int i, int j) {
    Polynomial d = leibniz_det(delete_row_col(g, i, j), ctx);
    return (i + j) % 2 ? -d : d;
}

// Random sparse polynomial with small integer or half-integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const detlab::VarTablePtr& ctx, int terms,
                              int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp), c(-9, 9), d(1, 2);
    std::vector<detlab::Term> ts;
    for (int k = 0; k < terms; ++k) {
        std::vector<detlab::Monomial::Exp> ex(ctx->size());
        for (auto& x : ex) x = static_cast<detlab::Monomial::Exp>(e(rng));
        mpq_class q(c(rng), d(rng));
        q.canonicalize();
        ts.push_back({detlab::Monomial(ex), q});
    }
    return Polynomial::from_terms(ctx, ts);
}

// Reduction with a random choice of reducer at every step.  Returns the remainder.
inline Polynomial random_path_reduce(Polynomial p, const std::vector<Polynomial>& basis, std::mt19937_64& rng) {
    const auto ord = detlab::MonomialOrder::degrevlex();
    Polynomial rem(p.context());
    while (!p.is_zero()) {
        detlab::Term lt = leading_term(p, ord);
        std::vector<const Polynomial*> cands;
        for (const auto& g : basis)
            if (leading_term(g, ord).mono.divides(lt.mono)) cands.push_back(&g);
        if (cands.empty()) {
            Polynomial t = Polynomial::monomial(p.context(), lt.mono, lt.coeff);
            rem += t;
            p -= t;
            continue;
        }
        const Polynomial& g = *cands[rng() % cands.size()];
        detlab::Term gt = leading_term(g, ord);
        p -= g.mul_term(lt.mono.quotient(gt.mono), lt.coeff / gt.coeff);
    }
    return rem;
}

}  // namespace oracle
