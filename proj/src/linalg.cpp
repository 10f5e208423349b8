#include "detlab/linalg.hpp"

#include <algorithm>

namespace detlab {

void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

namespace {

// r <- a*r - b*p, both sorted; the leading entry is expected to cancel.
SparseRow combine(const SparseRow& r, const mpz_class& a, const SparseRow& p, const mpz_class& b) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    auto i = r.begin();
    auto j = p.begin();
    mpz_class t;
    while (i != r.end() || j != p.end()) {
        if (j == p.end() || (i != r.end() && i->first < j->first)) {
            out.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == r.end() || j->first < i->first) {
            out.emplace_back(j->first, -b * j->second);
            ++j;
        } else {
            t = a * i->second - b * j->second;
            if (t != 0) out.emplace_back(i->first, t);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool SparseEchelon::add_row(SparseRow row) {
    make_primitive(row);
    std::size_t steps = 0;
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        const SparseRow& p = it->second;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), p.front().second.get_mpz_t());
        mpz_class a = p.front().second / g;
        mpz_class b = row.front().second / g;
        row = combine(row, a, p, b);
        if (++steps % 8 == 0) make_primitive(row);
        if (budget_ && steps % 64 == 0) budget_->check_time("sparse elimination");
    }
    if (row.empty()) return false;
    make_primitive(row);
    std::uint32_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

std::vector<std::vector<mpz_class>> SparseEchelon::kernel() const {
    std::vector<std::vector<mpz_class>> basis;
    std::vector<std::uint32_t> pivot_cols;
    for (const auto& [c, _] : pivots_) pivot_cols.push_back(c);
    for (std::uint32_t f = 0; f < ncols_; ++f) {
        if (pivots_.count(f)) continue;
        std::vector<mpq_class> x(ncols_, 0);
        x[f] = 1;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const SparseRow& p = it->second;
            if (it->first > f) continue;  // pivot columns right of f only see zeros
            mpq_class s = 0;
            for (std::size_t k = 1; k < p.size(); ++k)
                if (x[p[k].first] != 0) s += mpq_class(p[k].second) * x[p[k].first];
            if (s != 0) x[it->first] = -s / mpq_class(p.front().second);
        }
        mpz_class l = 1, g = 0;
        for (const auto& q : x)
            if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        std::vector<mpz_class> v(ncols_);
        for (std::uint32_t k = 0; k < ncols_; ++k) {
            if (x[k] == 0) continue;
            mpq_class s = x[k] * l;
            v[k] = s.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[k].get_mpz_t());
        }
        if (g > 1)
            for (auto& e : v)
                if (e != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

void check_terms(const Polynomial& p, const Budget& budget) {
    if (p.size() > budget.max_terms) throw ResourceError("term cap exceeded in fraction-free elimination");
}

// Forward Bareiss sweep; returns the rank and, through `sign`, the row-swap parity.
std::size_t bareiss_sweep(PolyGrid& a, const VarTablePtr& ctx, const Budget& budget, int& sign,
                          bool square_stop) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Polynomial prev = Polynomial::constant(ctx, 1);
    std::size_t rank = 0;
    sign = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        // smallest nonzero pivot keeps intermediates short
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!a[r][c].is_zero() && (piv == rows || a[r][c].size() < a[piv][c].size())) piv = r;
        if (piv == rows) {
            if (square_stop) return rank;
            continue;
        }
        if (piv != rank) {
            std::swap(a[piv], a[rank]);
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                Polynomial t = a[rank][c] * a[r][k];
                if (!a[r][c].is_zero() && !a[rank][k].is_zero()) t -= a[r][c] * a[rank][k];
                if (!t.is_zero()) {
                    auto q = exact_divide(t, prev);
                    if (!q) throw Error("internal: Bareiss division not exact");
                    t = std::move(*q);
                }
                check_terms(t, budget);
                a[r][k] = std::move(t);
            }
            a[r][c] = Polynomial(ctx);
            budget.check_time("Bareiss elimination");
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace

Polynomial bareiss_determinant(PolyGrid g, const VarTablePtr& ctx, const Budget& budget) {
    const std::size_t n = g.size();
    for (const auto& row : g)
        if (row.size() != n) throw DomainError("determinant of a non-square grid");
    if (n == 0) return Polynomial::constant(ctx, 1);
    int sign = 1;
    std::size_t rank = bareiss_sweep(g, ctx, budget, sign, true);
    if (rank < n) return Polynomial(ctx);
    Polynomial d = g[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

std::size_t bareiss_rank(PolyGrid g, const VarTablePtr& ctx, const Budget& budget) {
    int sign = 1;
    return bareiss_sweep(g, ctx, budget, sign, false);
}

}  // namespace detlab
