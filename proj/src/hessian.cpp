#include "detlab/hessian.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "detlab/linalg.hpp"
#include "detlab/syzygy.hpp"

namespace detlab {

namespace {

std::vector<Polynomial> gradient_of(const Polynomial& f) {
    std::vector<Polynomial> g;
    g.reserve(f.nvars());
    for (std::size_t v = 0; v < f.nvars(); ++v) g.push_back(derivative(f, v));
    return g;
}

std::vector<mpq_class> integer_point(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-97, 97);
    std::vector<mpq_class> p(n);
    for (auto& x : p) x = d(rng);
    return p;
}

// Ordinals of the named cells (i, j); every cell must be a variable of the table.
std::vector<std::size_t> ordinals(const VarTable& vt, const std::vector<std::pair<int, int>>& cells) {
    std::vector<std::size_t> out;
    for (auto [i, j] : cells) out.push_back(vt.index(i, j));
    return out;
}

std::string grid_entry_witness(const char* block, std::size_t a, std::size_t b, const VarTable& vt,
                               const Polynomial& e) {
    return std::string(block) + " entry (" + vt.name(a) + ", " + vt.name(b) + ") = " + e.to_string();
}

// Kills the variables outside `keep` in every entry of the Hessian over `X`, then
// checks the block shape: the keep x keep block equals sign * Hess(g), the mixed
// blocks vanish and the rest is a monomial permutation matrix.
CheckRecord specialization_check(const std::string& tag, const Polynomial& f, const std::vector<std::size_t>& X,
                                 const std::vector<std::size_t>& keep, const Polynomial& g) {
    CheckRecord rec;
    rec.tag = tag;
    rec.certification = Certification::Exact;
    const VarTablePtr& ctx = f.context();
    const VarTable& vt = *ctx;
    std::map<std::size_t, Polynomial> kill;
    std::set<std::size_t> keep_set(keep.begin(), keep.end());
    for (std::size_t v = 0; v < vt.size(); ++v)
        if (!keep_set.count(v)) kill.emplace(v, Polynomial(ctx));

    auto grads = gradient_of(f);
    std::vector<std::size_t> rest;
    for (std::size_t v : X)
        if (!keep_set.count(v)) rest.push_back(v);

    auto spec = [&](std::size_t a, std::size_t b) { return substitute(derivative(grads[a], b), kill); };

    std::vector<std::string> bad;
    // M0 against the Hessian of g, up to one global sign
    PolyGrid M0, G0;
    for (std::size_t a : keep) {
        std::vector<Polynomial> row, grow;
        for (std::size_t b : keep) {
            row.push_back(spec(a, b));
            grow.push_back(derivative(derivative(g, a), b));
        }
        M0.push_back(std::move(row));
        G0.push_back(std::move(grow));
    }
    int sign = 0;
    for (int s : {1, -1}) {
        bool eq = true;
        for (std::size_t i = 0; i < keep.size() && eq; ++i)
            for (std::size_t j = 0; j < keep.size() && eq; ++j) eq = M0[i][j] == G0[i][j] * mpq_class(s);
        if (eq) {
            sign = s;
            break;
        }
    }
    if (!sign) bad.push_back("M0 is not +/- the Hessian of " + g.to_string());

    for (std::size_t a : keep)
        for (std::size_t b : rest) {
            Polynomial e1 = spec(a, b);
            if (!e1.is_zero()) bad.push_back(grid_entry_witness("N", a, b, vt, e1));
            Polynomial e2 = spec(b, a);
            if (!e2.is_zero()) bad.push_back(grid_entry_witness("P", b, a, vt, e2));
        }

    // M1: one nonzero entry per row and column
    std::vector<long> perm(rest.size(), -1);
    std::vector<int> col_hits(rest.size(), 0);
    Polynomial det1 = Polynomial::constant(ctx, 1);
    bool perm_ok = true;
    for (std::size_t a = 0; a < rest.size(); ++a) {
        int hits = 0;
        for (std::size_t b = 0; b < rest.size(); ++b) {
            Polynomial e = spec(rest[a], rest[b]);
            if (e.is_zero()) continue;
            ++hits;
            ++col_hits[b];
            perm[a] = static_cast<long>(b);
            det1 *= e;
        }
        if (hits != 1) {
            perm_ok = false;
            bad.push_back("M1 row " + vt.name(rest[a]) + " has " + std::to_string(hits) + " nonzero entries");
        }
    }
    for (std::size_t b = 0; b < rest.size() && perm_ok; ++b)
        if (col_hits[b] != 1) {
            perm_ok = false;
            bad.push_back("M1 column " + vt.name(rest[b]) + " has " + std::to_string(col_hits[b]) + " nonzero entries");
        }
    if (perm_ok) {
        std::vector<long> p = perm;
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        if (inv % 2) det1 = -det1;
    }

    Polynomial det0 = determinant(M0, ctx);
    if (det0.is_zero()) bad.push_back("det(M0) = 0");

    rec.values["variables"] = X.size();
    rec.values["kept"] = keep.size();
    rec.values["det_M0"] = det0.to_string();
    if (perm_ok) rec.values["det_M1"] = det1.to_string();
    if (sign) rec.values["M0_sign"] = sign;
    if (bad.empty()) {
        rec.status = Status::Pass;
        rec.values["rank_lower_bound"] = X.size();
    } else {
        rec.status = Status::Fail;
        for (auto& w : bad) rec.witnesses.push_back(truncate_witness(w));
    }
    return rec;
}

std::size_t binom2(int r) { return static_cast<std::size_t>(r) * (r + 1) / 2; }

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 1);
    if (k > n) return out;
    for (;;) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

void push_distinct(std::vector<Polynomial>& out, Polynomial p) {
    if (p.is_zero()) return;
    for (const auto& q : out)
        if (q == p || q == -p) return;
    out.push_back(std::move(p));
}

}  // namespace

HessianRecord hessian(const Polynomial& f) {
    const std::size_t n = f.nvars();
    auto grads = gradient_of(f);
    PolyGrid H(n, std::vector<Polynomial>(n, Polynomial(f.context())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            H[i][j] = derivative(grads[i], j);
            H[j][i] = H[i][j];
        }
    return {std::move(H), std::nullopt, std::nullopt};
}

PolyGrid jacobian(const std::vector<Polynomial>& gens, const VarTablePtr& ctx) {
    PolyGrid J;
    for (const auto& g : gens) {
        std::vector<Polynomial> row;
        for (std::size_t v = 0; v < ctx->size(); ++v) row.push_back(g.is_zero() ? Polynomial(ctx) : derivative(g, v));
        J.push_back(std::move(row));
    }
    return J;
}

RankCertificate hessian_rank(const Polynomial& f, RankOptions opts, const std::vector<Polynomial>& relations,
                             bool relations_checked) {
    const std::size_t n = f.nvars();
    PolyGrid H = hessian(f).matrix;
    opts.exact = true;
    opts.upper_bound = n;
    opts.upper_bound_reason = "the number of variables";
    if (!relations.empty()) {
        auto grads = gradient_of(f);
        for (const auto& g : relations) {
            if (g.nvars() != n) throw DomainError("hessian_rank: relation over a table of the wrong size");
            if (!relations_checked && !compose(g, grads, f.context()).is_zero())
                throw DomainError("hessian_rank: relation does not vanish on the gradient: " + g.to_string());
        }
        // G(grad f) = 0 gives JG(grad f) * H = 0, so rank H <= n - rank JG(grad f(x0)).
        std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
        auto x0 = integer_point(rng, n);
        std::vector<mpq_class> y0;
        for (const auto& g : grads) y0.push_back(evaluate_exact(g, x0));
        std::size_t k = rank_exact(evaluate_grid_exact(jacobian(relations, relations.front().context()), y0));
        opts.upper_bound = n - k;
        opts.upper_bound_reason = std::to_string(relations.size()) + " relations on the gradient (Jacobian rank " +
                                  std::to_string(k) + " at an image point)";
    }
    RankCertificate c = certify_rank(H, opts);
    if (c.exact_lower && c.exact_upper && *c.exact_lower > *c.exact_upper)
        throw Error("internal: Hessian rank lower bound exceeds the proven upper bound");
    return c;
}

CheckRecord diag_specialization_check(int m) {
    if (m < 3) throw SpecError("diag_specialization_check needs m >= 3");
    SymbolicMatrix M = build(MatrixSpec::cloned(m));
    Polynomial f = determinant(M);
    const VarTablePtr& ctx = M.vars();
    std::vector<std::pair<int, int>> diag;
    for (int i = 1; i <= m - 1; ++i) diag.push_back({i, i});
    auto keep = ordinals(*ctx, diag);
    Polynomial g = Polynomial::constant(ctx, 1);
    for (int i = 1; i <= m - 2; ++i) g *= Polynomial::variable(ctx, keep[i - 1]);
    g *= Polynomial::variable(ctx, keep.back()).pow(2);
    std::vector<std::size_t> X(ctx->size());
    std::iota(X.begin(), X.end(), 0);
    CheckRecord rec = specialization_check("hessian_full", f, X, keep, g);
    rec.values["m"] = m;
    return rec;
}

CheckRecord antidiag_specialization_check(int m, int r) {
    SymbolicMatrix M = build(MatrixSpec::zeros(m, r));
    Polynomial f = determinant(M);
    const VarTablePtr& ctx = M.vars();
    std::vector<std::pair<int, int>> anti, xcells;
    for (int i = 1; i <= m; ++i) anti.push_back({i, m + 1 - i});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (i + j >= r + 2 && i + j <= 2 * m - r) xcells.push_back({i, j});
    auto keep = ordinals(*ctx, anti);
    auto X = ordinals(*ctx, xcells);
    Polynomial g = Polynomial::constant(ctx, 1);
    for (std::size_t v : keep) g *= Polynomial::variable(ctx, v);
    CheckRecord rec = specialization_check("hessian_rank", f, X, keep, g);
    rec.values["m"] = m;
    rec.values["r"] = r;
    return rec;
}

unsigned factor_multiplicity(const Polynomial& h, const Polynomial& f) {
    if (f.is_zero()) throw DomainError("factor_multiplicity: f = 0");
    if (f.is_constant()) throw DomainError("factor_multiplicity: f is a constant");
    if (h.is_zero()) throw DomainError("factor_multiplicity: h = 0 has unbounded multiplicity");
    unsigned k = 0;
    Polynomial cur = h;
    for (;;) {
        auto q = exact_divide(cur, f);
        if (!q) return k;
        ++k;
        cur = std::move(*q);
    }
}

Polynomial hessian_determinant(const Polynomial& f, const Budget& budget) {
    return bareiss_determinant(hessian(f).matrix, f.context(), budget);
}

LineMultiplicity line_restricted_multiplicity(const Polynomial& f, std::uint64_t seed,
                                              const std::optional<Polynomial>& reference) {
    const std::size_t n = f.nvars();
    auto tctx = std::make_shared<const VarTable>(std::vector<Variable>{Variable{"t", 0, 0}});
    Polynomial t = Polynomial::variable(tctx, 0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-97, 97);
    LineMultiplicity out;
    PolyGrid H = hessian(f).matrix;
    for (int attempt = 0; attempt < 8; ++attempt) {
        out.a.assign(n, 0);
        out.b.assign(n, 0);
        std::vector<Polynomial> images;
        for (std::size_t v = 0; v < n; ++v) {
            out.a[v] = d(rng);
            out.b[v] = d(rng);
            images.push_back(Polynomial::constant(tctx, out.a[v]) + t * mpq_class(out.b[v]));
        }
        Polynomial ft = compose(f, images, tctx);
        if (ft.is_constant()) continue;
        PolyGrid Ht;
        for (const auto& row : H) {
            std::vector<Polynomial> r;
            for (const auto& e : row) r.push_back(compose(e, images, tctx));
            Ht.push_back(std::move(r));
        }
        Polynomial ht = bareiss_determinant(std::move(Ht), tctx);
        if (ht.is_zero()) {
            out.multiplicity = 0;
            out.h_degree = 0;
            out.residual = ht;
            return out;
        }
        out.h_degree = ht.total_degree();
        out.multiplicity = factor_multiplicity(ht, ft);
        Polynomial res = ht;
        for (unsigned k = 0; k < out.multiplicity; ++k) res = *exact_divide(res, ft);
        out.residual = res;
        if (reference) {
            Polynomial rt = compose(*reference, images, tctx);
            if (rt.is_zero() || res.is_zero()) {
                out.residual_matches = rt.is_zero() && res.is_zero();
            } else {
                mpq_class a = leading_term(res, MonomialOrder::degrevlex()).coeff;
                mpq_class b = leading_term(rt, MonomialOrder::degrevlex()).coeff;
                out.residual_matches = res * b == rt * a;
            }
        }
        return out;
    }
    throw DomainError("line_restricted_multiplicity: f is constant along every sampled line");
}

std::string to_string(Homaloidal h) {
    switch (h) {
        case Homaloidal::Yes: return "yes";
        case Homaloidal::No: return "no";
        default: return "undetermined";
    }
}

namespace {

bool settled(const RankCertificate& c) {
    if (c.certification == Certification::Exact) return true;
    std::size_t hits = 0;
    for (const auto& t : c.trials) hits += t.rank == c.rank;
    return hits >= 2;
}

}  // namespace

PolarProfile homaloidal_check(const Polynomial& f, const RankOptions& opts, const std::vector<Polynomial>& relations,
                              bool relations_checked) {
    PolarProfile P;
    const std::size_t n = f.nvars();
    P.hessian = hessian_rank(f, opts, relations, relations_checked);
    std::vector<Polynomial> partials;
    for (auto& g : gradient_of(f)) push_distinct(partials, g.primitive());
    P.generators = partials.size();
    if (P.hessian.rank < n) {
        P.homaloidal = Homaloidal::No;
        P.reason = "Hessian rank " + std::to_string(P.hessian.rank) + " < " + std::to_string(n);
        return P;
    }
    try {
        LinearSyzygySpace space = linear_syzygies(partials);
        P.linear = linear_rank(space, RankOptions{opts.seed + 1, opts.primes, opts.max_trials, true, {}, {}});
    } catch (const DomainError& e) {
        P.reason = std::string("linear rank unavailable: ") + e.what();
        return P;
    }
    if (P.linear->rank + 1 == P.generators && settled(P.hessian) && settled(*P.linear)) {
        P.homaloidal = Homaloidal::Yes;
        P.reason = "full Hessian rank and maximal linear rank " + std::to_string(P.linear->rank);
    } else {
        P.reason = "full Hessian rank but linear rank " + std::to_string(P.linear->rank) + " < " +
                   std::to_string(P.generators - 1);
    }
    return P;
}

PolarProfile homaloidal_check(const SymbolicMatrix& M, const RankOptions& opts) {
    if (M.spec().family != Family::Zeros) return homaloidal_check(determinant(M), opts);
    if (!polar_ladder_residuals(M).empty()) throw Error("internal: polar ladder does not vanish on the gradient");
    return homaloidal_check(determinant(M), opts, polar_ladder(M), true);
}

Polynomial corner_cofactor_difference(const VarTablePtr& y, int m) {
    PolyGrid Y(m, std::vector<Polynomial>(m, Polynomial(y)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) Y[i - 1][j - 1] = Polynomial::variable(y, y->index(i, j, "y"));
    auto t = cofactor_table(Y, y);
    return t.cof[m - 1][m - 1] - t.cof[m - 2][m - 2];
}

namespace {

VarTablePtr generic_y(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) pairs.push_back({i, j});
    return VarTable::from_pairs(pairs, "y");
}

}  // namespace

ImageEquation minors_image_equation(const SymbolicMatrix& M, const Budget& budget) {
    const int m = M.size();
    const VarTablePtr& ctx = M.vars();
    ImageEquation out;
    out.y = generic_y(m);
    auto cofs = submaximal_minors(M);
    RankOptions ro;
    ro.exact = true;
    ro.upper_bound = cofs.size();
    ro.upper_bound_reason = "the number of cofactors";
    out.jacobian_rank = certify_rank(jacobian(cofs, ctx), ro).rank;
    if (out.jacobian_rank == cofs.size()) return out;  // dominant map: no equation
    if (m > 3) out.warning = "elimination for m > 3 is beyond the desk budget and may be cut off";

    std::vector<Variable> yv = out.y->vars();
    VarTablePtr ext = extend_table(ctx, yv);
    std::vector<Polynomial> gens;
    std::vector<std::size_t> kill(ctx->size());
    std::iota(kill.begin(), kill.end(), 0);
    std::vector<unsigned> w(ext->size(), 1);
    for (std::size_t k = 0; k < cofs.size(); ++k) {
        std::size_t yk = ctx->size() + k;
        w[yk] = static_cast<unsigned>(m - 1);
        gens.push_back(Polynomial::variable(ext, yk) - transfer(cofs[k], ext));
    }
    Ideal elim = eliminate(Ideal(ext, std::move(gens)), kill, budget, w);
    for (const auto& g : elim.gens()) out.eliminated.push_back(transfer(g, out.y));
    if (out.eliminated.size() == 1) out.equation = out.eliminated.front();
    return out;
}

CheckRecord image_substitution_check(const SymbolicMatrix& M) {
    const int m = M.size();
    CheckRecord rec;
    rec.tag = "image_equation";
    rec.certification = Certification::Exact;
    VarTablePtr y = generic_y(m);
    Polynomial D = corner_cofactor_difference(y, m);
    Polynomial img = compose(D, submaximal_minors(M), M.vars());
    rec.values["equation"] = D.to_string();
    if (img.is_zero()) {
        rec.status = Status::Pass;
    } else {
        rec.status = Status::Fail;
        rec.witnesses.push_back(truncate_witness("residual " + img.to_string()));
    }
    return rec;
}

DualLadder dual_ladder(const SymbolicMatrix& M) {
    const int m = M.size();
    const Family fam = M.spec().family;
    if (fam != Family::Cloned && fam != Family::Zeros) throw SpecError("dual_ladder: cloned or zeros family only");
    const VarTablePtr& ctx = M.vars();
    DualLadder L;
    std::vector<Variable> yv;
    for (const auto& v : ctx->vars()) yv.push_back(Variable{"y", v.row, v.col});
    L.y = std::make_shared<const VarTable>(yv);
    Polynomial f = determinant(M);
    for (std::size_t v = 0; v < ctx->size(); ++v) L.images.push_back(derivative(f, v));

    // display column -> matrix column
    std::vector<int> cols(m);
    std::iota(cols.begin(), cols.end(), 1);
    if (fam == Family::Cloned) std::swap(cols[m - 2], cols[m - 1]);
    L.cells.assign(m, std::vector<std::optional<std::size_t>>(m));
    for (int i = 1; i <= m; ++i)
        for (int p = 1; p <= m; ++p) {
            int c = cols[p - 1];
            bool inside;
            if (fam == Family::Cloned)
                inside = i <= m - 2 || (i == m - 1 && c != m - 1) || (i == m && c <= m - 2);
            else
                inside = i + c <= 2 * m - M.spec().r;
            if (inside) L.cells[i - 1][p - 1] = L.y->index(i, c, "y");
        }
    auto Y = [&](std::size_t v) { return Polynomial::variable(L.y, v); };
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            for (int p = 0; p < m; ++p)
                for (int q = p + 1; q < m; ++q) {
                    const auto &a = L.cells[i][p], &b = L.cells[i][q], &c = L.cells[k][p], &d = L.cells[k][q];
                    if (a && b && c && d) L.minors.push_back(Y(*a) * Y(*d) - Y(*b) * Y(*c));
                }
    if (fam == Family::Cloned) {
        auto y = [&](int i, int j) { return Y(L.y->index(i, j, "y")); };
        L.extra.push_back(y(1, 1) * y(m, m - 1) - y(1, m - 1) * y(m, 1));
        L.extra.push_back(y(1, 1) * y(m - 1, m - 1) - y(m - 1, 1) * y(1, m - 1) - y(m, 1) * y(1, m));
    }
    return L;
}

CheckRecord dual_ladder_check(const SymbolicMatrix& M, bool with_codim, const Budget& budget) {
    const int m = M.size();
    CheckRecord rec;
    rec.tag = with_codim ? "dual_ladder_codim" : "dual_ladder_vanish";
    rec.certification = Certification::Exact;
    DualLadder L = dual_ladder(M);
    Polynomial f = determinant(M);
    auto check_all = [&](const std::vector<Polynomial>& ps, const char* what) {
        for (const auto& p : ps) {
            Polynomial q = compose(p, L.images, M.vars());
            if (!exact_divide(q, f))
                rec.witnesses.push_back(truncate_witness(std::string(what) + " " + p.to_string() +
                                                         " pulls back to a non-multiple of f"));
        }
    };
    check_all(L.minors, "minor");
    check_all(L.extra, "quadric");
    rec.values["minors"] = L.minors.size();
    rec.values["quadrics"] = L.extra.size();
    bool ok = rec.witnesses.empty();
    if (with_codim) {
        const std::size_t ny = L.y->size();
        std::size_t codim = ny - dimension(Ideal(L.y, L.minors), budget);
        std::size_t expected;
        if (M.spec().family == Family::Zeros) {
            expected = static_cast<std::size_t>((m - 1) * (m - 1)) - binom2(M.spec().r);
        } else {
            expected = static_cast<std::size_t>(m * (m - 2) - 2);
            std::vector<Polynomial> all = L.minors;
            all.insert(all.end(), L.extra.begin(), L.extra.end());
            rec.values["codim_with_quadrics"] = ny - dimension(Ideal(L.y, all), budget);
        }
        rec.values["codim"] = codim;
        rec.values["expected_codim"] = expected;
        if (codim != expected) {
            ok = false;
            rec.witnesses.push_back("ladder codimension " + std::to_string(codim) + ", expected " +
                                    std::to_string(expected));
        }
    }
    rec.status = ok ? Status::Pass : Status::Fail;
    return rec;
}

namespace {

// Row tuples of the polar ladder with their column count.
std::vector<std::pair<std::vector<int>, int>> polar_blocks(const SymbolicMatrix& M) {
    if (M.spec().family != Family::Zeros) throw SpecError("polar_ladder: zeros family only");
    const int m = M.size(), s = m - M.spec().r;
    std::vector<std::pair<std::vector<int>, int>> out;
    for (auto& rows : combinations(m - 1, s)) {
        int c = m - rows.back() + s - 1;
        out.push_back({std::move(rows), c});
    }
    return out;
}

}  // namespace

std::vector<Polynomial> polar_ladder(const SymbolicMatrix& M) {
    const int s = M.size() - M.spec().r;
    std::vector<Polynomial> out;
    for (const auto& [rows, c] : polar_blocks(M)) {
        PolyGrid sub;
        for (int i : rows) {
            std::vector<Polynomial> row;
            for (int j = 1; j <= c; ++j) row.push_back(M.at(i, j));
            sub.push_back(std::move(row));
        }
        for (auto& p : minors(sub, s, M.vars())) push_distinct(out, std::move(p));
    }
    return out;
}

std::vector<std::string> polar_ladder_residuals(const SymbolicMatrix& M) {
    const int s = M.size() - M.spec().r;
    const VarTablePtr& ctx = M.vars();
    Polynomial f = determinant(M);
    std::vector<std::string> out;
    // minors of the block with x_{i,j} replaced by df/dx_{i,j}
    for (const auto& [rows, c] : polar_blocks(M)) {
        PolyGrid sub;
        for (int i : rows) {
            std::vector<Polynomial> row;
            for (int j = 1; j <= c; ++j) row.push_back(derivative(f, ctx->index(i, j)));
            sub.push_back(std::move(row));
        }
        for (const auto& p : minors(sub, s, ctx)) {
            std::string rs;
            for (int i : rows) rs += (rs.empty() ? "" : ",") + std::to_string(i);
            out.push_back(truncate_witness("rows {" + rs + "}, columns 1.." + std::to_string(c) +
                                           ": pulled-back minor " + p.to_string()));
        }
    }
    return out;
}

CheckRecord polar_ladder_check(const SymbolicMatrix& M, bool with_codim, const Budget& budget) {
    CheckRecord rec;
    rec.tag = with_codim ? "ladder_polar_codim" : "ladder_polar_vanish";
    rec.certification = Certification::Exact;
    auto gens = polar_ladder(M);
    rec.witnesses = polar_ladder_residuals(M);
    rec.values["generators"] = gens.size();
    bool ok = rec.witnesses.empty();
    if (with_codim) {
        std::size_t codim = M.vars()->size() - dimension(Ideal(M.vars(), gens), budget);
        std::size_t expected = binom2(M.spec().r);
        rec.values["codim"] = codim;
        rec.values["expected_codim"] = expected;
        if (codim != expected) {
            ok = false;
            rec.witnesses.push_back("ladder codimension " + std::to_string(codim) + ", expected " +
                                    std::to_string(expected));
        }
    }
    rec.status = ok ? Status::Pass : Status::Fail;
    return rec;
}

}  // namespace detlab
