#include "detlab/syzygy.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "detlab/linalg.hpp"

namespace detlab {

// ---------------------------------------------------------------- LinearFormMatrix

LinearFormMatrix::LinearFormMatrix(VarTablePtr vars, PolyGrid entries)
    : vars_(std::move(vars)), entries_(std::move(entries)) {
    for (const auto& row : entries_) {
        if (row.size() != cols()) throw DomainError("ragged linear-form matrix");
        for (const auto& e : row)
            for (const auto& t : e.terms())
                if (t.mono.degree() != 1) throw DomainError("entry is not a linear form: " + e.to_string());
    }
}

std::vector<Polynomial> LinearFormMatrix::column(std::size_t c) const {
    std::vector<Polynomial> out;
    out.reserve(rows());
    for (const auto& row : entries_) out.push_back(row[c]);
    return out;
}

LinearFormMatrix LinearFormMatrix::without_row(std::size_t r) const {
    PolyGrid g;
    for (std::size_t i = 0; i < rows(); ++i)
        if (i != r) g.push_back(entries_[i]);
    return LinearFormMatrix(vars_, std::move(g));
}

nlohmann::json LinearFormMatrix::to_json() const { return grid_to_json(entries_); }

LinearFormMatrix LinearSyzygySpace::as_matrix() const {
    PolyGrid g(ngens, std::vector<Polynomial>(generators.size(), Polynomial(vars)));
    for (std::size_t k = 0; k < generators.size(); ++k)
        for (std::size_t i = 0; i < ngens; ++i) g[i][k] = generators[k][i];
    return LinearFormMatrix(vars, std::move(g));
}

// ---------------------------------------------------------------- exact solver

namespace {

// Integer multiplier making every coefficient of p an integer.
mpz_class denominator_lcm(const Polynomial& p) {
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
}

// Coefficient vector (length n * N) of a column of linear forms.
SparseRow linear_coordinates(const std::vector<Polynomial>& column, std::size_t n) {
    SparseRow row;
    mpz_class l = 1;
    for (const auto& p : column) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(p).get_mpz_t());
    for (std::size_t g = 0; g < column.size(); ++g) {
        std::vector<std::pair<std::uint32_t, mpz_class>> entries;
        for (const auto& t : column[g].terms()) {
            std::size_t v = 0;
            while (!t.mono[v]) ++v;
            mpq_class s = t.coeff * l;
            entries.emplace_back(static_cast<std::uint32_t>(g * n + v), s.get_num());
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& e : entries) row.push_back(std::move(e));
    }
    return row;
}

}  // namespace

LinearSyzygySpace linear_syzygies(const std::vector<Polynomial>& gens, const Budget& budget) {
    if (gens.empty()) throw DomainError("linear_syzygies: no generators");
    VarTablePtr ctx = gens.front().context();
    std::optional<unsigned> degree;
    for (const auto& g : gens) {
        if (!same_context(g.context(), ctx)) throw ContextError("generators over different tables");
        if (g.is_zero()) throw DomainError("linear_syzygies: zero generator");
        if (!g.is_homogeneous()) throw DomainError("linear_syzygies: non-homogeneous generator");
        unsigned d = g.total_degree();
        if (degree && *degree != d) throw DomainError("linear_syzygies: mixed degrees");
        degree = d;
    }
    if (*degree < 1) throw DomainError("linear_syzygies: generators of degree 0");

    const std::size_t n = ctx->size();
    const std::size_t N = gens.size();
    // Unknown g*n+v is the coefficient of x_v in the form multiplying gens[g];
    // equation rows are indexed by the degree d+1 monomials x_v * term.
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> eq_index;
    std::vector<SparseRow> equations;
    std::vector<mpz_class> scale(N);
    for (std::size_t g = 0; g < N; ++g) {
        scale[g] = denominator_lcm(gens[g]);
        for (std::size_t v = 0; v < n; ++v) {
            const auto u = static_cast<std::uint32_t>(g * n + v);
            for (const auto& t : gens[g].terms()) {
                if (t.mono[v] == 0xFFFF) throw DomainError("exponent overflow");
                Monomial mono = t.mono;
                mono.set(v, static_cast<Monomial::Exp>(t.mono[v] + 1));
                auto [it, fresh] = eq_index.emplace(std::move(mono), static_cast<std::uint32_t>(equations.size()));
                if (fresh) equations.emplace_back();
                mpq_class c = t.coeff * scale[g];
                equations[it->second].emplace_back(u, c.get_num());
            }
        }
    }
    std::stable_sort(equations.begin(), equations.end(),
                     [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });

    SparseEchelon ech(static_cast<std::uint32_t>(n * N));
    ech.set_budget(&budget);
    for (auto& e : equations) {
        ech.add_row(std::move(e));
        if (ech.rank() == n * N) break;
    }

    LinearSyzygySpace space;
    space.vars = ctx;
    space.ngens = N;
    for (const auto& vec : ech.kernel()) {
        std::vector<Polynomial> rel;
        rel.reserve(N);
        for (std::size_t g = 0; g < N; ++g) {
            std::vector<Term> terms;
            for (std::size_t v = 0; v < n; ++v) {
                const mpz_class& c = vec[g * n + v];
                if (c != 0) terms.push_back({Monomial::variable(n, v), mpq_class(c * scale[g])});
            }
            rel.push_back(Polynomial::from_terms(ctx, std::move(terms)));
        }
        space.generators.push_back(std::move(rel));
    }
    return space;
}

RankCertificate linear_rank(const LinearSyzygySpace& space, RankOptions opts) {
    if (space.generators.empty()) {
        RankCertificate c;
        c.certification = Certification::Exact;
        c.method = "empty relation space";
        return c;
    }
    opts.upper_bound = space.ngens - 1;
    opts.upper_bound_reason = "the bound #generators - 1 (relations are orthogonal to the generator vector)";
    return certify_rank(space.as_matrix().entries(), opts);
}

bool in_span(const LinearSyzygySpace& space, const std::vector<Polynomial>& column) {
    if (column.size() != space.ngens) throw DomainError("in_span: length mismatch");
    const std::size_t n = space.vars->size();
    SparseEchelon ech(static_cast<std::uint32_t>(n * space.ngens));
    for (const auto& rel : space.generators) ech.add_row(linear_coordinates(rel, n));
    auto row = linear_coordinates(column, n);
    if (row.empty()) return true;
    return !ech.add_row(std::move(row));
}

// ---------------------------------------------------------------- block builders

namespace {

class BlockBuilder {
public:
    BlockBuilder(const SymbolicMatrix& M, std::vector<std::pair<int, int>> order) : M_(M) {
        const auto& vars = *M.vars();
        for (std::size_t k = 0; k < order.size(); ++k) {
            auto [i, j] = order[k];
            std::size_t v = vars.index(i, j);
            row_of_[{i, j}] = k;
            generator_order_.push_back(v);
            row_labels_.push_back("f_" + std::to_string(i) + "_" + std::to_string(j));
        }
        if (generator_order_.size() != vars.size()) throw Error("internal: generator ordering incomplete");
    }

    void column(const std::string& block) {
        cols_.emplace_back();
        names_.push_back(block);
    }

    // Adds coeff * (matrix entry (ei, ej)) on generator row (gi, gj).
    void add(int gi, int gj, int ei, int ej, long coeff = 1) {
        const Polynomial& e = M_.at(ei, ej);
        if (e.is_zero()) return;
        auto it = row_of_.find({gi, gj});
        if (it == row_of_.end())
            throw Error("internal: no generator f_" + std::to_string(gi) + "_" + std::to_string(gj));
        auto& cell = cols_.back()[it->second];
        cell = cell.context() ? cell + e * mpq_class(coeff) : e * mpq_class(coeff);
    }

    SyzygyBlocks finish() const {
        const auto& ctx = M_.vars();
        PolyGrid g(generator_order_.size(), std::vector<Polynomial>(cols_.size(), Polynomial(ctx)));
        for (std::size_t c = 0; c < cols_.size(); ++c)
            for (const auto& [r, p] : cols_[c]) g[r][c] = p;
        return SyzygyBlocks{LinearFormMatrix(ctx, std::move(g)), generator_order_, row_labels_, names_};
    }

private:
    const SymbolicMatrix& M_;
    std::map<std::pair<int, int>, std::size_t> row_of_;
    std::vector<std::size_t> generator_order_;
    std::vector<std::string> row_labels_;
    std::vector<std::map<std::size_t, Polynomial>> cols_;
    std::vector<std::string> names_;
};

}  // namespace

SyzygyBlocks build_cloned_blocks(int m) {
    if (m < 3) throw SpecError("cloned syzygy blocks need m >= 3");
    SymbolicMatrix M = build(MatrixSpec::cloned(m));

    // rows 1..m-2 in reading order, then the two bottom rows column by column,
    // then x_{m-1,m}
    std::vector<std::pair<int, int>> order;
    for (int i = 1; i <= m - 2; ++i)
        for (int j = 1; j <= m; ++j) order.emplace_back(i, j);
    for (int c = 1; c <= m - 1; ++c) {
        order.emplace_back(m - 1, c);
        order.emplace_back(m, c);
    }
    order.emplace_back(m - 1, m);
    BlockBuilder b(M, order);

    // Cofactor row k against the other rows of the matrix; in place of row k
    // itself (k >= 2) the difference of the expansions along rows k-1 and k.
    for (int k = 1; k <= m - 2; ++k) {
        const std::string name = "phi_" + std::to_string(k);
        for (int i = 1; i <= m; ++i) {
            if (i == k && k == 1) continue;
            b.column(name);
            if (i == k) {
                for (int j = 1; j <= m; ++j) {
                    b.add(k - 1, j, k - 1, j, 1);
                    b.add(k, j, k, j, -1);
                }
            } else {
                for (int j = 1; j <= m; ++j) b.add(k, j, i, j);
            }
        }
    }
    // Cofactor column c against matrix columns c+1 and c+2; the last pair uses
    // column m, whose bottom entry is the cloned variable.
    for (int c = 1; c <= m - 2; ++c) {
        const std::string name = "pair_" + std::to_string(c);
        for (int k = c + 1; k <= c + 2; ++k) {
            b.column(name);
            for (int i = 1; i <= m; ++i) b.add(i, c, i, k);
        }
    }
    // Corner: each relation pairs two expansions so that the two cofactors on
    // the cloned slots only occur through their sum f_{m-1,m-1}.
    b.column("corner");
    for (int j = 1; j <= m - 2; ++j) b.add(m, j, m - 1, j);
    b.add(m, m - 1, m - 1, m - 1, 2);
    b.add(m - 1, m - 1, m - 1, m);
    for (int i = 1; i <= m - 2; ++i) b.add(i, m - 1, i, m);

    b.column("corner");
    for (int i = 1; i <= m - 2; ++i) b.add(i, m, i, m - 1);
    b.add(m - 1, m, m - 1, m - 1, 2);
    for (int j = 1; j <= m - 2; ++j) b.add(m - 1, j, m, j);
    b.add(m - 1, m - 1, m, m - 1);

    b.column("corner");
    for (int j = 1; j <= m; ++j)
        if (j != m - 1) b.add(m - 1, j, m - 1, j);
    b.add(m - 1, m - 1, m - 1, m - 1);
    for (int j = 1; j <= m - 1; ++j) b.add(m, j, m, j);
    for (int j = 1; j <= m; ++j) b.add(m - 2, j, m - 2, j, -2);

    return b.finish();
}

SyzygyBlocks build_zeros_blocks(int m, int r) {
    SymbolicMatrix M = build(MatrixSpec::zeros(m, r));  // validates r
    auto nonzero = [&](int i, int j) { return i + j <= 2 * m - r; };

    // upper rows 1..m-r in reading order, then the lower rows column by column
    std::vector<std::pair<int, int>> order;
    for (int i = 1; i <= m - r; ++i)
        for (int j = 1; j <= m; ++j) order.emplace_back(i, j);
    for (int c = 1; c <= m - 1; ++c)
        for (int i = m - r + 1; i <= m; ++i)
            if (nonzero(i, c)) order.emplace_back(i, c);
    BlockBuilder b(M, order);

    // Cofactor rows of the upper block against every other matrix row.
    for (int k = 1; k <= m - r; ++k) {
        const std::string name = "phi_" + std::to_string(k);
        for (int i = 1; i <= m; ++i) {
            if (i == k && k == 1) continue;
            b.column(name);
            if (i == k) {
                for (int j = 1; j <= m; ++j) {
                    b.add(k - 1, j, k - 1, j, 1);
                    b.add(k, j, k, j, -1);
                }
            } else {
                for (int j = 1; j <= m; ++j) b.add(k, j, i, j);
            }
        }
    }
    // Cofactor column k (k <= m-r) against r other matrix columns; the choice of
    // columns depends on whether r exceeds m-r-1.
    for (int k = 1; k <= m - r; ++k) {
        const std::string name = "col_" + std::to_string(k);
        std::vector<int> partners;
        if (r > m - r - 1) {
            for (int j = 1; j <= m - r; ++j)
                if (j != k) partners.push_back(j);
            for (int l = 1; l <= 2 * r - m + 1; ++l) partners.push_back(m - r + l);
        } else if (k <= r) {
            for (int j = 1; j <= r + 1; ++j)
                if (j != k) partners.push_back(j);
        } else {
            for (int j = 1; j <= r; ++j) partners.push_back(j);
        }
        for (int j : partners) {
            b.column(name);
            for (int i = 1; i <= m; ++i) b.add(i, k, i, j);
        }
    }
    // Cofactor columns m-r+l (l < r): the expansion along that column minus the
    // expansion along row 1, and the column against the later staircase columns.
    for (int l = 1; l <= r - 1; ++l) {
        const std::string name = "stair_" + std::to_string(l);
        const int c = m - r + l;
        b.column(name);
        for (int i = 1; i <= m - l; ++i) b.add(i, c, i, c);
        for (int j = 1; j <= m; ++j) b.add(1, j, 1, j, -1);
        for (int k = l + 1; k <= r - 1; ++k) {
            b.column(name);
            for (int i = 1; i <= m - k; ++i) b.add(i, c, i, m - r + k);
        }
    }
    return b.finish();
}

std::vector<Polynomial> reorder(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& order) {
    std::vector<Polynomial> out;
    out.reserve(order.size());
    for (std::size_t v : order) out.push_back(gens.at(v));
    return out;
}

CheckRecord verify_syzygy(const LinearFormMatrix& S, const std::vector<Polynomial>& gens) {
    if (S.rows() != gens.size())
        throw DomainError("verify_syzygy: matrix has " + std::to_string(S.rows()) + " rows for " +
                          std::to_string(gens.size()) + " generators");
    CheckRecord rec;
    rec.tag = "syzygy_blocks";
    rec.certification = Certification::Exact;
    std::vector<std::size_t> bad;
    for (std::size_t c = 0; c < S.cols(); ++c) {
        Polynomial acc(S.vars());
        for (std::size_t r = 0; r < S.rows(); ++r)
            if (!S(r, c).is_zero()) acc += S(r, c) * gens[r];
        if (!acc.is_zero()) {
            bad.push_back(c);
            rec.witnesses.push_back("column " + std::to_string(c) + " residual " + acc.to_string());
        }
    }
    rec.status = bad.empty() ? Status::Pass : Status::Fail;
    rec.values["columns"] = S.cols();
    rec.values["failing_columns"] = bad;
    return rec;
}

NonsingularResult deleted_row_nonsingular(const LinearFormMatrix& S, std::size_t row, std::uint64_t seed) {
    LinearFormMatrix sq = S.without_row(row);
    if (sq.rows() != sq.cols()) throw DomainError("deleted-row submatrix is not square");
    NonsingularResult res;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-97, 97);
    const std::size_t n = S.vars()->size();
    for (int attempt = 0; attempt < 4 && !res.nonzero; ++attempt) {
        std::vector<mpq_class> point(n);
        for (auto& x : point) x = small(rng);
        res.rank_at_point = std::max(res.rank_at_point, rank_exact(evaluate_grid_exact(sq.entries(), point)));
        res.nonzero = res.rank_at_point == sq.rows();
        ++res.attempts;
    }
    return res;
}

}  // namespace detlab
