#include "detlab/matrix.hpp"

#include <algorithm>
#include <bit>
#include <regex>

namespace detlab {

std::string to_string(Family f) {
    switch (f) {
        case Family::Generic: return "generic";
        case Family::Cloned: return "cloned";
        case Family::Zeros: return "zeros";
        case Family::Custom: return "custom";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "generic") return Family::Generic;
    if (s == "cloned") return Family::Cloned;
    if (s == "zeros") return Family::Zeros;
    if (s == "custom") return Family::Custom;
    throw SpecError("unknown family '" + s + "'");
}

MatrixSpec MatrixSpec::custom(std::vector<std::vector<std::optional<std::pair<int, int>>>> cells) {
    MatrixSpec s;
    s.m = static_cast<int>(cells.size());
    s.family = Family::Custom;
    s.entries = std::move(cells);
    return s;
}

void MatrixSpec::validate() const {
    switch (family) {
        case Family::Generic:
            if (m < 1) throw SpecError("m must be at least 1");
            break;
        case Family::Cloned:
            if (m < 2) throw SpecError("cloned family needs m >= 2");
            break;
        case Family::Zeros:
            if (m < 3) throw SpecError("zeros family needs m >= 3");
            if (r < 1 || r > m - 2)
                throw SpecError("zeros family needs 1 <= r <= m-2 (got r=" + std::to_string(r) +
                                ", m=" + std::to_string(m) + ")");
            break;
        case Family::Custom: {
            if (entries.empty() || entries[0].empty()) throw SpecError("custom spec without entries");
            for (const auto& row : entries)
                if (row.size() != entries[0].size()) throw SpecError("custom spec rows differ in length");
            break;
        }
    }
}

std::vector<std::vector<std::optional<std::pair<int, int>>>> MatrixSpec::cells() const {
    validate();
    if (family == Family::Custom) return entries;
    std::vector<std::vector<std::optional<std::pair<int, int>>>> g(
        m, std::vector<std::optional<std::pair<int, int>>>(m));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (family == Family::Zeros && i + j > 2 * m - r) continue;
            g[i - 1][j - 1] = std::make_pair(i, j);
        }
    if (family == Family::Cloned) g[m - 1][m - 1] = std::make_pair(m - 1, m - 1);
    return g;
}

nlohmann::json MatrixSpec::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["family"] = to_string(family);
    if (family == Family::Zeros) j["r"] = r;
    if (family == Family::Custom) {
        auto rows = nlohmann::json::array();
        for (const auto& row : entries) {
            auto jr = nlohmann::json::array();
            for (const auto& c : row)
                jr.push_back(c ? "x_" + std::to_string(c->first) + "_" + std::to_string(c->second)
                               : std::string("0"));
            rows.push_back(jr);
        }
        j["entries"] = rows;
    }
    return j;
}

MatrixSpec MatrixSpec::from_json(const nlohmann::json& j) {
    MatrixSpec s;
    try {
        s.family = family_from_string(j.at("family").get<std::string>());
        if (j.contains("m")) s.m = j.at("m").get<int>();
        if (j.contains("r")) s.r = j.at("r").get<int>();
        if (s.family == Family::Custom) {
            static const std::regex cell_re(R"(x_(\d+)_(\d+))");
            for (const auto& row : j.at("entries")) {
                std::vector<std::optional<std::pair<int, int>>> cells;
                for (const auto& c : row) {
                    std::string text = c.is_number() ? std::to_string(c.get<int>()) : c.get<std::string>();
                    std::smatch mt;
                    if (text == "0") {
                        cells.emplace_back();
                    } else if (std::regex_match(text, mt, cell_re)) {
                        cells.emplace_back(std::make_pair(std::stoi(mt[1]), std::stoi(mt[2])));
                    } else {
                        throw SpecError("bad custom cell '" + text + "'");
                    }
                }
                s.entries.push_back(std::move(cells));
            }
            s.m = static_cast<int>(s.entries.size());
        }
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("malformed matrix spec: ") + e.what());
    }
    s.validate();
    return s;
}

SymbolicMatrix build(const MatrixSpec& spec) {
    auto cells = spec.cells();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& row : cells)
        for (const auto& c : row)
            if (c) pairs.push_back(*c);
    auto vars = VarTable::from_pairs(pairs);
    PolyGrid grid(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (const auto& c : cells[i])
            grid[i].push_back(c ? Polynomial::variable(vars, vars->index(c->first, c->second))
                                : Polynomial(vars));
    return SymbolicMatrix(spec, vars, std::move(grid));
}

// ---------------------------------------------------------------- determinants

namespace {

using Mask = unsigned;

void check_square(const PolyGrid& g) {
    for (const auto& row : g)
        if (row.size() != g.size()) throw DomainError("determinant of a non-square grid");
    if (g.size() > 20) throw DomainError("grid too large for the subset table");
}

// pre[S] = det(rows 0..|S|-1, columns S)
std::vector<Polynomial> prefix_table(const PolyGrid& g, const VarTablePtr& ctx) {
    const unsigned n = static_cast<unsigned>(g.size());
    std::vector<Polynomial> pre(std::size_t{1} << n, Polynomial(ctx));
    pre[0] = Polynomial::constant(ctx, 1);
    for (Mask S = 1; S < (Mask{1} << n); ++S) {
        unsigned k = std::popcount(S);
        Polynomial acc(ctx);
        for (unsigned c = 0; c < n; ++c) {
            if (!(S & (Mask{1} << c))) continue;
            const Polynomial& e = g[k - 1][c];
            const Polynomial& sub = pre[S & ~(Mask{1} << c)];
            if (e.is_zero() || sub.is_zero()) continue;
            unsigned above = std::popcount(S >> (c + 1));
            Polynomial t = e * sub;
            acc = (above & 1) ? acc - t : acc + t;
        }
        pre[S] = std::move(acc);
    }
    return pre;
}

// suf[S] = det(rows n-|S|..n-1, columns S)
std::vector<Polynomial> suffix_table(const PolyGrid& g, const VarTablePtr& ctx) {
    const unsigned n = static_cast<unsigned>(g.size());
    std::vector<Polynomial> suf(std::size_t{1} << n, Polynomial(ctx));
    suf[0] = Polynomial::constant(ctx, 1);
    for (Mask S = 1; S < (Mask{1} << n); ++S) {
        unsigned k = std::popcount(S);
        Polynomial acc(ctx);
        for (unsigned c = 0; c < n; ++c) {
            if (!(S & (Mask{1} << c))) continue;
            const Polynomial& e = g[n - k][c];
            const Polynomial& sub = suf[S & ~(Mask{1} << c)];
            if (e.is_zero() || sub.is_zero()) continue;
            unsigned below = std::popcount(S & ((Mask{1} << c) - 1));
            Polynomial t = e * sub;
            acc = (below & 1) ? acc - t : acc + t;
        }
        suf[S] = std::move(acc);
    }
    return suf;
}

}  // namespace

Polynomial determinant(const PolyGrid& g, const VarTablePtr& ctx) {
    check_square(g);
    if (g.empty()) return Polynomial::constant(ctx, 1);
    return prefix_table(g, ctx).back();
}

Polynomial determinant(const SymbolicMatrix& M) { return determinant(M.cells(), M.vars()); }

CofactorTable cofactor_table(const PolyGrid& g, const VarTablePtr& ctx) {
    check_square(g);
    const unsigned n = static_cast<unsigned>(g.size());
    CofactorTable out{Polynomial(ctx), PolyGrid(n, std::vector<Polynomial>(n, Polynomial(ctx)))};
    if (n == 0) {
        out.det = Polynomial::constant(ctx, 1);
        return out;
    }
    auto pre = prefix_table(g, ctx);
    auto suf = suffix_table(g, ctx);
    out.det = pre.back();
    const Mask full = (Mask{1} << n) - 1;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            const Mask C = full & ~(Mask{1} << j);
            Polynomial acc(ctx);
            // subsets S of C with |S| = i; top rows take S, bottom rows take C \ S
            for (Mask S = C;; S = (S - 1) & C) {
                if (std::popcount(S) == static_cast<int>(i)) {
                    const Polynomial& a = pre[S];
                    const Polynomial& b = suf[C & ~S];
                    if (!a.is_zero() && !b.is_zero()) {
                        unsigned inv = 0;
                        for (unsigned s = 0; s < n; ++s)
                            if (S & (Mask{1} << s)) inv += std::popcount((C & ~S) & ((Mask{1} << s) - 1));
                        Polynomial t = a * b;
                        acc = (inv & 1) ? acc - t : acc + t;
                    }
                }
                if (S == 0) break;
            }
            out.cof[i][j] = ((i + j) & 1) ? -acc : acc;
        }
    }
    return out;
}

Polynomial cofactor(const SymbolicMatrix& M, int i, int j) {
    if (i < 1 || j < 1 || i > M.rows() || j > M.cols()) throw DomainError("cofactor index out of range");
    PolyGrid sub;
    for (int r = 1; r <= M.rows(); ++r) {
        if (r == i) continue;
        std::vector<Polynomial> row;
        for (int c = 1; c <= M.cols(); ++c)
            if (c != j) row.push_back(M.at(r, c));
        sub.push_back(std::move(row));
    }
    Polynomial d = determinant(sub, M.vars());
    return ((i + j) & 1) ? -d : d;
}

PolyGrid adjugate(const PolyGrid& g, const VarTablePtr& ctx) {
    auto t = cofactor_table(g, ctx);
    const std::size_t n = g.size();
    PolyGrid adj(n, std::vector<Polynomial>(n, Polynomial(ctx)));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) adj[k][l] = t.cof[l][k];
    return adj;
}

PolyGrid adjugate(const SymbolicMatrix& M) { return adjugate(M.cells(), M.vars()); }

PolyGrid grid_multiply(const PolyGrid& a, const PolyGrid& b, const VarTablePtr& ctx) {
    const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    PolyGrid out(n, std::vector<Polynomial>(p, Polynomial(ctx)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw DomainError("grid_multiply: shape mismatch");
        for (std::size_t j = 0; j < p; ++j) {
            Polynomial acc(ctx);
            for (std::size_t t = 0; t < k; ++t)
                if (!a[i][t].is_zero() && !b[t][j].is_zero()) acc += a[i][t] * b[t][j];
            out[i][j] = std::move(acc);
        }
    }
    return out;
}

namespace {

// Variable ordinal carried by a cell, or -1 for zero cells.
long cell_variable(const Polynomial& c) {
    if (c.is_zero()) return -1;
    if (c.size() != 1 || c.terms()[0].coeff != 1 || c.terms()[0].mono.degree() != 1)
        throw DomainError("cell is neither zero nor a single variable");
    const auto& m = c.terms()[0].mono;
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v]) return static_cast<long>(v);
    return -1;
}

}  // namespace

std::vector<Polynomial> gradient_generators(const SymbolicMatrix& M) {
    auto t = cofactor_table(M.cells(), M.vars());
    std::vector<Polynomial> gens(M.vars()->size(), Polynomial(M.vars()));
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) {
            long v = cell_variable(M.cells()[i][j]);
            if (v >= 0) gens[v] += t.cof[i][j];
        }
    return gens;
}

std::vector<Polynomial> submaximal_minors(const SymbolicMatrix& M) {
    if (M.rows() < 2) throw DomainError("submaximal minors need m >= 2");
    auto t = cofactor_table(M.cells(), M.vars());
    std::vector<Polynomial> out;
    for (auto& row : t.cof)
        for (auto& c : row) out.push_back(c);
    return out;
}

namespace {

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<Polynomial> minors(const PolyGrid& g, int k, const VarTablePtr& ctx) {
    const int rows = static_cast<int>(g.size());
    const int cols = rows ? static_cast<int>(g[0].size()) : 0;
    if (k == 0) return {Polynomial::constant(ctx, 1)};
    if (k < 0 || k > rows || k > cols) return {};
    std::vector<std::vector<int>> rs, cs;
    combinations(rows, k, rs);
    combinations(cols, k, cs);
    std::vector<Polynomial> out;
    for (const auto& R : rs)
        for (const auto& C : cs) {
            PolyGrid sub;
            for (int r : R) {
                std::vector<Polynomial> row;
                for (int c : C) row.push_back(g[r][c]);
                sub.push_back(std::move(row));
            }
            Polynomial d = determinant(sub, ctx);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    return out;
}

std::vector<Polynomial> corner_strip_minors(const SymbolicMatrix& M, int j, Strip side) {
    if (j < 0 || j > M.rows()) throw DomainError("strip width out of range");
    if (j == 0) return {Polynomial::constant(M.vars(), 1)};
    PolyGrid strip;
    if (side == Strip::Rows) {
        for (int i = M.rows() - j; i < M.rows(); ++i) strip.push_back(M.cells()[i]);
    } else {
        for (const auto& row : M.cells()) strip.emplace_back(row.end() - j, row.end());
    }
    return minors(strip, j, M.vars());
}

nlohmann::json grid_to_json(const PolyGrid& g) {
    auto out = nlohmann::json::array();
    for (const auto& row : g) {
        auto jr = nlohmann::json::array();
        for (const auto& e : row) jr.push_back(e.to_string());
        out.push_back(jr);
    }
    return out;
}

}  // namespace detlab
