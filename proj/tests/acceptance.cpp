// Acceptance run: one PASS/FAIL line per criterion, wall-time limits pinned below.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "detlab/groebner.hpp"
#include "detlab/hessian.hpp"
#include "detlab/matrix.hpp"
#include "detlab/syzygy.hpp"
#include "oracles.hpp"

using namespace detlab;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Accumulates the sub-results of one criterion.
class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    // Runs body under a wall-time limit; body returns "" on success or a reason.
    void step(const std::string& name, double limit_s, const std::function<std::string()>& body) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        try {
            why = body();
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (why.empty() && s > limit_s) {
            std::ostringstream o;
            o << "took " << s << " s > " << limit_s << " s";
            why = o.str();
        }
        slowest_ = std::max(slowest_, s);
        total_ += s;
        ++steps_;
        if (!why.empty()) failures_.push_back(name + ": " + why);
    }

    bool passed() const { return failures_.empty(); }

    void print() const {
        std::printf("criterion %2d: %s  %s  [%d checks, slowest %.2f s, total %.2f s]", id_, passed() ? "PASS" : "FAIL",
                    title_.c_str(), steps_, slowest_, total_);
        for (const auto& f : failures_) std::printf("  | %s", f.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }

    double total() const { return total_; }

private:
    int id_;
    std::string title_;
    int steps_ = 0;
    double slowest_ = 0, total_ = 0;
    std::vector<std::string> failures_;
};

std::string expect_eq(std::size_t got, std::size_t want, const char* what) {
    if (got == want) return "";
    return std::string(what) + " " + std::to_string(got) + " != " + std::to_string(want);
}

RankOptions opts(bool exact, std::uint64_t salt) {
    RankOptions o;
    o.exact = exact;
    o.seed = kSeed + salt;
    return o;
}

// Two distinct primes above 2^60 attained the accepted rank.
std::string two_prime_agreement(const RankCertificate& c) {
    std::set<std::uint64_t> primes;
    for (const auto& t : c.trials) {
        if (t.prime <= (std::uint64_t{1} << 60) || !is_prime_u64(t.prime)) return "trial prime out of range";
        if (t.rank == c.rank) primes.insert(t.prime);
    }
    return primes.size() >= 2 ? "" : "fewer than two agreeing prime trials";
}

struct ZerosCase {
    int m, r;
};
const std::vector<ZerosCase> kZerosGrid{{3, 1}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}};

std::string tag(const char* fam, int m, int r = 0) {
    return std::string(fam) + " m=" + std::to_string(m) + (r ? " r=" + std::to_string(r) : "");
}

Polynomial corner_minor(const SymbolicMatrix& M) {
    int m = M.size();
    return M.at(m - 1, m - 1) * M.at(m, m) - M.at(m - 1, m) * M.at(m, m - 1);
}

bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return a * b.terms().front().coeff == b * a.terms().front().coeff;
}

}  // namespace

int main() {
    std::vector<Criterion> all;

    {
        Criterion c(1, "linear rank, cloned m=3,4,5 equals m^2-2");
        for (int m = 3; m <= 5; ++m)
            c.step(tag("cloned", m), 60, [m] {
                auto M = build(MatrixSpec::cloned(m));
                auto cert = linear_rank(linear_syzygies(gradient_generators(M)), opts(true, m));
                if (auto e = expect_eq(cert.rank, m * m - 2, "rank"); !e.empty()) return e;
                if (m <= 4 && cert.certification != Certification::Exact) return std::string("not exact");
                return two_prime_agreement(cert);
            });
        all.push_back(c);
    }
    {
        Criterion c(2, "linear rank, zeros grid equals m^2-C(r+1,2)-1");
        for (auto [m, r] : kZerosGrid)
            c.step(tag("zeros", m, r), 120, [m = m, r = r] {
                auto M = build(MatrixSpec::zeros(m, r));
                auto cert = linear_rank(linear_syzygies(gradient_generators(M)), opts(true, 10 * m + r));
                return expect_eq(cert.rank, m * m - r * (r + 1) / 2 - 1, "rank");
            });
        all.push_back(c);
    }
    {
        Criterion c(3, "syzygy blocks verify and deleted-row block is nonsingular");
        auto one = [](const SymbolicMatrix& M, const SyzygyBlocks& B) -> std::string {
            auto rec = verify_syzygy(B.matrix, reorder(gradient_generators(M), B.generator_order));
            if (rec.status != Status::Pass) return "column not a syzygy: " + rec.witnesses.front();
            auto ns = deleted_row_nonsingular(B.matrix, 0, kSeed);
            if (!ns.nonzero) return "deleted-row block singular at all sampled points";
            return "";
        };
        for (int m = 3; m <= 5; ++m)
            c.step(tag("cloned", m), 120, [&, m] { return one(build(MatrixSpec::cloned(m)), build_cloned_blocks(m)); });
        for (auto [m, r] : kZerosGrid)
            c.step(tag("zeros", m, r), 120,
                   [&, m = m, r = r] { return one(build(MatrixSpec::zeros(m, r)), build_zeros_blocks(m, r)); });
        all.push_back(c);
    }
    {
        Criterion c(4, "Hessian rank: cloned full, zeros m^2-r(r+1)");
        for (int m = 3; m <= 4; ++m)
            c.step(tag("cloned", m), 30, [m] {
                auto M = build(MatrixSpec::cloned(m));
                auto cert = hessian_rank(determinant(M), opts(true, 100 + m));
                if (auto e = expect_eq(cert.rank, m * m - 1, "rank"); !e.empty()) return e;
                return two_prime_agreement(cert);
            });
        for (auto [m, r] : kZerosGrid)
            c.step(tag("zeros", m, r), 30, [m = m, r = r] {
                auto M = build(MatrixSpec::zeros(m, r));
                auto cert = hessian_rank(determinant(M), opts(true, 200 + 10 * m + r), polar_ladder(M));
                if (auto e = expect_eq(cert.rank, m * m - r * (r + 1), "rank"); !e.empty()) return e;
                return two_prime_agreement(cert);
            });
        all.push_back(c);
    }
    {
        Criterion c(5, "multiplicity of f in h(f): m=3 exact 2 with corner residual, m=4 line 7");
        c.step("cloned m=3", 60, [] {
            auto M = build(MatrixSpec::cloned(3));
            Polynomial f = determinant(M);
            Polynomial h = hessian_determinant(f);
            unsigned k = factor_multiplicity(h, f);
            if (k != 2) return "multiplicity " + std::to_string(k);
            Polynomial res = *exact_divide(h, f.pow(2));
            return proportional(res, corner_minor(M)) ? std::string() : "residual " + res.to_string();
        });
        c.step("cloned m=4 (line)", 120, [] {
            auto M = build(MatrixSpec::cloned(4));
            auto L = line_restricted_multiplicity(determinant(M), kSeed, corner_minor(M));
            return expect_eq(L.multiplicity, 7, "multiplicity");
        });
        all.push_back(c);
    }
    {
        Criterion c(6, "cofactor identities M adj(M) = det I, adj(adj(M)) = det^(m-2) M");
        std::vector<MatrixSpec> specs{MatrixSpec::cloned(3), MatrixSpec::cloned(4), MatrixSpec::zeros(3, 1),
                                      MatrixSpec::zeros(4, 1), MatrixSpec::zeros(4, 2)};
        for (const auto& s : specs)
            c.step(tag(to_string(s.family).c_str(), s.m, s.r), 30, [s] {
                auto M = build(s);
                const auto& ctx = M.vars();
                Polynomial f = determinant(M);
                PolyGrid A = adjugate(M);
                PolyGrid MA = grid_multiply(M.cells(), A, ctx), AA = adjugate(A, ctx);
                Polynomial scale = f.pow(s.m - 2);
                for (int i = 0; i < s.m; ++i)
                    for (int j = 0; j < s.m; ++j) {
                        if (MA[i][j] != (i == j ? f : Polynomial(ctx))) return std::string("M adj(M) entry off");
                        if (AA[i][j] != scale * M.cells()[i][j]) return std::string("adj(adj(M)) entry off");
                    }
                return std::string();
            });
        all.push_back(c);
    }
    {
        Criterion c(7, "cofactor image: elimination at m=3, substitution at m=3,4");
        c.step("elimination m=3", 600, [] {
            auto e = minors_image_equation(build(MatrixSpec::cloned(3)));
            if (!e.equation) return std::string("no single equation");
            if (e.equation->total_degree() != 2) return std::string("degree != 2");
            return proportional(*e.equation, corner_cofactor_difference(e.y, 3)) ? std::string()
                                                                                 : "equation " + e.equation->to_string();
        });
        for (int m = 3; m <= 4; ++m)
            c.step("substitution m=" + std::to_string(m), 60, [m] {
                auto rec = image_substitution_check(build(MatrixSpec::cloned(m)));
                return rec.status == Status::Pass ? std::string() : rec.witnesses.front();
            });
        all.push_back(c);
    }
    {
        Criterion c(8, "Groebner codimensions and containments (cloned m=3, zeros m=3 r=1)");
        auto C = build(MatrixSpec::cloned(3));
        Ideal JC(C.vars(), gradient_generators(C)), PC(C.vars(), submaximal_minors(C));
        c.step("codim P", 300, [&] { return expect_eq(codimension(PC), 4, "codim"); });
        c.step("J:P is the 7-variable ideal", 300, [&] {
            std::vector<Polynomial> vars;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    if (!(i == 1 && j == 1) && !(i == 3 && j == 3)) vars.push_back(C.at(i, j));
            return equals(ideal_quotient(JC, PC), Ideal(C.vars(), vars)) ? "" : "J:P differs";
        });
        c.step("P^2 in J", 300, [&] { return contains(JC, product(PC, PC)) ? "" : "P^2 not in J"; });
        auto Z = build(MatrixSpec::zeros(3, 1));
        Ideal JZ(Z.vars(), gradient_generators(Z)), IZ(Z.vars(), submaximal_minors(Z));
        c.step("codim I", 300, [&] { return expect_eq(codimension(IZ), 4, "codim"); });
        Ideal cond = ideal_quotient(JZ, IZ);
        c.step("codim J:I", 300, [&] { return expect_eq(codimension(cond), 4, "codim"); });
        c.step("conductor products", 300, [&] {
            auto G = buchberger(cond);
            for (int j = 0; j <= 1; ++j) {
                Ideal prod = product(Ideal(Z.vars(), corner_strip_minors(Z, j, Strip::Rows)),
                                     Ideal(Z.vars(), corner_strip_minors(Z, 1 - j, Strip::Cols)));
                if (!contains(G, prod)) return "product j=" + std::to_string(j) + " not in J:I";
            }
            return std::string();
        });
        all.push_back(c);
    }
    {
        Criterion c(9, "ladders: dual 2-minors vanish mod f, dual codim, polar ladder vanishes");
        for (auto [m, r] : {std::pair{3, 1}, {4, 1}})
            c.step("dual vanish " + tag("zeros", m, r), 120, [m = m, r = r] {
                auto rec = dual_ladder_check(build(MatrixSpec::zeros(m, r)), false);
                return rec.status == Status::Pass ? std::string() : rec.witnesses.front();
            });
        c.step("dual codim zeros m=3 r=1", 300, [] {
            auto rec = dual_ladder_check(build(MatrixSpec::zeros(3, 1)), true);
            return expect_eq(rec.values["codim"].get<std::size_t>(), 3, "codim");
        });
        for (auto [m, r] : kZerosGrid)
            c.step("polar vanish " + tag("zeros", m, r), 120, [m = m, r = r] {
                auto res = polar_ladder_residuals(build(MatrixSpec::zeros(m, r)));
                return res.empty() ? std::string() : res.front();
            });
        all.push_back(c);
    }
    {
        Criterion c(10, "property suites");
        std::mt19937_64 rng(kSeed);
        auto xyz = std::make_shared<const VarTable>(std::vector<Variable>{{"x", 0, 0}, {"y", 0, 0}, {"z", 0, 0}});
        c.step("ring axioms", 120, [&] {
            for (int k = 0; k < 100; ++k) {
                auto a = oracle::random_poly(rng, xyz, 4, 3), b = oracle::random_poly(rng, xyz, 4, 3),
                     d = oracle::random_poly(rng, xyz, 4, 3);
                if ((a * b) * d != a * (b * d) || a * (b + d) != a * b + a * d || (a + b) + d != a + (b + d))
                    return std::string("axiom violated");
            }
            return std::string();
        });
        std::vector<MatrixSpec> specs;
        for (int m = 3; m <= 5; ++m) {
            specs.push_back(MatrixSpec::cloned(m));
            for (int r = 1; r <= m - 2; ++r) specs.push_back(MatrixSpec::zeros(m, r));
        }
        c.step("Euler relation m<=5", 120, [&] {
            for (const auto& s : specs) {
                auto M = build(s);
                Polynomial f = determinant(M), acc(M.vars());
                for (std::size_t v = 0; v < M.vars()->size(); ++v)
                    acc += Polynomial::variable(M.vars(), v) * derivative(f, v);
                if (acc != f * mpq_class(s.m)) return tag(to_string(s.family).c_str(), s.m, s.r);
            }
            return std::string();
        });
        c.step("gradient = cofactor sums", 120, [&] {
            for (const auto& s : specs) {
                auto M = build(s);
                Polynomial f = determinant(M);
                auto g = gradient_generators(M);
                for (std::size_t v = 0; v < g.size(); ++v)
                    if (g[v] != derivative(f, v)) return tag(to_string(s.family).c_str(), s.m, s.r);
            }
            return std::string();
        });
        c.step("GB idempotence and path-independent normal forms", 300, [&] {
            for (auto s : {MatrixSpec::cloned(3), MatrixSpec::zeros(3, 1), MatrixSpec::zeros(4, 1)}) {
                auto M = build(s);
                auto G = buchberger(Ideal(M.vars(), submaximal_minors(M)));
                if (buchberger(Ideal(M.vars(), G.elements())).elements() != G.elements())
                    return std::string("not idempotent");
                for (int k = 0; k < 20; ++k) {
                    auto p = oracle::random_poly(rng, M.vars(), 4, 2);
                    if (oracle::random_path_reduce(p, G.elements(), rng) != normal_form(p, G))
                        return std::string("normal form depends on path");
                }
            }
            return std::string();
        });
        c.step("generic 3x3 submaximal minors are a degrevlex basis", 60, [] {
            auto M = build(MatrixSpec::generic(3));
            auto mins = submaximal_minors(M);
            auto G = buchberger(Ideal(M.vars(), mins));
            if (G.elements().size() != mins.size()) return std::string("basis grew");
            for (const auto& p : mins) {
                bool found = false;
                for (const auto& g : G.elements()) found |= g == p.monic();
                if (!found) return "minor missing: " + p.to_string();
            }
            return std::string();
        });
        c.step("regular sequence off the anti-diagonals, generic 3x3", 60, [] {
            auto M = build(MatrixSpec::generic(3));
            auto rec = regular_sequence_check(Ideal(M.vars(), submaximal_minors(M)), {M.at(1, 1), M.at(3, 3)});
            return rec.status == Status::Pass ? std::string() : rec.witnesses.front();
        });
        c.step("maximal minors of degenerated 4x3 (r=1) have codim 2", 60, [] {
            std::vector<std::vector<std::optional<std::pair<int, int>>>> cells;
            for (int i = 1; i <= 4; ++i) {
                cells.emplace_back();
                for (int j = 1; j <= 3; ++j)
                    cells.back().push_back(i + j > 6 ? std::nullopt : std::optional(std::pair{i, j}));
            }
            auto M = build(MatrixSpec::custom(cells));
            return expect_eq(codimension(Ideal(M.vars(), minors(M.cells(), 3, M.vars()))), 2, "codim");
        });
        if (c.total() > 600) c.step("suite total", 0, [] { return std::string("total over 600 s"); });
        all.push_back(c);
    }

    int failed = 0;
    for (const auto& c : all) {
        c.print();
        failed += !c.passed();
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
