#include "detlab/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>

#include "detlab/groebner.hpp"
#include "detlab/hessian.hpp"
#include "detlab/syzygy.hpp"

namespace detlab {

// ---------------------------------------------------------------- registry

namespace {

const std::set<Family> kCloned{Family::Cloned};
const std::set<Family> kZeros{Family::Zeros};
const std::set<Family> kBoth{Family::Cloned, Family::Zeros};

}  // namespace

const std::vector<CheckInfo>& registry() {
    static const std::vector<CheckInfo> reg{
        {"adjadj_identity", "cofactor-identities", kBoth, 4},
        {"irreducible_f", "f-irreducible", kBoth, 5},
        {"linear_rank", "J-maximal-linear-rank", kBoth, 5},
        {"syzygy_blocks", "J-linear-syzygy-blocks", kBoth, 5},
        {"hessian_full", "hessian-nonvanishing", kCloned, 5},
        {"hessian_rank", "polar-image-dimension", kBoth, 5},
        {"multiplicity", "f-multiplicity-in-hessian", kCloned, 4},
        {"residual_2x2", "hessian-residual-corner-minor", kCloned, 4},
        {"homaloidal", "homaloidal-criterion", kBoth, 5},
        {"image_equation", "cofactor-image-hypersurface", kCloned, 4},
        {"cone_dimension", "minors-maximal-analytic-spread", kZeros, 5},
        {"ladder_polar_vanish", "polar-variety-ladder", kZeros, 5},
        {"dual_ladder_vanish", "dual-variety-ladder", kBoth, 4},
        {"P_codim", "submaximal-minors-codim", kCloned, 5},
        {"JP_conductor", "conductor-of-J-in-P", kCloned, 5},
        {"P2_in_J", "P-squared-in-J", kCloned, 5},
        {"reduction_probe", "J-not-a-reduction-of-P", kCloned, 3},
        {"I_codim", "submaximal-minors-codim", kZeros, 5},
        {"conductor_codim", "conductor-codim", kZeros, 5},
        {"conductor_products", "conductor-sizing", kZeros, 5},
        {"ladder_polar_codim", "polar-variety-ladder", kZeros, 4},
        {"dual_ladder_codim", "dual-variety-ladder", kBoth, 4},
    };
    return reg;
}

const CheckInfo* find_check(const std::string& tag) {
    for (const auto& c : registry())
        if (c.tag == tag) return &c;
    return nullptr;
}

// ---------------------------------------------------------------- config

void ScenarioConfig::validate() const {
    if (family != Family::Cloned && family != Family::Zeros)
        throw ConfigError("family must be cloned or zeros");
    if (m < 3) throw ConfigError("m must be at least 3");
    if (family == Family::Zeros && (r < 1 || r > m - 2))
        throw ConfigError("zeros family needs 1 <= r <= m-2 (got m=" + std::to_string(m) + ", r=" +
                          std::to_string(r) + ")");
    if (checks.empty()) throw ConfigError("empty check list");
    for (const auto& t : checks) {
        if (t == "all") continue;
        const CheckInfo* c = find_check(t);
        if (!c) throw ConfigError("unknown check tag: " + t);
        if (!c->families.count(family)) throw ConfigError("check " + t + " does not apply to family " + to_string(family));
    }
    if (budget_ms && *budget_ms <= 0) throw ConfigError("budget_ms must be positive");
}

nlohmann::json ScenarioConfig::to_json() const {
    nlohmann::json j;
    j["family"] = to_string(family);
    j["m"] = m;
    if (family == Family::Zeros) j["r"] = r;
    j["checks"] = checks;
    j["seed"] = seed;
    j["primes"] = primes;
    nlohmann::json b;
    b["max_pairs"] = budget.max_pairs;
    b["max_basis"] = budget.max_basis;
    b["max_degree"] = budget.max_degree;
    b["max_terms"] = budget.max_terms;
    if (budget_ms) b["ms"] = *budget_ms;
    j["budget"] = b;
    return j;
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& j) {
    ScenarioConfig c;
    try {
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        c.family = family_from_string(j.at("family").get<std::string>());
        c.m = j.at("m").get<int>();
        c.r = j.value("r", 0);
        if (j.contains("checks")) {
            if (j["checks"].is_string())
                c.checks = {j["checks"].get<std::string>()};
            else
                c.checks = j["checks"].get<std::vector<std::string>>();
        }
        c.seed = j.value("seed", std::uint64_t{42});
        c.primes = j.value("primes", std::vector<std::uint64_t>{});
        if (j.contains("budget")) {
            const auto& b = j["budget"];
            c.budget.max_pairs = b.value("max_pairs", c.budget.max_pairs);
            c.budget.max_basis = b.value("max_basis", c.budget.max_basis);
            c.budget.max_degree = b.value("max_degree", c.budget.max_degree);
            c.budget.max_terms = b.value("max_terms", c.budget.max_terms);
            if (b.contains("ms")) c.budget_ms = b["ms"].get<long long>();
        }
    } catch (const SpecError& e) {
        throw ConfigError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    for (auto p : c.primes)
        if (!is_prime_u64(p) || p < (std::uint64_t{1} << 60)) throw ConfigError("explicit primes must be primes above 2^60");
    return c;
}

void ScenarioConfig::apply_environment() {
    if (budget_ms) return;
    if (const char* s = std::getenv("DETLAB_BUDGET_MS")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end == s || *end || v <= 0) throw ConfigError("DETLAB_BUDGET_MS must be a positive integer");
        budget_ms = v;
    }
}

std::vector<std::string> expand_checks(const ScenarioConfig& cfg) {
    bool all = std::find(cfg.checks.begin(), cfg.checks.end(), "all") != cfg.checks.end();
    std::vector<std::string> out;
    for (const auto& c : registry()) {
        if (!c.families.count(cfg.family)) continue;
        bool listed = std::find(cfg.checks.begin(), cfg.checks.end(), c.tag) != cfg.checks.end();
        if (listed || (all && cfg.m <= c.desk_max_m)) out.push_back(c.tag);
    }
    return out;
}

// ---------------------------------------------------------------- workspace

namespace {

std::size_t binom2(int r) { return static_cast<std::size_t>(r) * (r + 1) / 2; }

struct Workspace {
    explicit Workspace(const ScenarioConfig& c)
        : cfg(c),
          M(build(c.family == Family::Cloned ? MatrixSpec::cloned(c.m) : MatrixSpec::zeros(c.m, c.r))),
          ctx(M.vars()) {
        f = determinant(M);
        grads = gradient_generators(M);
        cofs = submaximal_minors(M);
    }

    const ScenarioConfig& cfg;
    SymbolicMatrix M;
    VarTablePtr ctx;
    Polynomial f;
    std::vector<Polynomial> grads, cofs;
    Budget budget;  // current check's budget

    std::optional<LinearSyzygySpace> syz;
    std::optional<GroebnerBasis> gb_J, gb_I;
    std::optional<Ideal> conductor;
    std::optional<Polynomial> hdet;
    std::optional<LineMultiplicity> line;

    int m() const { return cfg.m; }
    int r() const { return cfg.r; }
    bool cloned() const { return cfg.family == Family::Cloned; }
    std::size_t nvars() const { return ctx->size(); }

    RankOptions rank_options(const std::string& tag) const {
        RankOptions o;
        o.seed = cfg.seed ^ std::stoull(short_hash(tag), nullptr, 16);
        o.primes = cfg.primes;
        o.exact = true;
        return o;
    }

    const LinearSyzygySpace& syzygies() {
        if (!syz) syz = linear_syzygies(grads, budget);
        return *syz;
    }
    Ideal J() const { return Ideal(ctx, grads); }
    Ideal I() const { return Ideal(ctx, cofs); }
    const GroebnerBasis& GJ() {
        if (!gb_J) gb_J = buchberger(J(), budget);
        return *gb_J;
    }
    const GroebnerBasis& GI() {
        if (!gb_I) gb_I = buchberger(I(), budget);
        return *gb_I;
    }
    const Ideal& colon() {
        if (!conductor) conductor = Ideal(ctx, buchberger(ideal_quotient(J(), I(), budget), budget).elements());
        return *conductor;
    }
    std::size_t codim(const GroebnerBasis& G) const { return nvars() - dimension(G); }

    Polynomial corner_minor() const {
        int m = cfg.m;
        return M.at(m - 1, m - 1) * M.at(m, m) - M.at(m - 1, m) * M.at(m, m - 1);
    }
    const Polynomial& hessian_det() {
        if (!hdet) hdet = hessian_determinant(f, budget);
        return *hdet;
    }
    const LineMultiplicity& line_mult() {
        if (!line) line = line_restricted_multiplicity(f, rank_options("multiplicity").seed, corner_minor());
        return *line;
    }
};

nlohmann::json cert_json(const RankCertificate& c) {
    nlohmann::json j;
    j["rank"] = c.rank;
    j["certification"] = to_string(c.certification);
    j["method"] = c.method;
    auto t = nlohmann::json::array();
    for (const auto& tr : c.trials) t.push_back({{"prime", tr.prime}, {"rank", tr.rank}});
    j["trials"] = t;
    if (c.exact_lower) j["exact_lower"] = *c.exact_lower;
    if (c.exact_upper) j["exact_upper"] = *c.exact_upper;
    return j;
}

void set_pass(CheckRecord& rec, bool ok, const std::string& witness) {
    rec.status = ok ? Status::Pass : Status::Fail;
    if (!ok) rec.witnesses.push_back(truncate_witness(witness));
}

std::string rank_witness(const char* what, std::size_t got, std::size_t expected) {
    return std::string(what) + " " + std::to_string(got) + " differs from expected " + std::to_string(expected);
}

// Up to a nonzero rational scalar.
bool proportional(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    mpq_class ca = a.terms().front().coeff, cb = b.terms().front().coeff;
    return a * cb == b * ca;
}

// ---------------------------------------------------------------- checks

using CheckFn = std::function<void(Workspace&, CheckRecord&)>;

void check_adjadj(Workspace& w, CheckRecord& rec) {
    const int m = w.m();
    PolyGrid A = adjugate(w.M);
    PolyGrid MA = grid_multiply(w.M.cells(), A, w.ctx);
    PolyGrid AM = grid_multiply(A, w.M.cells(), w.ctx);
    PolyGrid AA = adjugate(A, w.ctx);
    Polynomial scale = w.f.pow(static_cast<unsigned>(m - 2));
    std::vector<std::string> bad;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Polynomial d = i == j ? w.f : Polynomial(w.ctx);
            if (MA[i][j] != d) bad.push_back("M*adj(M) entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + MA[i][j].to_string());
            if (AM[i][j] != d) bad.push_back("adj(M)*M entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + AM[i][j].to_string());
            Polynomial e = scale * w.M.cells()[i][j];
            if (AA[i][j] != e) bad.push_back("adj(adj(M)) entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") residual " + (AA[i][j] - e).to_string());
        }
    rec.values["entries_checked"] = 3 * m * m;
    rec.status = bad.empty() ? Status::Pass : Status::Fail;
    for (auto& b : bad) rec.witnesses.push_back(truncate_witness(b));
}

void check_irreducible(Workspace& w, CheckRecord& rec) {
    // f = x_{1,1} * D + g with D the (1,1) cofactor; if D divided g, in(D) would divide in(g)
    Polynomial D = cofactor(w.M, 1, 1);
    std::size_t x11 = w.ctx->index(1, 1);
    Polynomial g = w.f - Polynomial::variable(w.ctx, x11) * D;
    auto order = MonomialOrder::degrevlex();
    Monomial inD = leading_term(D, order).mono, ing = leading_term(g, order).mono;
    rec.values["in_D11"] = monomial_to_string(inD, *w.ctx);
    rec.values["in_g"] = monomial_to_string(ing, *w.ctx);
    rec.values["g_free_of_x11"] = !g.uses_variable(x11) && !D.uses_variable(x11);
    if (g.uses_variable(x11) || D.uses_variable(x11)) {
        set_pass(rec, false, "x_1_1 appears in the cofactor or the remainder");
    } else if (inD.divides(ing)) {
        set_pass(rec, false, "in(D11) = " + rec.values["in_D11"].get<std::string>() + " divides in(g) = " +
                                 rec.values["in_g"].get<std::string>());
    } else {
        rec.status = Status::Undetermined;
        rec.note = "consistent: f is primitive of degree 1 in x_1_1 provided the (1,1) cofactor is irreducible; "
                   "no factorization engine, so irreducibility itself is not certified";
    }
}

void check_linear_rank(Workspace& w, CheckRecord& rec) {
    const auto& S = w.syzygies();
    RankCertificate c = linear_rank(S, w.rank_options(rec.tag));
    std::size_t expected = w.cloned() ? w.nvars() - 1 : static_cast<std::size_t>(w.m() * w.m()) - binom2(w.r()) - 1;
    rec.certification = c.certification;
    rec.values = cert_json(c);
    rec.values["expected"] = expected;
    rec.values["generators"] = S.ngens;
    rec.values["dimension"] = S.dimension();
    rec.values["excess"] = S.dimension() - c.rank;
    set_pass(rec, c.rank == expected, rank_witness("linear rank", c.rank, expected));
}

void check_syzygy_blocks(Workspace& w, CheckRecord& rec) {
    SyzygyBlocks B = w.cloned() ? build_cloned_blocks(w.m()) : build_zeros_blocks(w.m(), w.r());
    auto gens = reorder(w.grads, B.generator_order);
    CheckRecord v = verify_syzygy(B.matrix, gens);
    rec.witnesses = v.witnesses;
    auto ns = deleted_row_nonsingular(B.matrix, 0, w.rank_options(rec.tag).seed);
    // each column must also lie in the solved syzygy space
    const auto& S = w.syzygies();
    std::size_t outside = 0;
    for (std::size_t c = 0; c < B.matrix.cols(); ++c) {
        std::vector<Polynomial> col(w.nvars(), Polynomial(w.ctx));
        auto column = B.matrix.column(c);
        for (std::size_t k = 0; k < column.size(); ++k) col[B.generator_order[k]] = transfer(column[k], w.ctx);
        if (!in_span(S, col)) {
            ++outside;
            rec.witnesses.push_back("column " + std::to_string(c + 1) + " (" + B.column_blocks[c] +
                                    ") is outside the solved syzygy space");
        }
    }
    rec.values["shape"] = {B.matrix.rows(), B.matrix.cols()};
    rec.values["columns_verified"] = B.matrix.cols() - v.witnesses.size();
    rec.values["deleted_row_rank"] = ns.rank_at_point;
    rec.values["deleted_row_nonsingular"] = ns.nonzero;
    rec.values["generator_order"] = B.row_labels;
    bool ok = v.status == Status::Pass && ns.nonzero && outside == 0;
    if (!ns.nonzero)
        rec.witnesses.push_back("square block after deleting the first row has rank " +
                                std::to_string(ns.rank_at_point) + " at every sampled point");
    rec.status = ok ? Status::Pass : Status::Fail;
}

void check_hessian_full(Workspace& w, CheckRecord& rec) {
    CheckRecord spec = diag_specialization_check(w.m());
    RankCertificate c = hessian_rank(w.f, w.rank_options(rec.tag));
    rec.values = cert_json(c);
    rec.values["specialization"] = spec.values;
    rec.values["expected"] = w.nvars();
    rec.certification = c.certification;
    rec.witnesses = spec.witnesses;
    bool ok = spec.status == Status::Pass && c.rank == w.nvars();
    if (c.rank != w.nvars()) rec.witnesses.push_back(rank_witness("Hessian rank", c.rank, w.nvars()));
    rec.status = ok ? Status::Pass : Status::Fail;
}

void check_hessian_rank(Workspace& w, CheckRecord& rec) {
    std::size_t expected;
    RankCertificate c;
    CheckRecord spec;
    if (w.cloned()) {
        expected = w.nvars();
        spec = diag_specialization_check(w.m());
        c = hessian_rank(w.f, w.rank_options(rec.tag));
    } else {
        expected = static_cast<std::size_t>(w.m() * w.m() - w.r() * (w.r() + 1));
        spec = antidiag_specialization_check(w.m(), w.r());
        auto residuals = polar_ladder_residuals(w.M);
        if (!residuals.empty()) {
            rec.witnesses = residuals;
            c = hessian_rank(w.f, w.rank_options(rec.tag));
        } else {
            c = hessian_rank(w.f, w.rank_options(rec.tag), polar_ladder(w.M), true);
        }
    }
    rec.values = cert_json(c);
    rec.values["specialization"] = spec.values;
    rec.values["expected"] = expected;
    rec.values["variables"] = w.nvars();
    rec.certification = c.certification;
    for (auto& s : spec.witnesses) rec.witnesses.push_back(s);
    if (c.rank != expected) rec.witnesses.push_back(rank_witness("Hessian rank", c.rank, expected));
    rec.status = rec.witnesses.empty() ? Status::Pass : Status::Fail;
}

void check_multiplicity(Workspace& w, CheckRecord& rec) {
    const unsigned expected = static_cast<unsigned>(w.m() * (w.m() - 2) - 1);
    unsigned k;
    if (w.m() == 3) {
        k = factor_multiplicity(w.hessian_det(), w.f);
        rec.values["h_terms"] = w.hessian_det().size();
        rec.values["h_degree"] = w.hessian_det().total_degree();
    } else {
        const auto& L = w.line_mult();
        k = L.multiplicity;
        rec.certification = Certification::Probabilistic;
        rec.values["line_a"] = L.a;
        rec.values["line_b"] = L.b;
        rec.values["h_degree_on_line"] = L.h_degree;
        rec.note = "restricted to the line a + t*b";
    }
    rec.values["multiplicity"] = k;
    rec.values["expected"] = expected;
    set_pass(rec, k == expected, rank_witness("multiplicity", k, expected));
}

void check_residual(Workspace& w, CheckRecord& rec) {
    Polynomial ref = w.corner_minor();
    rec.values["reference"] = ref.to_string();
    if (w.m() == 3) {
        Polynomial res = w.hessian_det();
        unsigned k = factor_multiplicity(res, w.f);
        for (unsigned i = 0; i < k; ++i) res = *exact_divide(res, w.f);
        rec.values["residual"] = res.to_string();
        set_pass(rec, proportional(res, ref), "residual " + res.to_string() + " is not a multiple of " + ref.to_string());
    } else {
        const auto& L = w.line_mult();
        rec.certification = Certification::Probabilistic;
        rec.values["residual_on_line"] = L.residual.to_string();
        rec.note = "compared along the line used for the multiplicity";
        bool ok = L.residual_matches && *L.residual_matches;
        set_pass(rec, ok, "restricted residual " + L.residual.to_string() + " is not a multiple of the restricted minor");
    }
}

void check_homaloidal(Workspace& w, CheckRecord& rec) {
    PolarProfile P = homaloidal_check(w.M, w.rank_options(rec.tag));
    Homaloidal expected = w.cloned() ? Homaloidal::Yes : Homaloidal::No;
    rec.values["hessian"] = cert_json(P.hessian);
    if (P.linear) rec.values["linear"] = cert_json(*P.linear);
    rec.values["generators"] = P.generators;
    rec.values["homaloidal"] = to_string(P.homaloidal);
    rec.values["expected"] = to_string(expected);
    rec.values["reason"] = P.reason;
    bool exact = P.hessian.certification == Certification::Exact &&
                 (!P.linear || P.linear->certification == Certification::Exact);
    rec.certification = exact ? Certification::Exact : Certification::Probabilistic;
    if (P.homaloidal == Homaloidal::Undetermined) {
        rec.status = Status::Undetermined;
        rec.note = P.reason;
    } else {
        set_pass(rec, P.homaloidal == expected, "homaloidal = " + to_string(P.homaloidal) + ": " + P.reason);
    }
}

void check_image_equation(Workspace& w, CheckRecord& rec) {
    CheckRecord sub = image_substitution_check(w.M);
    rec.values["substitution"] = to_string(sub.status);
    rec.values["equation"] = sub.values["equation"];
    rec.witnesses = sub.witnesses;
    bool ok = sub.status == Status::Pass;
    if (w.m() == 3) {
        ImageEquation e = minors_image_equation(w.M, w.budget);
        rec.values["jacobian_rank"] = e.jacobian_rank;
        rec.values["eliminated"] = to_strings(e.eliminated);
        Polynomial D = corner_cofactor_difference(e.y, w.m());
        if (!e.equation) {
            ok = false;
            rec.witnesses.push_back("elimination ideal has " + std::to_string(e.eliminated.size()) + " generators");
        } else if (e.equation->total_degree() != static_cast<unsigned>(w.m() - 1) || !proportional(*e.equation, D)) {
            ok = false;
            rec.witnesses.push_back(truncate_witness("image equation " + e.equation->to_string() +
                                                     " is not a multiple of " + D.to_string()));
        }
    } else {
        rec.note = "elimination runs only at m = 3; the substitution identity is checked exactly";
    }
    rec.status = ok ? Status::Pass : Status::Fail;
}

void check_cone_dimension(Workspace& w, CheckRecord& rec) {
    RankOptions o = w.rank_options(rec.tag);
    o.upper_bound = w.nvars();
    o.upper_bound_reason = "the number of variables";
    RankCertificate c = certify_rank(jacobian(w.cofs, w.ctx), o);
    rec.values = cert_json(c);
    rec.values["expected"] = w.nvars();
    rec.certification = c.certification;
    set_pass(rec, c.rank == w.nvars(), rank_witness("Jacobian rank of the minors", c.rank, w.nvars()));
}

void copy_record(const CheckRecord& src, CheckRecord& rec) {
    rec.status = src.status;
    rec.certification = src.certification;
    rec.values = src.values;
    rec.witnesses = src.witnesses;
}

void check_ladder_polar(Workspace& w, CheckRecord& rec, bool codim) {
    copy_record(polar_ladder_check(w.M, codim, w.budget), rec);
}

void check_dual_ladder(Workspace& w, CheckRecord& rec, bool codim) {
    copy_record(dual_ladder_check(w.M, codim, w.budget), rec);
}

void check_minors_codim(Workspace& w, CheckRecord& rec) {
    std::size_t c = w.codim(w.GI());
    rec.values["codim"] = c;
    rec.values["expected"] = 4;
    rec.values["basis_size"] = w.GI().elements().size();
    rec.note = "codimension only; primality is not certified";
    set_pass(rec, c == 4, rank_witness("codimension", c, 4));
}

void check_JP_conductor(Workspace& w, CheckRecord& rec) {
    const int m = w.m();
    std::vector<Polynomial> vars;
    std::set<std::size_t> seen;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            if (i <= m - 2 && j <= m - 2) continue;
            const Polynomial& e = w.M.at(i, j);
            if (!e.is_zero() && seen.insert(e.hash()).second) vars.push_back(e);
        }
    Ideal expected(w.ctx, vars);
    const Ideal& Q = w.colon();
    GroebnerBasis GQ = buchberger(Q, w.budget);
    GroebnerBasis GE = buchberger(expected, w.budget);
    rec.values["conductor"] = to_strings(GQ.elements());
    rec.values["expected_generators"] = vars.size();
    rec.values["codim"] = w.codim(GQ);
    auto a = first_outside(GQ, expected);
    auto b = first_outside(GE, Q);
    if (a) rec.witnesses.push_back(a->to_string() + " is not in J:P");
    if (b) rec.witnesses.push_back(truncate_witness(b->to_string() + " is in J:P but not in the expected ideal"));
    rec.status = rec.witnesses.empty() ? Status::Pass : Status::Fail;
}

void check_P2_in_J(Workspace& w, CheckRecord& rec) {
    const auto& G = w.GJ();
    std::size_t products = 0;
    for (std::size_t i = 0; i < w.cofs.size() && rec.witnesses.empty(); ++i)
        for (std::size_t j = i; j < w.cofs.size(); ++j) {
            ++products;
            Polynomial p = w.cofs[i] * w.cofs[j];
            if (!reduces_to_zero(p, G)) {
                rec.witnesses.push_back(truncate_witness("product of cofactors " + std::to_string(i) + " and " +
                                                         std::to_string(j) + " has normal form " +
                                                         normal_form(p, G).to_string()));
                break;
            }
        }
    auto out = first_outside(w.GI(), w.J());
    if (out) rec.witnesses.push_back(truncate_witness(out->to_string() + " is in J but not in P"));
    rec.values["products_checked"] = products;
    rec.values["J_in_P"] = !out.has_value();
    rec.status = rec.witnesses.empty() ? Status::Pass : Status::Fail;
}

void check_reduction_probe(Workspace& w, CheckRecord& rec) {
    const int m = w.m();
    Ideal JP = w.J();
    for (int k = 0; k < m - 2; ++k) JP = product(JP, w.I());
    GroebnerBasis G = buchberger(JP, w.budget);
    Polynomial d = cofactor(w.M, m, m).pow(static_cast<unsigned>(m - 1));
    bool member = reduces_to_zero(d, G);
    rec.values["member"] = member;
    rec.values["product_generators"] = JP.gens().size();
    set_pass(rec, !member, "the (m,m) cofactor power lies in J*P^(m-2)");
}

void check_conductor_codim(Workspace& w, CheckRecord& rec) {
    GroebnerBasis G = buchberger(w.colon(), w.budget);
    std::size_t c = w.codim(G);
    std::size_t expected = static_cast<std::size_t>(2 * (w.m() - w.r()));
    rec.values["codim"] = c;
    rec.values["expected"] = expected;
    rec.values["conductor_basis"] = G.elements().size();
    set_pass(rec, c == expected, rank_witness("codimension of J:I", c, expected));
}

void check_conductor_products(Workspace& w, CheckRecord& rec) {
    GroebnerBasis G = buchberger(w.colon(), w.budget);
    auto per = nlohmann::json::array();
    for (int j = 0; j <= w.r(); ++j) {
        Ideal N(w.ctx, corner_strip_minors(w.M, j, Strip::Rows));
        Ideal Mm(w.ctx, corner_strip_minors(w.M, w.r() - j, Strip::Cols));
        Ideal P = product(N, Mm);
        auto out = first_outside(G, P);
        per.push_back({{"j", j}, {"generators", P.gens().size()}, {"contained", !out}});
        if (out)
            rec.witnesses.push_back(truncate_witness("j=" + std::to_string(j) + ": " + out->to_string() +
                                                     " is not in J:I"));
    }
    rec.values["products"] = per;
    rec.status = rec.witnesses.empty() ? Status::Pass : Status::Fail;
}

const std::map<std::string, CheckFn>& implementations() {
    static const std::map<std::string, CheckFn> fns{
        {"adjadj_identity", check_adjadj},
        {"irreducible_f", check_irreducible},
        {"linear_rank", check_linear_rank},
        {"syzygy_blocks", check_syzygy_blocks},
        {"hessian_full", check_hessian_full},
        {"hessian_rank", check_hessian_rank},
        {"multiplicity", check_multiplicity},
        {"residual_2x2", check_residual},
        {"homaloidal", check_homaloidal},
        {"image_equation", check_image_equation},
        {"cone_dimension", check_cone_dimension},
        {"ladder_polar_vanish", [](Workspace& w, CheckRecord& r) { check_ladder_polar(w, r, false); }},
        {"ladder_polar_codim", [](Workspace& w, CheckRecord& r) { check_ladder_polar(w, r, true); }},
        {"dual_ladder_vanish", [](Workspace& w, CheckRecord& r) { check_dual_ladder(w, r, false); }},
        {"dual_ladder_codim", [](Workspace& w, CheckRecord& r) { check_dual_ladder(w, r, true); }},
        {"P_codim", check_minors_codim},
        {"I_codim", check_minors_codim},
        {"JP_conductor", check_JP_conductor},
        {"P2_in_J", check_P2_in_J},
        {"reduction_probe", check_reduction_probe},
        {"conductor_codim", check_conductor_codim},
        {"conductor_products", check_conductor_products},
    };
    return fns;
}

double millis_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Budget budget_for(const ScenarioConfig& cfg) {
    return cfg.budget_ms ? cfg.budget.with_timeout_ms(*cfg.budget_ms) : cfg.budget;
}

// Runs one record body, turning budget exhaustion into a BUDGET record.
void guarded(Workspace& w, CheckRecord& rec, const std::function<void(Workspace&, CheckRecord&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    w.budget = budget_for(w.cfg);
    try {
        body(w, rec);
    } catch (const ResourceError& e) {
        rec.status = Status::Budget;
        rec.witnesses.clear();
        rec.note = e.what();
    }
    rec.millis = millis_since(t0);
}

}  // namespace

Report run(const ScenarioConfig& cfg) {
    cfg.validate();
    Report report;
    report.config = cfg.to_json();
    auto tags = expand_checks(cfg);
    report.config["expanded_checks"] = tags;
    if (std::find(cfg.checks.begin(), cfg.checks.end(), "all") != cfg.checks.end())
        for (const auto& c : registry())
            if (c.families.count(cfg.family) && cfg.m > c.desk_max_m)
                report.warnings.push_back("skipped " + c.tag + ": beyond desk scale (m > " +
                                          std::to_string(c.desk_max_m) + "); request it explicitly to run it");
    Workspace w(cfg);
    for (const auto& tag : tags) {
        CheckRecord rec;
        rec.tag = tag;
        rec.anchor = find_check(tag)->anchor;
        guarded(w, rec, implementations().at(tag));
        report.checks.push_back(std::move(rec));
    }
    return report;
}

// ---------------------------------------------------------------- conjectures

namespace {

Polynomial block_det(const SymbolicMatrix& M, int r0, int c0, int t) {
    PolyGrid g;
    for (int i = 0; i < t; ++i) {
        std::vector<Polynomial> row;
        for (int j = 0; j < t; ++j) row.push_back(M.at(r0 + i, c0 + j));
        g.push_back(std::move(row));
    }
    return determinant(g, M.vars());
}

// delta_t: rows 1..t, columns m-t+1..m.  gamma_t: rows m-t+1..m, columns 1..t.
Polynomial delta(const SymbolicMatrix& M, int t) { return block_det(M, 1, M.size() - t + 1, t); }
Polynomial gamma(const SymbolicMatrix& M, int t) { return block_det(M, M.size() - t + 1, 1, t); }

Ideal intersect_all(const std::vector<Ideal>& parts, const Budget& b) {
    Ideal acc = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) acc = intersect(acc, parts[k], b);
    return acc;
}

// Both containments; FAIL carries the first generator found on the wrong side.
void compare_ideals(const Ideal& lhs, const std::string& lname, const Ideal& rhs, const std::string& rname,
                    CheckRecord& rec, const Budget& b) {
    GroebnerBasis GL = buchberger(lhs, b), GR = buchberger(rhs, b);
    auto a = first_outside(GL, rhs);
    auto c = first_outside(GR, lhs);
    rec.values[rname + "_in_" + lname] = !a;
    rec.values[lname + "_in_" + rname] = !c;
    if (a) rec.witnesses.push_back(truncate_witness(a->to_string() + " lies in " + rname + " but not in " + lname));
    if (c) rec.witnesses.push_back(truncate_witness(c->to_string() + " lies in " + lname + " but not in " + rname));
    rec.status = rec.witnesses.empty() ? Status::Pass : Status::Fail;
}

}  // namespace

Report conjecture_harness(const ScenarioConfig& cfg) {
    if (cfg.family != Family::Zeros) throw ConfigError("the conjecture harness runs on the zeros family only");
    ScenarioConfig c = cfg;
    c.checks = {"all"};
    c.validate();
    Report report;
    report.config = c.to_json();
    report.config.erase("checks");
    report.config["harness"] = "conjectures";
    Workspace w(c);
    const int m = c.m, r = c.r;
    auto add = [&](const std::string& tag, const std::string& anchor, const std::function<void(Workspace&, CheckRecord&)>& body) {
        CheckRecord rec;
        rec.tag = tag;
        rec.anchor = anchor;
        guarded(w, rec, body);
        report.checks.push_back(std::move(rec));
    };
    auto X = [&](int i, int j) { return w.M.at(i, j); };

    if (r <= m - 3) {
        add("unmixed_probe", "question-unmixed-part", [&](Workspace& ws, CheckRecord& rec) {
            SaturationResult S = saturation(ws.J(), ws.colon(), ws.budget);
            rec.values["saturation_steps"] = S.steps;
            rec.values["unit"] = S.unit;
            GroebnerBasis GS = buchberger(S.ideal, ws.budget);
            auto a = first_outside(GS, ws.I());
            auto b = first_outside(ws.GI(), S.ideal);
            rec.values["equal"] = !a && !b;
            if (!a && !b) {
                rec.status = Status::Pass;
                rec.note = "J : (J:I)^inf equals I";
            } else {
                rec.status = Status::Undetermined;
                if (a) rec.witnesses.push_back(truncate_witness(a->to_string() + " is in I but not in the saturation"));
                if (b) rec.witnesses.push_back(truncate_witness(b->to_string() + " is in the saturation but not in I"));
                rec.note = "saturation differs from I; this probe is not a rigorous counterexample";
            }
        });
    } else {
        report.warnings.push_back("unmixed_probe skipped: it concerns r <= m-3");
    }

    if (r == m - 2) {
        for (int j = 1; j <= r; ++j) {
            add("strip_decomposition_M" + std::to_string(j), "conjecture-strip-decomposition",
                [&, j](Workspace& ws, CheckRecord& rec) {
                    std::vector<Ideal> parts;
                    for (int t = 1; t <= j; ++t) parts.push_back(Ideal(ws.ctx, {X(t + 1, m - t + 1), delta(ws.M, t)}));
                    Ideal rhs = intersect_all(parts, ws.budget);
                    Ideal lhs(ws.ctx, corner_strip_minors(ws.M, j, Strip::Cols));
                    rec.values["components"] = j;
                    compare_ideals(lhs, "I_j(M_j)", rhs, "intersection", rec, ws.budget);
                });
            add("strip_decomposition_N" + std::to_string(j), "conjecture-strip-decomposition",
                [&, j](Workspace& ws, CheckRecord& rec) {
                    std::vector<Ideal> parts;
                    for (int t = 1; t <= j; ++t) parts.push_back(Ideal(ws.ctx, {X(m - t + 1, t + 1), gamma(ws.M, t)}));
                    Ideal rhs = intersect_all(parts, ws.budget);
                    Ideal lhs(ws.ctx, corner_strip_minors(ws.M, j, Strip::Rows));
                    rec.values["components"] = j;
                    compare_ideals(lhs, "I_j(N_j)", rhs, "intersection", rec, ws.budget);
                });
        }
        add("conductor_decomposition", "conjecture-conductor-decomposition", [&](Workspace& ws, CheckRecord& rec) {
            std::vector<Ideal> parts;
            for (int s = 1; s <= r; ++s)
                for (int t = 1; s + t <= r + 1; ++t)
                    parts.push_back(Ideal(ws.ctx, {X(m - s + 1, s + 1), gamma(ws.M, s), X(t + 1, m - t + 1), delta(ws.M, t)}));
            rec.values["components"] = parts.size();
            compare_ideals(ws.colon(), "J:I", intersect_all(parts, ws.budget), "intersection", rec, ws.budget);
        });
        add("J_equals_I_cap_conductor", "conjecture-J-intersection", [&](Workspace& ws, CheckRecord& rec) {
            Ideal cap = intersect(ws.I(), ws.colon(), ws.budget);
            compare_ideals(ws.J(), "J", cap, "I_cap_conductor", rec, ws.budget);
        });
        for (int j = 1; j <= m - 2; ++j)
            add("minimal_primes_probe_" + std::to_string(j), "minimal-primes-inclusion",
                [&, j](Workspace& ws, CheckRecord& rec) {
                    auto g = corner_strip_minors(ws.M, j, Strip::Rows);
                    auto h = corner_strip_minors(ws.M, m - 1 - j, Strip::Cols);
                    g.insert(g.end(), h.begin(), h.end());
                    GroebnerBasis G = buchberger(Ideal(ws.ctx, g), ws.budget);
                    auto out = first_outside(G, ws.J());
                    rec.values["contained"] = !out;
                    set_pass(rec, !out, out ? out->to_string() + " is in J but not in the strip ideal" : "");
                });
    } else {
        report.warnings.push_back("decomposition conjectures skipped: they concern r = m-2");
    }
    return report;
}

}  // namespace detlab
