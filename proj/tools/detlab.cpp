// detlab command-line front end.
//
//   detlab run --family cloned --m 3 --checks all --seed 42 --out report.json
//   detlab conjectures --m 4 --r 2
//   detlab matrix --spec spec.json --print det|adjugate|gradient|cofactors|hessian
//   detlab gb --family zeros --m 3 --r 1 --ideal J --order degrevlex
//
// Exit codes: 0 all PASS, 1 any FAIL (or internal error), 2 bad configuration,
// 3 only BUDGET/UNDETERMINED deviations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "detlab/groebner.hpp"
#include "detlab/hessian.hpp"
#include "detlab/matrix.hpp"
#include "detlab/scenario.hpp"

using namespace detlab;

namespace {

struct RunFlags {
    std::string config_path;
    std::string family;
    int m = 0;
    int r = 0;
    std::vector<std::string> checks;
    std::uint64_t seed = 42;
    std::vector<std::uint64_t> primes;
    long long budget_ms = 0;
    std::string out;
    std::string format = "json";
    bool no_timings = false;
};

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

// Config file first, explicit flags on top.
ScenarioConfig make_config(const RunFlags& f, CLI::App* app) {
    ScenarioConfig cfg;
    if (!f.config_path.empty()) cfg = ScenarioConfig::from_json(read_json_file(f.config_path));
    auto given = [&](const char* name) {
        const CLI::Option* o = app->get_option_no_throw(name);
        return o && o->count() > 0;
    };
    if (given("--family")) {
        try {
            cfg.family = family_from_string(f.family);
        } catch (const SpecError& e) {
            throw ConfigError(e.what());
        }
    }
    if (given("--m")) cfg.m = f.m;
    if (given("--r")) cfg.r = f.r;
    if (given("--checks")) cfg.checks = f.checks;
    if (given("--seed")) cfg.seed = f.seed;
    if (given("--primes")) cfg.primes = f.primes;
    if (given("--budget-ms")) cfg.budget_ms = f.budget_ms;
    if (f.config_path.empty() && !given("--m")) throw ConfigError("--m is required without --config");
    cfg.apply_environment();
    return cfg;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << text << '\n';
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "table") return Format::Table;
    throw ConfigError("unknown format " + s);
}

void add_run_flags(CLI::App* sub, RunFlags& f, bool with_family) {
    sub->add_option("--config", f.config_path, "JSON config file (flags override it)");
    if (with_family) sub->add_option("--family", f.family, "cloned | zeros");
    sub->add_option("--m", f.m, "matrix size");
    sub->add_option("--r", f.r, "staircase parameter (zeros family)");
    if (with_family) sub->add_option("--checks", f.checks, "check tags or 'all'")->delimiter(',');
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--primes", f.primes, "explicit primes for the rank protocol")->delimiter(',');
    sub->add_option("--budget-ms", f.budget_ms, "per-check wall-time cap in ms");
    sub->add_option("--out", f.out, "write the report here instead of stdout");
    sub->add_option("--format", f.format, "json | table");
    sub->add_flag("--no-timings", f.no_timings, "omit timings (byte-stable output)");
}

SymbolicMatrix matrix_from_flags(const std::string& spec_path, const std::string& family, int m, int r) {
    try {
        if (!spec_path.empty()) return build(MatrixSpec::from_json(read_json_file(spec_path)));
        Family fam = family_from_string(family);
        MatrixSpec s = fam == Family::Cloned  ? MatrixSpec::cloned(m)
                       : fam == Family::Zeros ? MatrixSpec::zeros(m, r)
                                              : MatrixSpec::generic(m);
        return build(s);
    } catch (const SpecError& e) {
        throw ConfigError(e.what());
    }
}

int print_matrix(const SymbolicMatrix& M, const std::string& what) {
    nlohmann::json out;
    out["spec"] = M.spec().to_json();
    out["variables"] = nlohmann::json::array();
    for (const auto& v : M.vars()->vars()) out["variables"].push_back(v.name());
    if (what == "det") {
        out["det"] = determinant(M).to_string();
    } else if (what == "adjugate") {
        out["adjugate"] = grid_to_json(adjugate(M));
    } else if (what == "gradient") {
        out["gradient"] = to_strings(gradient_generators(M));
    } else if (what == "cofactors") {
        out["cofactors"] = to_strings(submaximal_minors(M));
    } else if (what == "hessian") {
        out["hessian"] = grid_to_json(hessian(determinant(M)).matrix);
    } else if (what == "matrix") {
        out["matrix"] = grid_to_json(M.cells());
    } else {
        throw ConfigError("unknown --print target " + what);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int print_gb(const SymbolicMatrix& M, const std::string& name, const std::string& order_name, long long budget_ms) {
    MonomialOrder order = order_name == "degrevlex" ? MonomialOrder::degrevlex()
                          : order_name == "lex"     ? MonomialOrder::lex()
                                                    : throw ConfigError("unknown order " + order_name);
    const auto& ctx = M.vars();
    Budget budget = budget_ms > 0 ? Budget{}.with_timeout_ms(budget_ms) : Budget{};
    std::vector<Polynomial> gens;
    if (name == "J")
        gens = gradient_generators(M);
    else if (name == "P" || name == "I" || name == "cofactors")
        gens = submaximal_minors(M);
    else if (name == "det")
        gens = {determinant(M)};
    else if (name == "ladder")
        gens = polar_ladder(M);
    else if (name.size() > 1 && (name[0] == 'N' || name[0] == 'M') &&
             name.find_first_not_of("0123456789", 1) == std::string::npos)
        gens = corner_strip_minors(M, std::stoi(name.substr(1)), name[0] == 'N' ? Strip::Rows : Strip::Cols);
    else if (name != "conductor")
        throw ConfigError("unknown ideal " + name + " (J, P, I, cofactors, det, conductor, ladder, N<j>, M<j>)");
    try {
        if (name == "conductor")
            gens = ideal_quotient(Ideal(ctx, gradient_generators(M)), Ideal(ctx, submaximal_minors(M)), budget).gens();
        GroebnerBasis G = buchberger(Ideal(ctx, gens, order), budget);
        nlohmann::json out;
        out["ideal"] = name;
        out["order"] = order_name;
        out["generators"] = gens.size();
        out["basis"] = nlohmann::json::array();
        for (const auto& g : G.elements()) out["basis"].push_back(g.to_string(order));
        out["dimension"] = dimension(G);
        out["codimension"] = ctx->size() - dimension(G);
        out["pairs_processed"] = G.stats().pairs_processed;
        std::cout << out.dump(2) << '\n';
        return 0;
    } catch (const ResourceError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Determinantal degeneration checks"};
    app.require_subcommand(1);

    RunFlags run_flags, conj_flags;
    auto* run_cmd = app.add_subcommand("run", "run registered checks on one scenario");
    add_run_flags(run_cmd, run_flags, true);

    auto* conj_cmd = app.add_subcommand("conjectures", "probe the open statements on the zeros family");
    add_run_flags(conj_cmd, conj_flags, false);

    std::string spec_path, print = "det", family = "generic", ideal = "J", order = "degrevlex";
    int mm = 3, mr = 1;
    long long gb_budget = 0;
    auto* mat_cmd = app.add_subcommand("matrix", "build a matrix and print derived data");
    mat_cmd->add_option("--spec", spec_path, "MatrixSpec JSON file");
    mat_cmd->add_option("--family", family, "generic | cloned | zeros (without --spec)");
    mat_cmd->add_option("--m", mm);
    mat_cmd->add_option("--r", mr);
    mat_cmd->add_option("--print", print, "det | adjugate | gradient | cofactors | hessian | matrix");

    auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of a named ideal");
    gb_cmd->add_option("--spec", spec_path, "MatrixSpec JSON file");
    gb_cmd->add_option("--family", family, "generic | cloned | zeros (without --spec)");
    gb_cmd->add_option("--m", mm);
    gb_cmd->add_option("--r", mr);
    gb_cmd->add_option("--ideal", ideal, "J | P | I | cofactors | det | conductor | ladder | N<j> | M<j>");
    gb_cmd->add_option("--order", order, "degrevlex | lex");
    gb_cmd->add_option("--budget-ms", gb_budget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*run_cmd || *conj_cmd) {
            bool conj = static_cast<bool>(*conj_cmd);
            RunFlags& f = conj ? conj_flags : run_flags;
            ScenarioConfig cfg = make_config(f, conj ? conj_cmd : run_cmd);
            if (conj && f.config_path.empty()) cfg.family = Family::Zeros;
            Format fmt = parse_format(f.format);
            Report rep = conj ? conjecture_harness(cfg) : run(cfg);
            write_output(emit(rep, fmt, !f.no_timings), f.out);
            return exit_code(rep);
        }
        if (*mat_cmd) return print_matrix(matrix_from_flags(spec_path, family, mm, mr), print);
        if (*gb_cmd) return print_gb(matrix_from_flags(spec_path, family, mm, mr), ideal, order, gb_budget);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
