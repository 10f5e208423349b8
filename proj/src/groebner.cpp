#include "detlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace detlab {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(VarTablePtr ctx, std::vector<Polynomial> gens, MonomialOrder order)
    : ctx_(std::move(ctx)), order_(std::move(order)) {
    std::unordered_set<std::size_t> seen_hash;
    std::vector<Polynomial> prims;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.context() && !same_context(g.context(), ctx_)) throw ContextError("ideal generator over another table");
        Polynomial p = g.primitive();
        std::size_t h = p.hash();
        if (seen_hash.count(h) && std::find(prims.begin(), prims.end(), p) != prims.end()) continue;
        seen_hash.insert(h);
        prims.push_back(p);
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(VarTablePtr ctx) {
    auto one = Polynomial::constant(ctx, 1);
    return Ideal(std::move(ctx), {one});
}

// ---------------------------------------------------------------- engine

namespace {

struct GTerm {
    Monomial m;
    mpz_class c;
};
using GPoly = std::vector<GTerm>;

}  // namespace

struct GbStore {
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<GPoly> polys;  // the reduced basis, integer primitive form
};

namespace {

class Engine {
public:
    Engine(const MonomialOrder& order, std::size_t nvars, const Budget& budget)
        : ord_(order), budget_(budget), weights_(nvars, 1) {
        for (std::size_t v = 0; v < nvars && v < order.weights().size(); ++v) weights_[v] = order.weights()[v];
    }

    unsigned wdeg(const Monomial& m) const {
        unsigned d = 0;
        for (std::size_t v = 0; v < m.size(); ++v) d += weights_[v] * m[v];
        return d;
    }

    GPoly from_poly(const Polynomial& p) const {
        mpz_class l = 1;
        for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        GPoly g;
        g.reserve(p.size());
        for (const auto& t : p.terms()) {
            mpq_class s = t.coeff * l;
            g.push_back({t.mono, s.get_num()});
        }
        if (!ord_.is_plain_degrevlex())
            std::sort(g.begin(), g.end(), [&](const GTerm& a, const GTerm& b) { return ord_.greater(a.m, b.m); });
        primitive(g);
        return g;
    }

    static Polynomial to_poly(const GPoly& g, const VarTablePtr& ctx, bool monic) {
        std::vector<Term> ts;
        ts.reserve(g.size());
        for (const auto& t : g) ts.push_back({t.m, mpq_class(t.c)});
        if (monic && !g.empty()) {
            mpq_class lc(g.front().c);
            for (auto& t : ts) t.coeff /= lc;
        }
        return Polynomial::from_terms(ctx, std::move(ts));
    }

    static mpz_class content(const GPoly& p) {
        mpz_class g = 0;
        for (const auto& t : p) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    // Divides by the content and makes the leading coefficient positive; returns
    // the signed divisor used.
    static mpz_class primitive(GPoly& p) {
        if (p.empty()) return 1;
        mpz_class g = content(p);
        if (p.front().c < 0) g = -g;
        if (g != 1)
            for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
        return g;
    }

    // a*p - b*mono*q, with p's term at `skip_equal` cancelling.
    GPoly combine(const GPoly& p, const mpz_class& a, const GPoly& q, const mpz_class& b, const Monomial& mono) const {
        GPoly out;
        out.reserve(p.size() + q.size());
        auto i = p.begin();
        auto j = q.begin();
        Monomial qm;
        bool have_qm = false;
        mpz_class t;
        while (i != p.end() || j != q.end()) {
            if (j != q.end() && !have_qm) {
                qm = mono * j->m;
                have_qm = true;
            }
            int cmp = i == p.end() ? -1 : (j == q.end() ? 1 : ord_.compare(i->m, qm));
            if (cmp > 0) {
                out.push_back({i->m, a * i->c});
                ++i;
            } else if (cmp < 0) {
                out.push_back({qm, -b * j->c});
                ++j;
                have_qm = false;
            } else {
                t = a * i->c - b * j->c;
                if (t != 0) out.push_back({i->m, t});
                ++i;
                ++j;
                have_qm = false;
            }
        }
        if (out.size() > budget_.max_terms) throw ResourceError("term cap exceeded during reduction");
        return out;
    }

    // Index of a reducer whose leading monomial divides m, or -1.
    long find_reducer(const Monomial& m, const std::vector<std::size_t>& reducers) const {
        for (std::size_t k : reducers)
            if (polys_[k].front().m.divides(m)) return static_cast<long>(k);
        return -1;
    }

    // Reduces p by the given reducers.  `scale` (if given) is multiplied by the
    // factor applied to p, so p_out = scale * p_in mod the ideal.
    GPoly reduce(GPoly p, const std::vector<std::size_t>& reducers, bool full, mpq_class* scale) const {
        std::size_t pos = 0;
        unsigned steps = 0;
        while (pos < p.size()) {
            long k = find_reducer(p[pos].m, reducers);
            if (k < 0) {
                if (!full) break;
                ++pos;
                continue;
            }
            const GPoly& g = polys_[k];
            Monomial mono = p[pos].m.quotient(g.front().m);
            mpz_class gg;
            mpz_gcd(gg.get_mpz_t(), p[pos].c.get_mpz_t(), g.front().c.get_mpz_t());
            mpz_class a = g.front().c / gg;
            mpz_class b = p[pos].c / gg;
            if (a < 0) {
                a = -a;
                b = -b;
            }
            p = combine(p, a, g, b, mono);
            if (scale) *scale *= mpq_class(a);
            if (++steps % 16 == 0) {
                mpz_class c = content(p);
                if (c > 1) {
                    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
                    if (scale) *scale /= mpq_class(c);
                }
                budget_.check_time("Groebner reduction");
            }
        }
        return p;
    }

    struct Pair {
        unsigned sugar;
        Monomial lcm;
        std::size_t i, j;
    };
    struct PairLess {
        const Engine* e;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            int c = e->ord_.compare(a.lcm, b.lcm);
            if (c) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    GbStats run(const std::vector<Polynomial>& gens) {
        pairs_ = std::set<Pair, PairLess>(PairLess{this});
        std::vector<GPoly> input;
        for (const auto& g : gens) input.push_back(from_poly(g));
        // small leading monomials first
        std::stable_sort(input.begin(), input.end(),
                         [&](const GPoly& a, const GPoly& b) { return ord_.compare(a.front().m, b.front().m) < 0; });
        for (auto& p : input) {
            unsigned s = 0;
            for (const auto& t : p) s = std::max(s, wdeg(t.m));
            insert(reduce(std::move(p), active_list(), true, nullptr), s);
            if (unit_) return stats_;
        }
        while (!pairs_.empty()) {
            Pair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            if (++stats_.pairs_processed > budget_.max_pairs) throw ResourceError("pair budget exhausted");
            if (pr.lcm.degree() > budget_.max_degree) throw ResourceError("degree budget exhausted");
            budget_.check_time("Buchberger");
            GPoly s = spoly(pr.i, pr.j);
            GPoly h = reduce(std::move(s), active_list(), true, nullptr);
            if (h.empty()) {
                ++stats_.zero_reductions;
                continue;
            }
            insert(std::move(h), pr.sugar);
            if (unit_) return stats_;
        }
        return stats_;
    }

    // Reduced basis, sorted by increasing leading monomial.
    std::vector<GPoly> reduced_basis() {
        std::vector<std::size_t> act = active_list();
        if (unit_) {
            GPoly one{{Monomial(nvars_), mpz_class(1)}};
            return {one};
        }
        std::sort(act.begin(), act.end(),
                  [&](std::size_t a, std::size_t b) { return ord_.compare(polys_[a].front().m, polys_[b].front().m) < 0; });
        std::vector<GPoly> out;
        for (std::size_t k : act) {
            std::vector<std::size_t> others;
            for (std::size_t o : act)
                if (o != k) others.push_back(o);
            out.push_back(reduce_tail(polys_[k], others));
        }
        return out;
    }

    std::size_t nvars_ = 0;

private:
    GPoly reduce_tail(GPoly p, const std::vector<std::size_t>& reducers) const {
        // reduce everything after the leading term
        std::size_t pos = 1;
        while (pos < p.size()) {
            long k = find_reducer(p[pos].m, reducers);
            if (k < 0) {
                ++pos;
                continue;
            }
            const GPoly& g = polys_[k];
            Monomial mono = p[pos].m.quotient(g.front().m);
            mpz_class gg;
            mpz_gcd(gg.get_mpz_t(), p[pos].c.get_mpz_t(), g.front().c.get_mpz_t());
            mpz_class a = g.front().c / gg;
            mpz_class b = p[pos].c / gg;
            if (a < 0) {
                a = -a;
                b = -b;
            }
            p = combine(p, a, g, b, mono);
        }
        primitive(p);
        return p;
    }

    std::vector<std::size_t> active_list() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) out.push_back(k);
        return out;
    }

    GPoly spoly(std::size_t i, std::size_t j) const {
        const GPoly& p = polys_[i];
        const GPoly& q = polys_[j];
        Monomial l = p.front().m.lcm(q.front().m);
        Monomial mp = l.quotient(p.front().m);
        Monomial mq = l.quotient(q.front().m);
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), p.front().c.get_mpz_t(), q.front().c.get_mpz_t());
        mpz_class a = q.front().c / gg;
        mpz_class b = p.front().c / gg;
        // a*mp*p - b*mq*q
        GPoly ps;
        ps.reserve(p.size());
        for (const auto& t : p) ps.push_back({t.m * mp, t.c});
        GPoly out = combine(ps, a, q, b, mq);
        primitive(out);
        return out;
    }

    void insert(GPoly h, unsigned sugar) {
        if (h.empty()) return;
        primitive(h);
        if (h.front().m.is_one()) {
            unit_ = true;
            return;
        }
        for (const auto& t : h)
            if (t.m.degree() > budget_.max_degree) throw ResourceError("degree budget exhausted");
        std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        sugar_.push_back(sugar);
        active_.push_back(false);
        if (polys_.size() > budget_.max_basis) throw ResourceError("basis-size budget exhausted");
        update(hi);
        stats_.max_basis = std::max(stats_.max_basis, active_list().size());
    }

    // Gebauer-Moeller installation of a new element.
    void update(std::size_t h) {
        const Monomial& Lh = polys_[h].front().m;
        std::vector<std::size_t> C = active_list();
        std::vector<Monomial> lcms;
        lcms.reserve(C.size());
        for (std::size_t g : C) lcms.push_back(Lh.lcm(polys_[g].front().m));
        std::vector<std::size_t> D;
        std::vector<const Monomial*> Dl;
        for (std::size_t a = 0; a < C.size(); ++a) {
            const Monomial& la = lcms[a];
            bool keep = Lh.coprime(polys_[C[a]].front().m);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (lcms[b].divides(la)) keep = false;
                for (const Monomial* d : Dl)
                    if (keep && d->divides(la)) keep = false;
            }
            if (keep) {
                D.push_back(a);
                Dl.push_back(&lcms[a]);
            }
        }
        // old pairs made redundant by h
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            if (Lh.divides(it->lcm)) {
                Monomial l1 = polys_[it->i].front().m.lcm(Lh);
                Monomial l2 = polys_[it->j].front().m.lcm(Lh);
                if (l1 != it->lcm && l2 != it->lcm) {
                    it = pairs_.erase(it);
                    continue;
                }
            }
            ++it;
        }
        for (std::size_t a : D) {
            std::size_t g = C[a];
            if (Lh.coprime(polys_[g].front().m)) continue;  // product criterion
            const Monomial& l = lcms[a];
            unsigned wl = wdeg(l);
            unsigned s = std::max(sugar_[g] + wl - wdeg(polys_[g].front().m), sugar_[h] + wl - wdeg(Lh));
            pairs_.insert(Pair{s, l, g, h});
        }
        for (std::size_t g : C)
            if (Lh.divides(polys_[g].front().m)) active_[g] = false;
        active_[h] = true;
    }

    const MonomialOrder& ord_;
    const Budget& budget_;
    std::vector<unsigned> weights_;
    std::vector<GPoly> polys_;
    std::vector<unsigned> sugar_;
    std::vector<bool> active_;
    std::set<Pair, PairLess> pairs_{PairLess{this}};
    bool unit_ = false;
    GbStats stats_;

public:
    // Used by normal-form queries against a finished basis.
    void load(const std::vector<GPoly>& basis) {
        polys_ = basis;
        active_.assign(basis.size(), true);
        sugar_.assign(basis.size(), 0);
    }
    GPoly reduce_all(GPoly p, mpq_class* scale) const { return reduce(std::move(p), active_list(), true, scale); }
    GPoly reduce_top(GPoly p) const { return reduce(std::move(p), active_list(), false, nullptr); }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& I, const Budget& budget) {
    GroebnerBasis G;
    G.ctx_ = I.context();
    G.order_ = I.order();
    Engine e(I.order(), I.context()->size(), budget);
    e.nvars_ = I.context()->size();
    G.stats_ = e.run(I.gens());
    auto basis = e.reduced_basis();
    for (const auto& g : basis) {
        G.elements_.push_back(Engine::to_poly(g, G.ctx_, true));
        G.leads_.push_back(g.front().m);
    }
    auto store = std::make_shared<GbStore>();
    store->order = I.order();
    store->polys = std::move(basis);
    G.store_ = std::move(store);
    return G;
}

bool GroebnerBasis::is_unit() const { return leads_.size() == 1 && leads_[0].is_one(); }

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) {
    if (!same_context(p.context(), G.context())) throw ContextError("normal_form: different tables");
    if (p.is_zero()) return p;
    Budget unlimited = Budget::unlimited();
    Engine e(G.order(), G.context()->size(), unlimited);
    e.load(G.store()->polys);
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    GPoly gp;
    for (const auto& t : p.terms()) {
        mpq_class s = t.coeff * l;
        gp.push_back({t.mono, s.get_num()});
    }
    if (!G.order().is_plain_degrevlex())
        std::sort(gp.begin(), gp.end(), [&](const GTerm& a, const GTerm& b) { return G.order().greater(a.m, b.m); });
    mpq_class scale(l);
    GPoly r = e.reduce_all(std::move(gp), &scale);
    Polynomial out = Engine::to_poly(r, G.context(), false);
    return out * mpq_class(1 / scale);
}

bool reduces_to_zero(const Polynomial& p, const GroebnerBasis& G) {
    if (p.is_zero()) return true;
    if (G.is_unit()) return true;
    Budget unlimited = Budget::unlimited();
    Engine e(G.order(), G.context()->size(), unlimited);
    e.load(G.store()->polys);
    // a nonzero remainder shows up as soon as a top-irreducible leading term appears
    GPoly r = e.reduce_top(e.from_poly(p));
    return r.empty();
}

// ---------------------------------------------------------------- dimension

unsigned monomial_dimension(const std::vector<Monomial>& gens, std::size_t n) {
    if (n > 64) throw DomainError("dimension: more than 64 variables");
    std::vector<std::uint64_t> sup;
    for (const auto& m : gens) {
        if (m.is_one()) throw DomainError("dimension of the unit ideal");
        std::uint64_t s = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (m[v]) s |= std::uint64_t{1} << v;
        sup.push_back(s);
    }
    // keep minimal supports
    std::sort(sup.begin(), sup.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    std::vector<std::uint64_t> minimal;
    for (auto s : sup) {
        bool redundant = false;
        for (auto t : minimal)
            if ((t & s) == t) redundant = true;
        if (!redundant) minimal.push_back(s);
    }
    // largest S containing no support
    unsigned best = 0;
    auto ok = [&](std::uint64_t S) {
        for (auto t : minimal)
            if ((t & S) == t) return false;
        return true;
    };
    auto dfs = [&](auto&& self, std::size_t v, std::uint64_t S, unsigned size) -> void {
        if (size + (n - v) <= best) return;
        if (v == n) {
            best = size;
            return;
        }
        std::uint64_t with = S | (std::uint64_t{1} << v);
        if (ok(with)) self(self, v + 1, with, size + 1);
        self(self, v + 1, S, size);
    };
    dfs(dfs, 0, 0, 0);
    return best;
}

unsigned dimension(const GroebnerBasis& G) {
    if (G.is_unit()) throw DomainError("dimension of the unit ideal");
    return monomial_dimension(G.leading_monomials(), G.context()->size());
}

unsigned dimension(const Ideal& I, const Budget& budget) {
    Ideal J = I.order().kind() == MonomialOrder::Kind::Lex ? I : I.with_order(MonomialOrder::degrevlex());
    return dimension(buchberger(J, budget));
}

unsigned codimension(const Ideal& I, const Budget& budget) {
    return static_cast<unsigned>(I.context()->size()) - dimension(I, budget);
}

// ---------------------------------------------------------------- ideal operations

VarTablePtr extend_table(const VarTablePtr& ctx, const std::vector<Variable>& extra) {
    std::vector<Variable> vars = ctx->vars();
    for (const auto& v : extra) vars.push_back(v);
    return std::make_shared<const VarTable>(std::move(vars));
}

namespace {

Variable fresh_variable(const VarTablePtr& ctx, const std::string& base) {
    std::string name = base;
    for (int k = 0; ctx->find(name); ++k) name = base + std::to_string(k);
    return Variable{name, 0, 0};
}

std::vector<Polynomial> transfer_all(const std::vector<Polynomial>& ps, const VarTablePtr& target) {
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(transfer(p, target));
    return out;
}

void check_same(const Ideal& I, const Ideal& K) {
    if (!same_context(I.context(), K.context())) throw ContextError("ideals over different tables");
}

}  // namespace

Ideal sum(const Ideal& I, const Ideal& K) {
    check_same(I, K);
    std::vector<Polynomial> g = I.gens();
    g.insert(g.end(), K.gens().begin(), K.gens().end());
    return Ideal(I.context(), std::move(g), I.order());
}

Ideal product(const Ideal& I, const Ideal& K) {
    check_same(I, K);
    std::vector<Polynomial> g;
    for (const auto& a : I.gens())
        for (const auto& b : K.gens()) g.push_back(a * b);
    return Ideal(I.context(), std::move(g), I.order());
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& kill, const Budget& budget,
                const std::vector<unsigned>& weights) {
    const std::size_t n = I.context()->size();
    std::vector<bool> block(n, false);
    for (std::size_t v : kill) {
        if (v >= n) throw DomainError("eliminate: variable out of range");
        block[v] = true;
    }
    GroebnerBasis G = buchberger(I.with_order(MonomialOrder::elimination(block, weights)), budget);
    std::vector<Polynomial> keep;
    for (const auto& g : G.elements()) {
        bool uses = false;
        for (std::size_t v : kill) uses = uses || g.uses_variable(v);
        if (!uses) keep.push_back(g);
    }
    return Ideal(I.context(), std::move(keep), I.order());
}

Ideal intersect(const Ideal& I, const Ideal& K, const Budget& budget) {
    check_same(I, K);
    if (I.is_zero() || K.is_zero()) return Ideal::zero(I.context()).with_order(I.order());
    Variable t = fresh_variable(I.context(), "t");
    VarTablePtr ext = extend_table(I.context(), {t});
    const std::size_t tv = ext->size() - 1;
    Polynomial T = Polynomial::variable(ext, tv);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - T;
    std::vector<Polynomial> gens;
    for (const auto& g : transfer_all(I.gens(), ext)) gens.push_back(T * g);
    for (const auto& g : transfer_all(K.gens(), ext)) gens.push_back(one_minus_t * g);
    std::vector<unsigned> w;
    if (!I.order().weights().empty()) {
        w = I.order().weights();
        w.resize(ext->size(), 1);
    }
    Ideal big(ext, std::move(gens));
    Ideal elim = eliminate(big, {tv}, budget, w);
    std::vector<Polynomial> back;
    for (const auto& g : elim.gens()) {
        // drop the t coordinate
        std::vector<Term> ts;
        for (const auto& term : g.terms()) {
            auto e = term.mono.exponents();
            e.pop_back();
            ts.push_back({Monomial(std::move(e)), term.coeff});
        }
        back.push_back(Polynomial::from_terms(I.context(), std::move(ts)));
    }
    return Ideal(I.context(), std::move(back), I.order());
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g, const Budget& budget) {
    if (g.is_zero()) throw DomainError("quotient by the zero polynomial");
    if (I.is_zero()) return I;
    GroebnerBasis G = buchberger(I, budget);
    if (reduces_to_zero(g, G)) return Ideal::unit(I.context()).with_order(I.order());
    Ideal inter = intersect(I, Ideal(I.context(), {g}, I.order()), budget);
    std::vector<Polynomial> q;
    for (const auto& h : inter.gens()) {
        auto d = exact_divide(h, g);
        if (!d) throw Error("internal: intersection generator not divisible by g");
        q.push_back(std::move(*d));
    }
    return Ideal(I.context(), std::move(q), I.order());
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const Budget& budget) {
    check_same(I, J);
    if (J.is_zero()) throw DomainError("quotient by the zero ideal");
    GroebnerBasis G = buchberger(I, budget);
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        if (reduces_to_zero(g, G)) continue;  // I : g is the unit ideal
        Ideal q = ideal_quotient(I, g, budget);
        acc = acc ? intersect(*acc, q, budget) : q;
        // keep generators small: replace by the reduced basis
        acc = Ideal(I.context(), buchberger(*acc, budget).elements(), I.order());
    }
    if (!acc) return Ideal::unit(I.context()).with_order(I.order());
    return *acc;
}

SaturationResult saturation(const Ideal& I, const Ideal& J, const Budget& budget) {
    SaturationResult res{I, 0, false};
    for (;;) {
        Ideal next = ideal_quotient(res.ideal, J, budget);
        ++res.steps;
        GroebnerBasis G = buchberger(next, budget);
        if (G.is_unit()) {
            res.ideal = Ideal::unit(I.context()).with_order(I.order());
            res.unit = true;
            return res;
        }
        // res.ideal is always contained in next
        GroebnerBasis Gcur = buchberger(res.ideal, budget);
        if (contains(Gcur, next)) return res;
        res.ideal = Ideal(I.context(), G.elements(), I.order());
    }
}

std::optional<Polynomial> first_outside(const GroebnerBasis& G, const Ideal& J) {
    for (const auto& g : J.gens())
        if (!reduces_to_zero(g, G)) return g;
    return std::nullopt;
}

bool contains(const GroebnerBasis& G, const Ideal& J) { return !first_outside(G, J); }

bool contains(const Ideal& I, const Ideal& J, const Budget& budget) {
    check_same(I, J);
    return contains(buchberger(I, budget), J);
}

bool equals(const Ideal& I, const Ideal& J, const Budget& budget) {
    return contains(I, J, budget) && contains(J, I, budget);
}

CheckRecord regular_sequence_check(const Ideal& I, const std::vector<Polynomial>& seq, const Budget& budget) {
    CheckRecord rec;
    rec.tag = "regular_sequence";
    rec.certification = Certification::Exact;
    rec.status = Status::Pass;
    Ideal cur = I;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        Ideal q = ideal_quotient(cur, seq[k], budget);
        GroebnerBasis G = buchberger(cur, budget);
        auto out = first_outside(G, q);
        if (out) {
            rec.status = Status::Fail;
            rec.values["failed_step"] = k + 1;
            rec.witnesses.push_back("step " + std::to_string(k + 1) + ": " + out->to_string() + " multiplies " +
                                    seq[k].to_string() + " into the ideal but is not in it");
            return rec;
        }
        cur = sum(cur, Ideal(I.context(), {seq[k]}, I.order()));
    }
    rec.values["length"] = seq.size();
    return rec;
}

bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget) {
    Variable t = fresh_variable(I.context(), "t");
    VarTablePtr ext = extend_table(I.context(), {t});
    Polynomial T = Polynomial::variable(ext, ext->size() - 1);
    std::vector<Polynomial> gens = transfer_all(I.gens(), ext);
    gens.push_back(Polynomial::constant(ext, 1) - T * transfer(f, ext));
    return buchberger(Ideal(ext, std::move(gens)), budget).is_unit();
}

std::vector<std::string> to_strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace detlab
