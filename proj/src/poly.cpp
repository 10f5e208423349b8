#include "detlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace detlab {

// ---------------------------------------------------------------- VarTable

std::string Variable::name() const {
    if (row == 0) return prefix;
    return prefix + "_" + std::to_string(row) + "_" + std::to_string(col);
}

VarTable::VarTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto [it, fresh] = by_name_.emplace(vars_[i].name(), i);
        if (!fresh) throw DomainError("duplicate variable " + vars_[i].name());
    }
}

VarTablePtr VarTable::from_pairs(std::vector<std::pair<int, int>> pairs, const std::string& prefix) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<Variable> vars;
    vars.reserve(pairs.size());
    for (auto [i, j] : pairs) vars.push_back({prefix, i, j});
    return std::make_shared<const VarTable>(std::move(vars));
}

std::optional<std::size_t> VarTable::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> VarTable::find(int row, int col, const std::string& prefix) const {
    return find(Variable{prefix, row, col}.name());
}

std::size_t VarTable::index(int row, int col, const std::string& prefix) const {
    auto v = find(row, col, prefix);
    if (!v) throw DomainError("no variable " + Variable{prefix, row, col}.name());
    return *v;
}

bool same_context(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exp> exps) : e_(std::move(exps)) { recompute(); }

Monomial Monomial::variable(std::size_t nvars, std::size_t v, Exp power) {
    Monomial m(nvars);
    m.set(v, power);
    return m;
}

void Monomial::recompute() {
    deg_ = 0;
    mask_ = 0;
    for (std::size_t v = 0; v < e_.size(); ++v) {
        deg_ += e_[v];
        if (e_[v]) mask_ |= std::uint64_t{1} << (v & 63);
    }
}

void Monomial::set(std::size_t v, Exp e) {
    e_[v] = e;
    recompute();
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_ || (mask_ & ~o.mask_)) return false;
    for (std::size_t v = 0; v < e_.size(); ++v)
        if (e_[v] > o.e_[v]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const {
    if (e_.size() <= 64) return (mask_ & o.mask_) == 0;
    for (std::size_t v = 0; v < e_.size(); ++v)
        if (e_[v] && o.e_[v]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t v = 0; v < e_.size(); ++v) {
        unsigned s = unsigned(e_[v]) + o.e_[v];
        if (s > 0xFFFF) throw DomainError("exponent overflow");
        r.e_[v] = static_cast<Exp>(s);
    }
    r.deg_ = deg_ + o.deg_;
    r.mask_ = mask_ | o.mask_;
    return r;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t v = 0; v < e_.size(); ++v) r.e_[v] = static_cast<Exp>(e_[v] - o.e_[v]);
    r.recompute();
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t v = 0; v < e_.size(); ++v) r.e_[v] = std::max(e_[v], o.e_[v]);
    r.recompute();
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    r.e_.resize(e_.size());
    for (std::size_t v = 0; v < e_.size(); ++v) r.e_[v] = std::min(e_[v], o.e_[v]);
    r.recompute();
    return r;
}

std::size_t Monomial::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (Exp x : e_) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------- orders

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<unsigned> weights) {
    MonomialOrder o(Kind::DegRevLex);
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<bool> block, std::vector<unsigned> weights) {
    MonomialOrder o(Kind::Elimination);
    o.block_ = std::move(block);
    o.weights_ = std::move(weights);
    return o;
}

namespace {

inline int plain_drl(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    for (std::size_t v = x.size(); v-- > 0;)
        if (x[v] != y[v]) return x[v] < y[v] ? 1 : -1;
    return 0;
}

struct DrlGreater {
    bool operator()(const Term& a, const Term& b) const { return plain_drl(a.mono, b.mono) > 0; }
};

}  // namespace

int MonomialOrder::cmp_drl(const Monomial& a, const Monomial& b, const std::vector<bool>* only,
                           bool in_block) const {
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    const std::size_t n = x.size();
    auto selected = [&](std::size_t v) {
        if (!only) return true;
        bool flag = v < only->size() && (*only)[v];
        return flag == in_block;
    };
    unsigned long long da = 0, db = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!selected(v)) continue;
        unsigned w = v < weights_.size() ? weights_[v] : 1;
        da += static_cast<unsigned long long>(w) * x[v];
        db += static_cast<unsigned long long>(w) * y[v];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t v = n; v-- > 0;) {
        if (!selected(v)) continue;
        if (x[v] != y[v]) return x[v] < y[v] ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex: {
            const auto& x = a.exponents();
            const auto& y = b.exponents();
            for (std::size_t v = 0; v < x.size(); ++v)
                if (x[v] != y[v]) return x[v] > y[v] ? 1 : -1;
            return 0;
        }
        case Kind::DegRevLex:
            if (weights_.empty()) return plain_drl(a, b);
            return cmp_drl(a, b, nullptr, true);
        case Kind::Elimination: {
            int c = cmp_drl(a, b, &block_, true);
            if (c) return c;
            return cmp_drl(a, b, &block_, false);
        }
    }
    return 0;
}

std::string MonomialOrder::describe() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::DegRevLex: return weights_.empty() ? "degrevlex" : "weighted-degrevlex";
        case Kind::Elimination: return "elimination";
    }
    return "?";
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(VarTablePtr ctx, const mpq_class& c) {
    Polynomial p(ctx);
    if (c != 0) p.terms_.push_back({Monomial(ctx->size()), c});
    return p;
}

Polynomial Polynomial::variable(VarTablePtr ctx, std::size_t v) {
    if (v >= ctx->size()) throw DomainError("variable ordinal out of range");
    Polynomial p(ctx);
    p.terms_.push_back({Monomial::variable(ctx->size(), v), 1});
    return p;
}

Polynomial Polynomial::monomial(VarTablePtr ctx, Monomial m, const mpq_class& c) {
    Polynomial p(ctx);
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(VarTablePtr ctx, std::vector<Term> terms) {
    Polynomial p(std::move(ctx));
    std::sort(terms.begin(), terms.end(), DrlGreater{});
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

unsigned Polynomial::total_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero polynomial");
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.degree());
    return d;
}

mpq_class Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
        return plain_drl(t.mono, x) > 0;
    });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

bool Polynomial::uses_variable(std::size_t v) const {
    for (const auto& t : terms_)
        if (t.mono[v]) return true;
    return false;
}

void Polynomial::check_ctx(const Polynomial& o) const {
    if (!ctx_ || !o.ctx_) return;
    if (!same_context(ctx_, o.ctx_)) throw ContextError("polynomials over different variable tables");
}

Polynomial add_scaled(const Polynomial& p, const Polynomial& q, const mpq_class& c,
                      const Monomial* m) {
    p.check_ctx(q);
    Polynomial r(p.ctx_ ? p.ctx_ : q.ctx_);
    if (c == 0 || q.terms_.empty()) {
        r.terms_ = p.terms_;
        return r;
    }
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto i = p.terms_.begin();
    auto j = q.terms_.begin();
    Monomial scratch;
    while (i != p.terms_.end() || j != q.terms_.end()) {
        if (j == q.terms_.end()) {
            r.terms_.push_back(*i++);
            continue;
        }
        const Monomial& qm = m ? (scratch = *m * j->mono) : j->mono;
        int cmp = i == p.terms_.end() ? -1 : plain_drl(i->mono, qm);
        if (cmp > 0) {
            r.terms_.push_back(*i++);
        } else if (cmp < 0) {
            r.terms_.push_back({qm, c * j->coeff});
            ++j;
        } else {
            mpq_class s = i->coeff + c * j->coeff;
            if (s != 0) r.terms_.push_back({i->mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return add_scaled(*this, o, 1); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return add_scaled(*this, o, -1); }

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator*(const mpq_class& c) const {
    if (c == 0) return Polynomial(ctx_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const mpq_class& c) const {
    Polynomial r(ctx_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ctx(o);
    VarTablePtr ctx = ctx_ ? ctx_ : o.ctx_;
    if (terms_.empty() || o.terms_.empty()) return Polynomial(ctx);
    if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(ctx, std::move(prod));
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(ctx_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ctx_ && o.ctx_ && !same_context(ctx_, o.ctx_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::primitive() const {
    if (terms_.empty()) return *this;
    mpz_class g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    mpq_class scale(l, g);
    if (terms_.front().coeff < 0) scale = -scale;
    return *this * scale;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return *this * mpq_class(1 / terms_.front().coeff);
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h = h * 1000003u ^ t.mono.hash();
        h = h * 31u ^ mpz_get_ui(t.coeff.get_num_mpz_t());
        h = h * 31u ^ mpz_get_ui(t.coeff.get_den_mpz_t());
    }
    return h;
}

std::string monomial_to_string(const Monomial& m, const VarTable& vt) {
    std::string s;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (!m[v]) continue;
        if (!s.empty()) s += '*';
        s += vt.name(v);
        if (m[v] > 1) s += '^' + std::to_string(m[v]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string(const MonomialOrder& order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    if (!order.is_plain_degrevlex())
        std::sort(ts.begin(), ts.end(),
                  [&](const Term* a, const Term* b) { return order.greater(a->mono, b->mono); });
    std::string out;
    bool first = true;
    for (const Term* t : ts) {
        mpq_class c = t->coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        bool unit = c == 1;
        if (t->mono.is_one()) {
            out += c.get_str();
        } else {
            if (!unit) out += c.get_str() + "*";
            out += monomial_to_string(t->mono, *ctx_);
        }
    }
    return out;
}

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return p + q;
        case ArithOp::Sub: return p - q;
        case ArithOp::Mul: return p * q;
    }
    return p;
}

// ---------------------------------------------------------------- calculus & maps

Polynomial derivative(const Polynomial& p, std::size_t v) {
    if (v >= p.nvars()) throw DomainError("variable ordinal out of range");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        auto e = t.mono[v];
        if (!e) continue;
        Monomial m = t.mono;
        m.set(v, static_cast<Monomial::Exp>(e - 1));
        out.push_back({std::move(m), t.coeff * e});
    }
    // dividing by x_v preserves degrevlex order, but from_terms is cheap on sorted input
    return Polynomial::from_terms(p.context(), std::move(out));
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images,
                   const VarTablePtr& target) {
    if (images.size() != p.nvars()) throw DomainError("compose: image count mismatch");
    for (const auto& im : images)
        if (im.context() && !same_context(im.context(), target))
            throw ContextError("compose: images over different tables");
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
        while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
        return pw[e];
    };
    std::vector<Term> acc;
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t v = 0; v < t.mono.size() && !prod.is_zero(); ++v)
            if (t.mono[v]) prod = prod * power(v, t.mono[v]);
        for (const auto& s : prod.terms()) acc.push_back(s);
    }
    return Polynomial::from_terms(target, std::move(acc));
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images) {
    const auto& ctx = p.context();
    std::vector<Polynomial> full;
    full.reserve(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        auto it = images.find(v);
        if (it == images.end()) {
            full.push_back(Polynomial::variable(ctx, v));
        } else {
            if (it->second.context() && !same_context(it->second.context(), ctx))
                throw ContextError("substitute: image over a different table");
            full.push_back(it->second.context() ? it->second : Polynomial(ctx));
        }
    }
    return compose(p, full, ctx);
}

Polynomial transfer(const Polynomial& p, const VarTablePtr& target) {
    if (same_context(p.context(), target)) {
        Polynomial q(target);
        return q + p;
    }
    const auto& src = *p.context();
    std::vector<std::size_t> map(src.size());
    for (std::size_t v = 0; v < src.size(); ++v) {
        auto w = target->find(src.name(v));
        map[v] = w ? *w : static_cast<std::size_t>(-1);
    }
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Exp> e(target->size(), 0);
        for (std::size_t v = 0; v < src.size(); ++v) {
            if (!t.mono[v]) continue;
            if (map[v] == static_cast<std::size_t>(-1))
                throw ContextError("transfer: variable " + src.name(v) + " missing in target");
            e[map[v]] = t.mono[v];
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

Term leading_term(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw DomainError("leading term of the zero polynomial");
    if (order.is_plain_degrevlex()) return p.terms().front();
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d,
                                       const MonomialOrder& order) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    const auto& ctx = p.context() ? p.context() : d.context();
    if (p.context() && d.context() && !same_context(p.context(), d.context()))
        throw ContextError("exact_divide: different tables");
    Term ld = leading_term(d, order);
    Polynomial r = p;
    std::vector<Term> q;
    while (!r.is_zero()) {
        Term lr = leading_term(r, order);
        if (!ld.mono.divides(lr.mono)) return std::nullopt;
        Monomial m = lr.mono.quotient(ld.mono);
        mpq_class c = lr.coeff / ld.coeff;
        r = add_scaled(r, d, -c, &m);
        q.push_back({std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(ctx, std::move(q));
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(const std::string& s, const VarTablePtr& ctx) : s_(s), ctx_(ctx) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("parse error at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc(ctx_);
        bool neg = false;
        skip();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        for (;;) {
            Polynomial t = term();
            acc = neg ? acc - t : acc + t;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                break;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent expected");
            base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("')' expected");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class num(s_.substr(start, pos_ - start));
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (start == pos_) fail("denominator expected");
                mpz_class den(s_.substr(start, pos_ - start));
                if (den == 0) fail("zero denominator");
                mpq_class q(num, den);
                q.canonicalize();
                return Polynomial::constant(ctx_, q);
            }
            return Polynomial::constant(ctx_, mpq_class(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto v = ctx_->find(name);
            if (!v) fail("unknown variable " + name);
            return Polynomial::variable(ctx_, *v);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    VarTablePtr ctx_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarTablePtr& ctx) {
    return Parser(text, ctx).parse();
}

}  // namespace detlab
