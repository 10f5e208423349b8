#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "detlab/errors.hpp"

namespace detlab {

// A variable label.  Matrix variables are prefix "x" with a (row, col) pair;
// auxiliary variables (y-coordinates, the t of the intersection trick) use
// other prefixes.  row == 0 means a bare name such as "t".
struct Variable {
    std::string prefix = "x";
    int row = 0;
    int col = 0;

    std::string name() const;
    bool operator==(const Variable& o) const {
        return prefix == o.prefix && row == o.row && col == o.col;
    }
};

class VarTable {
public:
    explicit VarTable(std::vector<Variable> vars);

    // Row-major table of x_i_j over the given pairs (sorted here).
    static std::shared_ptr<const VarTable> from_pairs(std::vector<std::pair<int, int>> pairs,
                                                      const std::string& prefix = "x");

    std::size_t size() const { return vars_.size(); }
    const Variable& operator[](std::size_t v) const { return vars_[v]; }
    const std::vector<Variable>& vars() const { return vars_; }
    std::string name(std::size_t v) const { return vars_[v].name(); }

    std::optional<std::size_t> find(const std::string& name) const;
    std::optional<std::size_t> find(int row, int col, const std::string& prefix = "x") const;
    std::size_t index(int row, int col, const std::string& prefix = "x") const;

    bool operator==(const VarTable& o) const { return vars_ == o.vars_; }

private:
    std::vector<Variable> vars_;
    std::unordered_map<std::string, std::size_t> by_name_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

bool same_context(const VarTablePtr& a, const VarTablePtr& b);

class Monomial {
public:
    using Exp = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exp> exps);

    static Monomial variable(std::size_t nvars, std::size_t v, Exp power = 1);

    std::size_t size() const { return e_.size(); }
    Exp operator[](std::size_t v) const { return e_[v]; }
    const std::vector<Exp>& exponents() const { return e_; }
    std::uint32_t degree() const { return deg_; }
    // Bit (v mod 64) is set when some variable congruent to v occurs.  A
    // necessary condition for divisibility is mask(a) subset of mask(b).
    std::uint64_t support() const { return mask_; }
    bool is_one() const { return deg_ == 0; }

    void set(std::size_t v, Exp e);

    bool divides(const Monomial& o) const;
    bool coprime(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial quotient(const Monomial& o) const;  // requires o | *this
    Monomial lcm(const Monomial& o) const;
    Monomial gcd(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    // Arbitrary fixed total order, for use as a map key.
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

    std::size_t hash() const;

private:
    void recompute();

    std::vector<Exp> e_;
    std::uint32_t deg_ = 0;
    std::uint64_t mask_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Total monomial order.  Variable ordinal 0 is the largest variable.
//  - Lex: first differing exponent decides.
//  - DegRevLex: (weighted) degree, then the last differing exponent, smaller wins.
//  - Elimination: variables flagged in `block` are compared first (degrevlex on
//    the block), then degrevlex on the remaining variables.
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Elimination };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    static MonomialOrder weighted_degrevlex(std::vector<unsigned> weights);
    static MonomialOrder elimination(std::vector<bool> block, std::vector<unsigned> weights = {});

    Kind kind() const { return kind_; }
    const std::vector<bool>& block() const { return block_; }
    const std::vector<unsigned>& weights() const { return weights_; }
    bool is_plain_degrevlex() const { return kind_ == Kind::DegRevLex && weights_.empty(); }

    // <0, 0, >0 as a is smaller, equal, larger than b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string describe() const;
    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && block_ == o.block_ && weights_ == o.weights_;
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    int cmp_drl(const Monomial& a, const Monomial& b, const std::vector<bool>* only,
                bool in_block) const;

    Kind kind_;
    std::vector<bool> block_;
    std::vector<unsigned> weights_;
};

struct Term {
    Monomial mono;
    mpq_class coeff;
};

// Sparse polynomial over Q.  Terms are kept sorted descending in plain degrevlex,
// so two polynomials are equal iff their term vectors are equal.
class Polynomial {
public:
    Polynomial() = default;  // detached zero; must be given a context before use
    explicit Polynomial(VarTablePtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(VarTablePtr ctx, const mpq_class& c);
    static Polynomial variable(VarTablePtr ctx, std::size_t v);
    static Polynomial monomial(VarTablePtr ctx, Monomial m, const mpq_class& c = 1);
    static Polynomial from_terms(VarTablePtr ctx, std::vector<Term> terms);

    const VarTablePtr& context() const { return ctx_; }
    std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_homogeneous() const;
    unsigned total_degree() const;  // DomainError on zero
    // Coefficient of a given monomial (0 when absent).
    mpq_class coefficient(const Monomial& m) const;
    bool uses_variable(std::size_t v) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const mpq_class& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial mul_term(const Monomial& m, const mpq_class& c) const;
    Polynomial pow(unsigned k) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Integer primitive part with positive leading coefficient (degrevlex).
    Polynomial primitive() const;
    // Scaled so the degrevlex-leading coefficient is 1.
    Polynomial monic() const;

    std::string to_string(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

    std::size_t hash() const;

private:
    friend Polynomial add_scaled(const Polynomial&, const Polynomial&, const mpq_class&,
                                 const Monomial*);
    void check_ctx(const Polynomial& o) const;

    VarTablePtr ctx_;
    std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };
Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op);

// p + c * m * q  (m may be null for the unit monomial)
Polynomial add_scaled(const Polynomial& p, const Polynomial& q, const mpq_class& c,
                      const Monomial* m = nullptr);

Polynomial derivative(const Polynomial& p, std::size_t v);

// Ring endomorphism: listed variables go to their images, the rest are fixed.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images);

// Ring map into another context: variable v goes to images[v] (all images must
// share one target context).  Requires images.size() == p.nvars().
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images,
                   const VarTablePtr& target);

// Re-express p over another table that contains all of p's variables (matched by name).
Polynomial transfer(const Polynomial& p, const VarTablePtr& target);

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d,
                                       const MonomialOrder& order = MonomialOrder::degrevlex());

Term leading_term(const Polynomial& p, const MonomialOrder& order);

std::string monomial_to_string(const Monomial& m, const VarTable& vt);

// Parses the canonical text form (also accepts parentheses and repeated factors).
Polynomial parse_polynomial(const std::string& text, const VarTablePtr& ctx);

}  // namespace detlab
