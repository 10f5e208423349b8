#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detlab/budget.hpp"
#include "detlab/poly.hpp"
#include "detlab/report.hpp"

namespace detlab {

class Ideal {
public:
    Ideal(VarTablePtr ctx, std::vector<Polynomial> gens, MonomialOrder order = MonomialOrder::degrevlex());

    static Ideal zero(VarTablePtr ctx) { return Ideal(std::move(ctx), {}); }
    static Ideal unit(VarTablePtr ctx);

    const VarTablePtr& context() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const MonomialOrder& order() const { return order_; }
    bool is_zero() const { return gens_.empty(); }

    Ideal with_order(MonomialOrder o) const { return Ideal(ctx_, gens_, std::move(o)); }

private:
    VarTablePtr ctx_;
    std::vector<Polynomial> gens_;  // nonzero, duplicates (up to scalar) removed
    MonomialOrder order_;
};

struct GbStore;  // engine-side representation, cached for normal forms

struct GbStats {
    std::size_t pairs_processed = 0;
    std::size_t zero_reductions = 0;
    std::size_t max_basis = 0;
};

class GroebnerBasis {
public:
    const VarTablePtr& context() const { return ctx_; }
    const MonomialOrder& order() const { return order_; }
    // Reduced, monic, sorted by increasing leading monomial.
    const std::vector<Polynomial>& elements() const { return elements_; }
    const std::vector<Monomial>& leading_monomials() const { return leads_; }
    bool is_unit() const;
    const GbStats& stats() const { return stats_; }
    const std::shared_ptr<const GbStore>& store() const { return store_; }

private:
    friend GroebnerBasis buchberger(const Ideal&, const Budget&);
    VarTablePtr ctx_;
    MonomialOrder order_ = MonomialOrder::degrevlex();
    std::vector<Polynomial> elements_;
    std::vector<Monomial> leads_;
    GbStats stats_;
    std::shared_ptr<const GbStore> store_;
};

// Reduced Groebner basis: normal selection by sugar (weighted lcm degree for
// the order's weights), Gebauer-Moeller pair criteria, fraction-free
// reduction with content removal.
GroebnerBasis buchberger(const Ideal& I, const Budget& budget = {});

// Unique remainder of p modulo the basis (exact over Q).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);
bool reduces_to_zero(const Polynomial& p, const GroebnerBasis& G);

// Krull dimension of R/I from the initial ideal.  DomainError for the unit ideal.
unsigned dimension(const GroebnerBasis& G);
unsigned dimension(const Ideal& I, const Budget& budget = {});
unsigned codimension(const Ideal& I, const Budget& budget = {});

// Dimension of R/(monomial ideal given by supports) by maximal independent sets.
unsigned monomial_dimension(const std::vector<Monomial>& gens, std::size_t nvars);

Ideal sum(const Ideal& I, const Ideal& K);
Ideal product(const Ideal& I, const Ideal& K);  // generator-wise, no minimalization
Ideal intersect(const Ideal& I, const Ideal& K, const Budget& budget = {});
Ideal ideal_quotient(const Ideal& I, const Polynomial& g, const Budget& budget = {});
Ideal ideal_quotient(const Ideal& I, const Ideal& J, const Budget& budget = {});

struct SaturationResult {
    Ideal ideal;
    unsigned steps = 0;
    bool unit = false;
};
SaturationResult saturation(const Ideal& I, const Ideal& J, const Budget& budget = {});

bool contains(const GroebnerBasis& G, const Ideal& J);
bool contains(const Ideal& I, const Ideal& J, const Budget& budget = {});
bool equals(const Ideal& I, const Ideal& J, const Budget& budget = {});
// First generator of J not in I, if any.
std::optional<Polynomial> first_outside(const GroebnerBasis& G, const Ideal& J);

// Generators of I intersected with the subring without the killed variables
// (result stays in I's table and order).
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& kill, const Budget& budget = {},
                const std::vector<unsigned>& weights = {});

// Prefix-wise quotient test ((I, a_1..a_k) : a_{k+1}) = (I, a_1..a_k).
CheckRecord regular_sequence_check(const Ideal& I, const std::vector<Polynomial>& seq,
                                   const Budget& budget = {});

// f in rad(I) iff 1 in (I, 1 - t f).
bool radical_member(const Polynomial& f, const Ideal& I, const Budget& budget = {});

// Table with fresh variables appended (names must be new).
VarTablePtr extend_table(const VarTablePtr& ctx, const std::vector<Variable>& extra);

std::vector<std::string> to_strings(const std::vector<Polynomial>& ps);

}  // namespace detlab
