#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "detlab/budget.hpp"
#include "detlab/poly.hpp"

namespace detlab {

// Sparse integer row: strictly increasing column indices, nonzero values.
using SparseRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

// Incremental fraction-free row echelon form over Z (hence over Q).  Rows are
// fed one at a time; each is reduced against the existing pivots and, if
// nonzero, becomes a new pivot row (kept primitive).
class SparseEchelon {
public:
    explicit SparseEchelon(std::uint32_t ncols) : ncols_(ncols) {}

    // Returns true when the row was independent of those already added.
    bool add_row(SparseRow row);

    std::size_t rank() const { return pivots_.size(); }
    std::uint32_t cols() const { return ncols_; }
    bool is_pivot(std::uint32_t c) const { return pivots_.count(c) != 0; }

    // Basis of the right kernel {x : A x = 0}, one integer vector per free
    // column, normalized to primitive integer vectors.
    std::vector<std::vector<mpz_class>> kernel() const;

    void set_budget(const Budget* b) { budget_ = b; }

private:
    std::uint32_t ncols_;
    std::map<std::uint32_t, SparseRow> pivots_;  // leading column -> row
    const Budget* budget_ = nullptr;
};

void make_primitive(SparseRow& row);

using PolyGrid = std::vector<std::vector<Polynomial>>;

// Fraction-free (Bareiss) determinant with row pivoting on polynomial entries.
// Each intermediate division is exact; the term count of intermediates is capped
// by budget.max_terms.
Polynomial bareiss_determinant(PolyGrid g, const VarTablePtr& ctx, const Budget& budget = {});

// Rank over the fraction field by fraction-free elimination; same caps.
std::size_t bareiss_rank(PolyGrid g, const VarTablePtr& ctx, const Budget& budget = {});

}  // namespace detlab
