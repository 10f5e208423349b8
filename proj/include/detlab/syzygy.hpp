#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "detlab/budget.hpp"
#include "detlab/matrix.hpp"
#include "detlab/modp.hpp"
#include "detlab/report.hpp"

namespace detlab {

// Matrix of linear forms (or zeros) over a variable table.
class LinearFormMatrix {
public:
    LinearFormMatrix(VarTablePtr vars, PolyGrid entries);  // DomainError on non-linear entries

    const VarTablePtr& vars() const { return vars_; }
    const PolyGrid& entries() const { return entries_; }
    std::size_t rows() const { return entries_.size(); }
    std::size_t cols() const { return entries_.empty() ? 0 : entries_[0].size(); }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r][c]; }

    std::vector<Polynomial> column(std::size_t c) const;
    LinearFormMatrix without_row(std::size_t r) const;

    nlohmann::json to_json() const;

private:
    VarTablePtr vars_;
    PolyGrid entries_;
};

struct LinearSyzygySpace {
    VarTablePtr vars;
    std::size_t ngens = 0;
    // generators[k][g] is the linear form multiplying generator g in the k-th relation
    std::vector<std::vector<Polynomial>> generators;

    std::size_t dimension() const { return generators.size(); }
    // ngens x dimension matrix whose columns are the basis relations.
    LinearFormMatrix as_matrix() const;
};

// Exact basis of the linear relations among homogeneous generators of one degree.
LinearSyzygySpace linear_syzygies(const std::vector<Polynomial>& gens, const Budget& budget = {});

// Rank of the relation matrix; the upper bound #gens - 1 is supplied automatically,
// so an exact certificate is reached when opts.exact is set and the evaluation
// rank attains it.
RankCertificate linear_rank(const LinearSyzygySpace& space, RankOptions opts = {});

// Is the column (one linear form per generator) in the span of the space?
bool in_span(const LinearSyzygySpace& space, const std::vector<Polynomial>& column);

// Explicit block matrices of relations.  Row k corresponds to the gradient
// generator of variable generator_order[k]; the ordering is part of the contract.
struct SyzygyBlocks {
    LinearFormMatrix matrix;
    std::vector<std::size_t> generator_order;
    std::vector<std::string> row_labels;
    std::vector<std::string> column_blocks;  // block name of each column
};

SyzygyBlocks build_cloned_blocks(int m);
SyzygyBlocks build_zeros_blocks(int m, int r);

std::vector<Polynomial> reorder(const std::vector<Polynomial>& gens, const std::vector<std::size_t>& order);

// PASS iff gens^t * S = 0 column by column.
CheckRecord verify_syzygy(const LinearFormMatrix& S, const std::vector<Polynomial>& gens);

// Evaluates the square matrix left after deleting row `row` at random integer
// points and reports whether its determinant is nonzero (an exact certificate
// when it is).
struct NonsingularResult {
    bool nonzero = false;
    std::size_t rank_at_point = 0;
    std::size_t attempts = 0;
};
NonsingularResult deleted_row_nonsingular(const LinearFormMatrix& S, std::size_t row, std::uint64_t seed);

}  // namespace detlab
