#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "detlab/poly.hpp"

namespace detlab {

enum class Family { Generic, Cloned, Zeros, Custom };

std::string to_string(Family f);
Family family_from_string(const std::string& s);  // SpecError on unknown names

// Cells hold a variable pair or nothing (a zero entry).  Only Custom specs carry
// explicit cells; the other families derive theirs from (m, r).  Custom grids may
// be rectangular.
struct MatrixSpec {
    int m = 0;
    Family family = Family::Generic;
    int r = 0;
    std::vector<std::vector<std::optional<std::pair<int, int>>>> entries;

    static MatrixSpec generic(int m) { return {m, Family::Generic, 0, {}}; }
    static MatrixSpec cloned(int m) { return {m, Family::Cloned, 0, {}}; }
    static MatrixSpec zeros(int m, int r) { return {m, Family::Zeros, r, {}}; }
    static MatrixSpec custom(std::vector<std::vector<std::optional<std::pair<int, int>>>> cells);

    // Cell assignment after applying the family rule (validates the spec).
    std::vector<std::vector<std::optional<std::pair<int, int>>>> cells() const;
    void validate() const;

    nlohmann::json to_json() const;
    static MatrixSpec from_json(const nlohmann::json& j);
};

using PolyGrid = std::vector<std::vector<Polynomial>>;

class SymbolicMatrix {
public:
    SymbolicMatrix(MatrixSpec spec, VarTablePtr vars, PolyGrid cells)
        : spec_(std::move(spec)), vars_(std::move(vars)), cells_(std::move(cells)) {}

    const MatrixSpec& spec() const { return spec_; }
    const VarTablePtr& vars() const { return vars_; }
    const PolyGrid& cells() const { return cells_; }
    int rows() const { return static_cast<int>(cells_.size()); }
    int cols() const { return cells_.empty() ? 0 : static_cast<int>(cells_[0].size()); }
    int size() const { return rows(); }
    // 1-based access.
    const Polynomial& at(int i, int j) const { return cells_[i - 1][j - 1]; }

private:
    MatrixSpec spec_;
    VarTablePtr vars_;
    PolyGrid cells_;
};

SymbolicMatrix build(const MatrixSpec& spec);

// Determinant of a square grid of arbitrary polynomials by column-subset DP.
Polynomial determinant(const PolyGrid& g, const VarTablePtr& ctx);
Polynomial determinant(const SymbolicMatrix& M);

// Determinant together with every signed cofactor (row-major, 0-based [i][j]) from
// one prefix/suffix minor table.
struct CofactorTable {
    Polynomial det;
    PolyGrid cof;  // cof[i][j] = (-1)^{i+j} det(M without row i, column j)
};
CofactorTable cofactor_table(const PolyGrid& g, const VarTablePtr& ctx);

// Signed cofactor of entry (i, j), 1-based.
Polynomial cofactor(const SymbolicMatrix& M, int i, int j);

// adj[k][l] = cofactor(l, k) (0-based grid).
PolyGrid adjugate(const SymbolicMatrix& M);
PolyGrid adjugate(const PolyGrid& g, const VarTablePtr& ctx);

PolyGrid grid_multiply(const PolyGrid& a, const PolyGrid& b, const VarTablePtr& ctx);

// One generator per variable, in ordinal order: the sum of the cofactors of all
// cells carrying that variable.
std::vector<Polynomial> gradient_generators(const SymbolicMatrix& M);

// All m^2 signed cofactors, row-major by entry.
std::vector<Polynomial> submaximal_minors(const SymbolicMatrix& M);

// All nonzero k-minors of a rectangular grid.
std::vector<Polynomial> minors(const PolyGrid& g, int k, const VarTablePtr& ctx);

enum class Strip { Rows, Cols };
// N_j = last j rows, M_j = last j columns; j-minors of the strip.  j = 0 gives [1].
std::vector<Polynomial> corner_strip_minors(const SymbolicMatrix& M, int j, Strip side);

nlohmann::json grid_to_json(const PolyGrid& g);

}  // namespace detlab
