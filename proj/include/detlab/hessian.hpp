#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detlab/budget.hpp"
#include "detlab/groebner.hpp"
#include "detlab/matrix.hpp"
#include "detlab/modp.hpp"
#include "detlab/report.hpp"

namespace detlab {

struct HessianRecord {
    PolyGrid matrix;  // symmetric, indexed by variable ordinal
    std::optional<RankCertificate> rank;
    std::optional<Polynomial> det;
};

HessianRecord hessian(const Polynomial& f);

// Rows are generators, columns variables of ctx.
PolyGrid jacobian(const std::vector<Polynomial>& gens, const VarTablePtr& ctx);

// Rank of H(f) over the fraction field.  The exact path always runs: an integer
// point gives a lower bound, and the upper bound is #vars, or #vars - rank JG at
// an image point when `relations` (polynomials in the gradient coordinates,
// one coordinate per variable) are supplied.  The relations are checked to vanish
// on the gradient first (skipped when the caller has already proven it);
// DomainError if they do not.
RankCertificate hessian_rank(const Polynomial& f, RankOptions opts = {},
                             const std::vector<Polynomial>& relations = {}, bool relations_checked = false);

// Diagonal specialization of the cloned Hessian (kills every variable off the
// diagonal set x_{1,1}..x_{m-1,m-1}).
CheckRecord diag_specialization_check(int m);

// Anti-diagonal specialization for the zeros family on the submatrix of second
// partials over {x_{i,j} : r+2 <= i+j <= 2m-r}.
CheckRecord antidiag_specialization_check(int m, int r);

// Largest k with f^k | h.  DomainError for f = 0 or constant f.
unsigned factor_multiplicity(const Polynomial& h, const Polynomial& f);

// Exact Hessian determinant (desk scale: a handful of variables).
Polynomial hessian_determinant(const Polynomial& f, const Budget& budget = {});

// Multiplicity of f in h(f) along the line a + t*b with random integer a, b.
struct LineMultiplicity {
    unsigned multiplicity = 0;
    unsigned h_degree = 0;            // degree of the restricted Hessian determinant in t
    std::vector<long> a, b;           // the line
    Polynomial residual;              // restricted h / restricted f^multiplicity
    std::optional<bool> residual_matches;  // residual vs the restricted reference, up to scalar
};
LineMultiplicity line_restricted_multiplicity(const Polynomial& f, std::uint64_t seed,
                                              const std::optional<Polynomial>& reference = std::nullopt);

enum class Homaloidal { Yes, No, Undetermined };
std::string to_string(Homaloidal h);

struct PolarProfile {
    RankCertificate hessian;
    std::optional<RankCertificate> linear;  // absent when the Hessian already decides
    std::size_t generators = 0;             // mu: number of distinct nonzero partials
    Homaloidal homaloidal = Homaloidal::Undetermined;
    std::string reason;
};

PolarProfile homaloidal_check(const Polynomial& f, const RankOptions& opts = {},
                              const std::vector<Polynomial>& relations = {}, bool relations_checked = false);
PolarProfile homaloidal_check(const SymbolicMatrix& M, const RankOptions& opts = {});

// Image of the map given by all m^2 cofactors, y_{k,l} -> cofactor of entry (k,l).
struct ImageEquation {
    VarTablePtr y;                       // generic m x m table in y
    std::size_t jacobian_rank = 0;       // rank of the cofactor map
    std::vector<Polynomial> eliminated;  // generators of the elimination ideal
    std::optional<Polynomial> equation;  // set when the image is a hypersurface
    std::string warning;
};
ImageEquation minors_image_equation(const SymbolicMatrix& M, const Budget& budget = {});

// D_{m,m} - D_{m-1,m-1} over the generic y matrix.
Polynomial corner_cofactor_difference(const VarTablePtr& y, int m);

// Substitutes the cofactors into D_{m,m} - D_{m-1,m-1}; PASS iff identically zero.
CheckRecord image_substitution_check(const SymbolicMatrix& M);

// Ladder in y-variables paired with the gradient; y_{i,j} -> df/dx_{i,j}.
struct DualLadder {
    VarTablePtr y;
    std::vector<Polynomial> images;  // per y ordinal, over the matrix table
    std::vector<std::vector<std::optional<std::size_t>>> cells;  // y ordinals, nullopt outside the ladder
    std::vector<Polynomial> minors;  // 2-minors with all four cells inside
    std::vector<Polynomial> extra;   // the quadrics g, h (cloned only)
};
DualLadder dual_ladder(const SymbolicMatrix& M);

// Every ladder minor (and extra quadric) pulled back to x is divisible by f.  With
// with_codim, the codimension of I_2(ladder) in k[y] is computed too.
CheckRecord dual_ladder_check(const SymbolicMatrix& M, bool with_codim, const Budget& budget = {});

// (m-r)-minors of rows i_1 < ... < i_{m-r} <= m-1 and columns 1..(m - i_{m-r} + m-r-1),
// zeros family.
std::vector<Polynomial> polar_ladder(const SymbolicMatrix& M);

// One witness per ladder minor that does not vanish on the gradient (empty when all do).
std::vector<std::string> polar_ladder_residuals(const SymbolicMatrix& M);

// PASS iff every polar ladder minor vanishes on the gradient; with_codim adds the
// codimension of the ladder ideal.
CheckRecord polar_ladder_check(const SymbolicMatrix& M, bool with_codim, const Budget& budget = {});

}  // namespace detlab
