#pragma once

#include <string>
#include <vector>

#include "enclose/interval_linalg.hpp"
#include "enclose/sl_problem.hpp"
#include "enclose/trigpoly.hpp"

namespace enclose {

struct BasisDegenerate : Error {
    using Error::Error;
};

// One dof of the piecewise basis: polynomial pieces in element-local charts.
struct ShapePiece {
    int element = 0;
    IvPoly p;  // in the element chart, t in [-1,1]
};

// Gram data of a test-function space on one cell, entries as intervals:
// m0 = <f_i, f_j>, m1 = <H f_i, f_j>, m2 = <H f_i, H f_j>.
struct GramTriple {
    IntervalMatrix m0, m1, m2;
    bool has_m2 = false;
    std::string descriptor;

    // piecewise path: element joints (cell coordinates) and per-dof shapes
    std::vector<PiAffine> joints;
    std::vector<std::vector<ShapePiece>> shapes;
    std::vector<double> dof_scale;  // diagonal conditioning scale per dof

    // explicit-basis path
    std::vector<TrigPoly> basis;

    int dim() const { return m0.rows(); }
};

// Test space on the cell: continuously differentiable piecewise polynomials
// of per-element degree `degree` on at least `min_elements` equal elements
// (coefficient piece boundaries become joints; the derivative dof is kept
// only between equal-length elements and is dropped at coefficient jumps,
// which keeps every basis function in the operator domain there).  Endpoint
// conditions are imposed by dropping the value or slope dof; all shape
// coefficients are exact dyadic doubles, so the conditions hold exactly.
GramTriple assemble_gram(const SLProblem& cell, int degree, int min_elements = 2);

// Same Gram data for a caller-supplied basis on the cell chart.
GramTriple assemble_gram(const SLProblem& cell, std::vector<TrigPoly> basis);

// Endpoint-constrained single-interval polynomial generators with exact
// integer coefficients (value/derivative elimination at t = +-1).
std::vector<IvPoly> constrained_poly_basis(BCPair bc, int degree);

}  // namespace enclose
