#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncmod/genmatrix.hpp"
#include "ncmod/rational.hpp"

namespace ncmod {

/// Matrix of exact rationals; the scalar side of every linearized computation.
using DMatrix = GenMatrix<Rational>;

inline DMatrix dmatrix(std::size_t rows, std::size_t cols) {
    return DMatrix(rows, cols, Rational(0));
}

/// Convenience builder from nested lists of long values.
DMatrix dmatrix_from(std::initializer_list<std::initializer_list<long>> rows);

/// Column vector from a flat list.
DMatrix dcolumn(const std::vector<Rational>& entries);

inline DMatrix didentity(std::size_t n) { return identity(n, Rational(1), Rational(0)); }

enum class SolutionKind { Unique, NoSolution, Infinite };

/**
 * Result of solving A x = b over the rationals.
 *
 * Unique:   particular holds the single solution, nullspace_basis empty.
 * Infinite: particular is one solution (free variables set to zero) and
 *           nullspace_basis spans the homogeneous solutions (one vector per
 *           free column, that free variable set to one).
 * NoSolution: both parts empty.
 */
struct LinearSolution {
    SolutionKind kind;
    DMatrix particular;
    std::vector<DMatrix> nullspace_basis;
};

/// Exact Gaussian elimination. Pivot rule: columns left to right, first
/// nonzero entry scanning rows top-down, so results are deterministic.
LinearSolution solve_linear(const DMatrix& a, const DMatrix& b);

/// Row rank over the rationals.
std::size_t rank(const DMatrix& a);

/// Deterministic basis of { x : A x = 0 }, one vector per free column.
std::vector<DMatrix> nullspace(const DMatrix& a);

std::string to_string(const DMatrix& a);

} // namespace ncmod
