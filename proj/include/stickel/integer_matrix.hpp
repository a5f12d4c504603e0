#ifndef STICKEL_INTEGER_MATRIX_HPP
#define STICKEL_INTEGER_MATRIX_HPP

#include <optional>
#include <vector>

#include "stickel/arith.hpp"

namespace stickel {

using IntVector = std::vector<Integer>;
/// Row-major; every row has the same length.
using IntMatrix = std::vector<IntVector>;

IntMatrix identity_matrix(size_t n);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> invariants;  // the min(m, n) diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& a, size_t columns);

/// Row-style Hermite normal form of the lattice spanned by `rows`: upper
/// echelon, positive pivots, entries above a pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Integer coordinates y with sum_i y_i * basis[i] = x, for a basis in Hermite
/// form; nullopt when x is not in the lattice.
std::optional<IntVector> lattice_coordinates(const IntMatrix& hermite_basis, const IntVector& x);

/// Hermite basis of { x in Z^n : D x = 0 (mod modulus) } for D with n columns.
IntMatrix kernel_modulo(const IntMatrix& d, size_t columns, const Integer& modulus);

/// |det| of a square matrix (fraction-free elimination).
Integer absolute_determinant(IntMatrix a);

}  // namespace stickel

#endif  // STICKEL_INTEGER_MATRIX_HPP
