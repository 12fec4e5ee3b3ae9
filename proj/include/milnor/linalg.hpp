#pragma once

// Small dense exact linear algebra over Q (Gaussian elimination).  Matrices
// are row-major vectors of rows.

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace milnor {

using QRow = std::vector<mpq_class>;
using QMatrix = std::vector<QRow>;

int rank(QMatrix a);

// In-place reduced row echelon form; returns the pivot column of each pivot
// row (so the rank is the size of the returned vector).
std::vector<int> reduced_row_echelon(QMatrix& a);

// Basis of { x : A x = 0 }.
std::vector<QRow> nullspace(QMatrix a);

// One solution of A x = b, or nullopt when inconsistent.
std::optional<QRow> solve(QMatrix a, QRow b);

mpq_class determinant(QMatrix a);

}  // namespace milnor
