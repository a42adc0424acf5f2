#pragma once

#include "poskit/rational.hpp"

#include <optional>
#include <vector>

namespace poskit {

// Dense exact linear algebra over the rationals, sized for small systems
// (cone duality, wall relations, validation oracles).

using QMat = std::vector<QVec>;

Rat dot(const QVec& a, const QVec& b);

/// Reduces `a` to reduced row echelon form in place; returns the pivot
/// columns in increasing order.
std::vector<int> rref_inplace(QMat& a);

int rank_of(QMat a);

/// Basis of { x : a x = 0 } for an n x cols matrix; one vector per free column.
std::vector<QVec> nullspace_basis(const QMat& a, int cols);

/// Unique solution of a x = b. Empty optional when the system is
/// inconsistent; throws InternalError when the solution is not unique.
std::optional<QVec> solve_unique(const QMat& a, const QVec& b, int cols);

/// Inverse of a square nonsingular matrix; throws InternalError if singular.
QMat invert(const QMat& a);

/// Scales a rational vector to a coprime integer vector pointing the same
/// way. The zero vector maps to itself.
QVec primitive_direction(const QVec& v);

bool is_zero_vector(const QVec& v);

/// Lexicographic order on rational vectors of equal length.
bool lex_less(const QVec& a, const QVec& b);

} // namespace poskit
