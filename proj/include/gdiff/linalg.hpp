#pragma once

#include <vector>

#include "gdiff/rational.hpp"

namespace gdiff {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

/// In-place reduction to the (unique) reduced row echelon form. Returns the
/// rank. Pivot rows are chosen preferring denominator-free entries of small
/// size; the scan order is fixed, so the result is reproducible bit for bit.
int rref_in_place(QMatrix& m);

/// Pivot columns of a matrix already in RREF.
std::vector<int> pivot_columns(const QMatrix& m);

/// Canonical basis of { x : m x = 0 }, one row per free column of the RREF,
/// with a 1 in the free position. Rows appear in increasing free-column order.
QMatrix nullspace_basis(QMatrix m, int ncols);

/// Whether v lies in the row span of a matrix in RREF.
bool in_row_span(const QMatrix& rref, QRow v);

}  // namespace gdiff
