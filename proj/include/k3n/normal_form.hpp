#pragma once

// Integer normal forms: column echelon (Hermite) form with a unimodular
// transform, integer kernels, and the Smith normal form.

#include "k3n/scalar.hpp"

#include <vector>

namespace k3n {

/// Result of column-style Hermite reduction: `input * transform == reduced`.
///
/// The first `rank` columns of `reduced` are in echelon form with positive
/// pivots and fully reduced entries to the left of each pivot (canonical HNF);
/// the remaining columns are zero. `inverse` is the exact inverse of
/// `transform`, also integral.
struct ColumnEchelon {
    IntMatrix reduced;
    IntMatrix transform;
    IntMatrix inverse;
    Index rank = 0;
    std::vector<Index> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a);

/// Canonical basis (columns) of the lattice generated by the columns of
/// `generators`. Two generator sets span the same lattice iff their
/// canonical bases are equal.
IntMatrix hermite_basis(const IntMatrix& generators);

/// Basis (columns) of {x in Z^n : a * x == 0}. The kernel is always a
/// saturated sublattice; the returned basis is in canonical HNF.
IntMatrix integer_kernel(const IntMatrix& a);

/// `left * m * right` is diagonal with `diag` on its diagonal.
struct SmithForm {
    IntMatrix left;
    std::vector<Integer> diag;  // min(rows, cols) entries, non-negative, each divides the next
    IntMatrix right;

    IntMatrix diagonal_matrix(Index rows, Index cols) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Absolute determinant computed by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& m);

}  // namespace k3n
