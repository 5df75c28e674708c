#pragma once

// Hermite and Smith normal forms of integer matrices, with unimodular
// transformation witnesses. Row conventions:
//   hnf:  H = U * A, U unimodular, H in row Hermite normal form
//         (positive pivots, entries above a pivot reduced into [0, pivot),
//         zero rows last).
//   snf:  S = U * A * V, U and V unimodular, S diagonal with nonnegative
//         entries and d1 | d2 | ... .

#include "groupeq/int_matrix.hpp"

namespace groupeq {

struct HnfResult {
  IntMatrix h;
  IntMatrix u;
};

struct SnfResult {
  IntMatrix s;
  IntMatrix u;
  IntMatrix v;
  // Inverses tracked alongside; exact, no inversion pass needed later.
  IntMatrix u_inv;
  IntMatrix v_inv;
  int rank = 0;
};

HnfResult hnf(const IntMatrix& a);

SnfResult snf(const IntMatrix& a);

/// Basis of the integer kernel {x : A x = 0}, as matrix columns.
/// The kernel lattice is saturated by construction.
IntMatrix kernel_basis(const IntMatrix& a);

int rank_exact(const IntMatrix& a);

/// Shape predicate used by tests: row HNF as produced by hnf().
bool is_row_hnf(const IntMatrix& h);

}  // namespace groupeq
