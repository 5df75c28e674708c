#pragma once

// Exact solution sets of linear systems over Z, lattice intersection, and
// hyperplane avoidance for witness extraction under disequations.

#include "groupeq/normal_form.hpp"

#include <optional>
#include <vector>

namespace groupeq {

/// The set {basepoint + basis * z : z integer vector}. An empty basis
/// (zero columns) denotes a single point.
struct AffineLattice {
  IntVec basepoint;
  IntMatrix basis;  // columns independent

  Eigen::Index ambient_rank() const { return basepoint.size(); }
  Eigen::Index param_count() const { return basis.cols(); }
  IntVec point(const IntVec& z) const { return basepoint + basis * z; }
};

/// Solution set of A x = b, or nullopt when infeasible.
std::optional<AffineLattice> solve_diophantine(const IntMatrix& a, const IntVec& b);

/// Membership x in {v + L z}.
bool affine_member(const AffineLattice& l, const IntVec& x);

/// Membership in the column lattice of `basis`.
bool lattice_member(const IntMatrix& basis, const IntVec& x);

/// Basis of L1 ∩ L2 for full-rank sublattices of the same ambient rank.
IntMatrix lattice_intersect(const IntMatrix& l1, const IntMatrix& l2);

/// Saturation of a column lattice: {x : n x in L for some n >= 1}.
IntMatrix saturate(const IntMatrix& basis);

/// A proper affine subset of the integer parameter space Z^s, given as the
/// solution set of `lhs * z = rhs`. "Proper" means neither empty nor all
/// of Z^s; empty ones may be passed and are ignored.
struct ExcludedSubset {
  IntMatrix lhs;
  IntVec rhs;
};

/// A point of Z^s avoiding every excluded subset, found by walking the
/// moment curve z(t) = (t, t^2, ..., t^s). Each proper subset lies in a
/// hyperplane meeting the curve in at most s points, so a point is found
/// within (#excluded)*s + 1 steps.
/// Throws std::invalid_argument if an excluded subset is all of Z^s.
IntVec avoid_affine_subsets(Eigen::Index dims, const std::vector<ExcludedSubset>& excluded);

}  // namespace groupeq
