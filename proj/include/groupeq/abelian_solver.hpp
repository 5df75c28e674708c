#pragma once

// Satisfiability of twisted linear systems over Z^r with congruence-box
// constraints and disequations. Complete: never answers unknown.
//
// A relation is sum_u sign_u * T_u * x_{var_u} (=|!=) rhs, with each T_u an
// r x r matrix invertible over Q. Constraints restrict a variable to a
// finite union of congruence boxes (cosets of full-rank sublattices).
// Congruences compile to equalities with fresh auxiliary variables, so a
// single Diophantine solve parametrizes each branch; disequations then
// exclude affine subsets of the parameter space, and a witness avoiding
// them is found on the moment curve.

#include "groupeq/diophantine.hpp"

#include <map>
#include <optional>
#include <vector>

namespace groupeq {

/// Coset residue + lattice of a full-rank sublattice of Z^r.
struct CongruenceBox {
  IntVec residue;
  IntMatrix lattice;  // r x r, nonzero determinant
};

struct AbelianTerm {
  int var = 0;
  int sign = 1;                    // +1 or -1
  std::optional<IntMatrix> coeff;  // nullopt = identity twist
};

struct AbelianRelation {
  std::vector<AbelianTerm> terms;
  IntVec rhs;
};

struct AbelianSystem {
  Eigen::Index rank = 0;
  int num_vars = 0;
  std::vector<AbelianRelation> equations;
  std::vector<AbelianRelation> disequations;
  std::map<int, std::vector<CongruenceBox>> constraints;
};

struct AbelianResult {
  bool sat = false;
  std::vector<IntVec> witness;  // one vector per variable when sat
};

AbelianResult solve_abelian(const AbelianSystem& sys);

bool congruence_box_member(const CongruenceBox& box, const IntVec& x);

}  // namespace groupeq
