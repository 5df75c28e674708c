#pragma once

// Ready-made groups exercising every solver path, packaged with the
// symbol labels and named recognisable sets that group files carry.

#include "groupeq/recset.hpp"
#include "groupeq/structure.hpp"

#include <map>
#include <string>

namespace groupeq {

/// A group as loaded from (or saved to) a group file: the structure plus
/// symbolic labels for constants and named constraint sets.
struct GroupEnv {
  std::string name;
  GroupStructure structure;
  std::map<std::string, GroupValue> labels;
  std::map<std::string, RecSet> recsets;
};

/// Z^r with labels e1..er for the standard basis.
GroupEnv make_free_abelian(int r);

/// BFS closure of labelled permutation generators.
GroupEnv make_finite_from_perms(const std::map<std::string, Perm>& generators, int degree);

/// Free group of the given rank (generators a, b, c, ...) with the given
/// search bound.
GroupEnv make_free(int rank, int bound);

/// Infinite dihedral group as Extension(Z, C2, negation, trivial
/// cocycle); labels z (translation) and t (reflection).
GroupEnv make_dihedral_infinite();

/// Even-index dihedral Artin group DA_m, m even >= 2, encoded as a finite
/// extension of Z x F_{m/2} by the cyclic group of order m/2: the
/// quotient generator t fixes the Z part, cyclically permutes the free
/// generators, and satisfies t^{m/2} = z via the cocycle. Labels: z
/// (central), y1 = a1, y2 = t (y2 = z when m = 2), a1..a_{m/2}.
GroupEnv make_dihedral_artin_even(int m, int free_bound);

/// Extension(H x H, C2, coordinate swap, trivial cocycle), isomorphic to
/// the wreath product H wr C2. Label s for the swap transversal.
GroupEnv make_swap_product(const GroupStructure& h);

}  // namespace groupeq
