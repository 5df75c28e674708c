#pragma once

// Permutational wreath products and the embedding of a finite extension
// of a direct product into a product of wreath products (one per
// conjugation orbit of the factors).
//
// For a factor orbit of G = Extension(K_1 x ... x K_n, Q, alpha, c):
//   P    = image in Sym(orbit) of the factor permutation part of alpha
//   Stab = {q : sigma_q fixes the orbit base point}
//   J    = Extension(K_base, Stab, restricted action, restricted cocycle)
//          (just K_base when Stab is trivial)
//   W    = J wr P
// mu sends g = (k, q) to the wreath element with top sigma_q|orbit and
// base coordinate i the image of t_{r_i}^{-1} g t_{r_{sigma_q^{-1}(i)}}
// under the projection killing the other factors, with r_i transversal
// representatives of Stab taking the base point to position i.

#include "groupeq/recset.hpp"
#include "groupeq/structure.hpp"
#include "groupeq/system.hpp"

#include <vector>

namespace groupeq {

/// Extension(J^n, P, coordinate permutation action, trivial cocycle);
/// multiplication reproduces (j,pi)(k,rho) = ((j_i k_{pi^-1(i)})_i, pi rho).
GroupStructure build_wreath(const GroupStructure& j, const FiniteGroup& p);

class WreathEmbedding {
 public:
  /// `orbit`: absolute factor indices forming one conjugation orbit,
  /// sorted ascending. Throws when the orbit is not closed under the
  /// factor permutation action.
  WreathEmbedding(const GroupStructure& source, std::vector<int> orbit);

  const GroupStructure& wreath() const { return w_; }
  const GroupStructure& hom_target() const { return w_; }
  const GroupStructure& j_group() const { return j_; }
  const FiniteGroup& perm_group() const { return p_; }
  const std::vector<int>& orbit() const { return orbit_; }

  /// mu on values.
  GroupValue embed(const GroupValue& g) const;

  /// Image of mu restricted to this orbit, as a recognisable set over W.
  RecSet image() const;

  /// Image of a single constraint box of the source group.
  RecBox push_box(const RecBox& box) const;

  /// Quotient element recovered from a W-value in the image (top part
  /// plus the Stab part of the base-point coordinate).
  int recover_quotient(const GroupValue& w_value) const;

  /// Base components (absolute factor index -> K_i value) of the source
  /// element, given w_value and the already recovered quotient part.
  void recover_base(const GroupValue& w_value, int q,
                    std::vector<GroupValue>& base_parts) const;

 private:
  GroupStructure source_;
  std::vector<int> orbit_;
  std::vector<Perm> sigma_;      // factor permutation per quotient element
  FiniteGroup p_;
  std::vector<int> sigma_to_p_;  // quotient index -> P index
  std::vector<int> reps_;        // reps_[i]: quotient elt with sigma(base)=orbit[i]
  bool trivial_stab_ = true;
  Subgroup stab_;
  GroupStructure j_;
  GroupStructure w_;

  GroupValue factor_component(const GroupValue& k, int abs_index) const;
  AutPtr rep_component(int pos) const;  // component of alpha_{r_pos} mapping K_base -> K_pos
  GroupValue transversal(int q) const;
  GroupValue nu(const GroupValue& g_elt) const;  // projection N -> J
};

/// Factor permutation of each quotient element of an extension over a
/// product (identity perms for non-product bases, degree 1).
std::vector<Perm> factor_permutations(const GroupStructure& g);

/// Orbits of {0..n-1} under the factor permutation action, each sorted,
/// ordered by smallest element.
std::vector<std::vector<int>> factor_orbits(const GroupStructure& g);

}  // namespace groupeq
