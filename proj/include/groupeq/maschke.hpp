#pragma once

// Integral complement of an invariant sublattice: given a finite group
// acting on Z^r by integer matrices and an invariant sublattice W, produce
// an invariant sublattice U with U ∩ W = 0 and U ⊕ W of finite index.
// Construction: average a rational projector onto W⊗Q over the group
// (Reynolds operator), then take the integer kernel, which is saturated.

#include "groupeq/finite_group.hpp"
#include "groupeq/normal_form.hpp"

#include <vector>

namespace groupeq {

class ZGModuleAction {
 public:
  /// mats[q] is the action of group element q; validated to be a
  /// homomorphism into GL_r(Q) (hence GL_r(Z), since the group is finite).
  ZGModuleAction(const FiniteGroup& group, std::vector<IntMatrix> mats);

  const FiniteGroup& group() const { return *group_; }
  const IntMatrix& matrix(int q) const { return mats_[q]; }
  Eigen::Index rank() const { return rank_; }

  bool invariant(const IntMatrix& lattice) const;

 private:
  const FiniteGroup* group_;
  std::vector<IntMatrix> mats_;
  Eigen::Index rank_ = 0;
};

struct MaschkeComplement {
  IntMatrix u;  // columns span the complement
  Int index;    // index of U ⊕ W in Z^r
};

/// W given by independent columns; throws if W is not invariant.
MaschkeComplement maschke_complement(const ZGModuleAction& action, const IntMatrix& w);

}  // namespace groupeq
