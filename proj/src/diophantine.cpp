#include "groupeq/diophantine.hpp"

#include <stdexcept>

namespace groupeq {

std::optional<AffineLattice> solve_diophantine(const IntMatrix& a, const IntVec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_diophantine: dimension mismatch");
  const Eigen::Index n = a.cols();
  SnfResult f = snf(a);
  IntVec c = f.u * b;
  IntVec y = IntVec::Zero(n);
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    Int d = i < std::min<Eigen::Index>(a.rows(), n) ? f.s(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  AffineLattice sol;
  sol.basepoint = f.v * y;
  const Eigen::Index free = n - f.rank;
  sol.basis.resize(n, free);
  for (Eigen::Index j = 0; j < free; ++j) sol.basis.col(j) = f.v.col(f.rank + j);
  return sol;
}

bool lattice_member(const IntMatrix& basis, const IntVec& x) {
  return solve_diophantine(basis, x).has_value();
}

bool affine_member(const AffineLattice& l, const IntVec& x) {
  if (x.size() != l.basepoint.size()) return false;
  IntVec d = x - l.basepoint;
  if (l.basis.cols() == 0) return is_zero(d);
  return lattice_member(l.basis, d);
}

IntMatrix lattice_intersect(const IntMatrix& l1, const IntMatrix& l2) {
  if (l1.rows() != l2.rows())
    throw std::invalid_argument("lattice_intersect: ambient rank mismatch");
  const Eigen::Index r = l1.rows();
  // Solve l1 x = l2 y: kernel of the stacked matrix [l1 | -l2]; the
  // intersection is l1 applied to the x-parts of a kernel basis.
  IntMatrix stacked(r, l1.cols() + l2.cols());
  stacked.block(0, 0, r, l1.cols()) = l1;
  stacked.block(0, l1.cols(), r, l2.cols()) = -l2;
  IntMatrix ker = kernel_basis(stacked);
  IntMatrix xs(l1.cols(), ker.cols());
  for (Eigen::Index j = 0; j < ker.cols(); ++j)
    xs.col(j) = ker.block(0, j, l1.cols(), 1);
  IntMatrix gens = l1 * xs;
  // Canonical basis via HNF of the transpose (row-space form).
  HnfResult h = hnf(gens.transpose());
  int rk = 0;
  for (Eigen::Index i = 0; i < h.h.rows(); ++i) {
    bool nonzero = false;
    for (Eigen::Index j = 0; j < h.h.cols(); ++j)
      if (h.h(i, j) != 0) nonzero = true;
    if (nonzero) ++rk;
  }
  IntMatrix out(r, rk);
  for (int i = 0; i < rk; ++i) out.col(i) = h.h.row(i).transpose();
  return out;
}

IntMatrix saturate(const IntMatrix& basis) {
  // Kernels are saturated, so take the kernel of a matrix whose kernel is
  // the rational span of `basis` intersected with Z^r: rows spanning the
  // orthogonal complement of the column space.
  SnfResult f = snf(basis);
  const Eigen::Index r = basis.rows();
  const Eigen::Index k = f.rank;
  // Rows rank..r-1 of u map the column space to zero.
  IntMatrix ortho(r - k, r);
  for (Eigen::Index i = 0; i < r - k; ++i) ortho.row(i) = f.u.row(k + i);
  if (ortho.rows() == 0) return IntMatrix::Identity(r, r);
  return kernel_basis(ortho);
}

IntVec avoid_affine_subsets(Eigen::Index dims, const std::vector<ExcludedSubset>& excluded) {
  std::vector<const ExcludedSubset*> live;
  for (const auto& e : excluded) {
    if (is_zero(e.lhs)) {
      bool rhs_zero = true;
      for (Eigen::Index i = 0; i < e.rhs.size(); ++i)
        if (e.rhs[i] != 0) rhs_zero = false;
      if (rhs_zero)
        throw std::invalid_argument("avoid_affine_subsets: excluded subset is the whole space");
      continue;  // empty subset, nothing to avoid
    }
    live.push_back(&e);
  }
  IntVec z = IntVec::Zero(dims);
  for (Int t = 0;; ++t) {
    Int p = 1;
    for (Eigen::Index i = 0; i < dims; ++i) {
      p *= t;
      z[i] = p;
    }
    bool ok = true;
    for (const auto* e : live) {
      IntVec val = e->lhs * z;
      if (vec_eq(val, e->rhs)) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
}

}  // namespace groupeq
