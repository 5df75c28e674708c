#include "groupeq/maschke.hpp"

#include "groupeq/diophantine.hpp"

#include <stdexcept>

namespace groupeq {

ZGModuleAction::ZGModuleAction(const FiniteGroup& group, std::vector<IntMatrix> mats)
    : group_(&group), mats_(std::move(mats)) {
  if (static_cast<int>(mats_.size()) != group.order())
    throw std::invalid_argument("ZGModuleAction: one matrix per group element required");
  rank_ = mats_.empty() ? 0 : mats_[0].rows();
  for (const auto& m : mats_) {
    if (m.rows() != rank_ || m.cols() != rank_)
      throw std::invalid_argument("ZGModuleAction: matrices must be square of equal size");
    if (det_exact(m) == 0)
      throw std::invalid_argument("ZGModuleAction: matrix not invertible over Q");
  }
  for (int p = 0; p < group.order(); ++p)
    for (int q = 0; q < group.order(); ++q)
      if (!mat_eq(mats_[p] * mats_[q], mats_[group.mul(p, q)]))
        throw std::invalid_argument("ZGModuleAction: map is not a homomorphism");
}

bool ZGModuleAction::invariant(const IntMatrix& lattice) const {
  for (const auto& m : mats_) {
    IntMatrix image = m * lattice;
    for (Eigen::Index j = 0; j < image.cols(); ++j)
      if (!solve_diophantine(lattice, image.col(j))) return false;
  }
  return true;
}

MaschkeComplement maschke_complement(const ZGModuleAction& action, const IntMatrix& w) {
  const Eigen::Index r = action.rank();
  if (w.rows() != r) throw std::invalid_argument("maschke_complement: ambient rank mismatch");
  if (w.cols() > 0 && rank_exact(w) != w.cols())
    throw std::invalid_argument("maschke_complement: W basis not independent");
  if (!action.invariant(w))
    throw std::invalid_argument("maschke_complement: W is not invariant");

  MaschkeComplement out;
  if (w.cols() == 0) {
    out.u = IntMatrix::Identity(r, r);
    out.index = abs(det_exact(out.u));
    return out;
  }

  // Orthogonal projector onto W⊗Q, then the Reynolds average
  //   P = (1/|Q|) sum_q  M_q P0 M_q^{-1},
  // an equivariant projector onto W⊗Q. Its integer kernel is the
  // complement; kernels of matrices are saturated, so no extra pass.
  RatMatrix wq = to_rational(w);
  RatMatrix gram = wq.transpose() * wq;
  auto gram_inv = rat_inverse(gram);
  if (!gram_inv) throw std::logic_error("maschke_complement: Gram matrix singular");
  RatMatrix p0 = wq * (*gram_inv) * wq.transpose();

  const FiniteGroup& q = action.group();
  RatMatrix p = RatMatrix::Zero(r, r);
  for (int g = 0; g < q.order(); ++g) {
    RatMatrix mg = to_rational(action.matrix(g));
    RatMatrix mg_inv = to_rational(action.matrix(q.inv(g)));
    p += mg * p0 * mg_inv;
  }
  Rat scale(q.order());
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) p(i, j) /= scale;

  // Clear denominators, then the integer kernel.
  Int common = 1;
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) {
      Int den = p(i, j).get_den();
      common = lcm(common, den);
    }
  IntMatrix p_int(r, r);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < r; ++j) {
      Rat e = p(i, j) * Rat(common);
      p_int(i, j) = e.get_num();
    }
  out.u = kernel_basis(p_int);

  if (out.u.cols() + w.cols() != r)
    throw std::logic_error("maschke_complement: rank defect in complement");
  IntMatrix direct_sum(r, r);
  direct_sum.block(0, 0, r, out.u.cols()) = out.u;
  direct_sum.block(0, out.u.cols(), r, w.cols()) = w;
  out.index = abs(det_exact(direct_sum));
  if (out.index == 0) throw std::logic_error("maschke_complement: U ⊕ W not of finite index");
  return out;
}

}  // namespace groupeq
