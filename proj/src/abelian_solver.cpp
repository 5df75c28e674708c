#include "groupeq/abelian_solver.hpp"

#include <stdexcept>

namespace groupeq {

bool congruence_box_member(const CongruenceBox& box, const IntVec& x) {
  IntVec d = x - box.residue;
  return lattice_member(box.lattice, d);
}

namespace {

struct BranchLayout {
  Eigen::Index r;
  int num_vars;
  std::vector<int> constrained;  // sorted variable indices with boxes
  Eigen::Index total_cols() const {
    return r * (num_vars + static_cast<int>(constrained.size()));
  }
  Eigen::Index var_col(int var) const { return r * var; }
  Eigen::Index aux_col(int k) const { return r * (num_vars + k); }
};

// One r-row block per relation, coefficients accumulated per variable.
void fill_relation(const BranchLayout& lay, const AbelianRelation& rel,
                   IntMatrix& rows, IntVec& rhs, Eigen::Index at) {
  for (const auto& t : rel.terms) {
    IntMatrix c = t.coeff ? *t.coeff : IntMatrix(IntMatrix::Identity(lay.r, lay.r));
    if (t.sign < 0) c = -c;
    rows.block(at, lay.var_col(t.var), lay.r, lay.r) += c;
  }
  rhs.segment(at, lay.r) = rel.rhs;
}

}  // namespace

AbelianResult solve_abelian(const AbelianSystem& sys) {
  const Eigen::Index r = sys.rank;
  BranchLayout lay;
  lay.r = r;
  lay.num_vars = sys.num_vars;
  for (const auto& [var, boxes] : sys.constraints) {
    if (var < 0 || var >= sys.num_vars)
      throw std::invalid_argument("solve_abelian: constraint on undeclared variable");
    lay.constrained.push_back(var);
  }

  // Odometer over one box choice per constrained variable.
  std::vector<size_t> choice(lay.constrained.size(), 0);
  auto next_choice = [&]() -> bool {
    for (size_t k = choice.size(); k-- > 0;) {
      ++choice[k];
      if (choice[k] < sys.constraints.at(lay.constrained[k]).size()) return true;
      choice[k] = 0;
    }
    return false;
  };
  // A variable constrained to an empty union has no branches at all.
  for (int var : lay.constrained)
    if (sys.constraints.at(var).empty()) return {false, {}};

  const Eigen::Index n = lay.total_cols();
  bool more = true;
  while (more) {
    const Eigen::Index eq_rows = r * static_cast<Eigen::Index>(sys.equations.size());
    const Eigen::Index con_rows = r * static_cast<Eigen::Index>(lay.constrained.size());
    IntMatrix a = IntMatrix::Zero(eq_rows + con_rows, n);
    IntVec b = IntVec::Zero(eq_rows + con_rows);
    Eigen::Index at = 0;
    for (const auto& eq : sys.equations) {
      fill_relation(lay, eq, a, b, at);
      at += r;
    }
    for (size_t k = 0; k < lay.constrained.size(); ++k) {
      const CongruenceBox& box = sys.constraints.at(lay.constrained[k])[choice[k]];
      if (box.lattice.rows() != r || box.lattice.cols() != r)
        throw std::invalid_argument("solve_abelian: congruence lattice must be r x r");
      a.block(at, lay.var_col(lay.constrained[k]), r, r) =
          IntMatrix::Identity(r, r);
      a.block(at, lay.aux_col(static_cast<int>(k)), r, r) = -box.lattice;
      b.segment(at, r) = box.residue;
      at += r;
    }

    auto family = solve_diophantine(a, b);
    if (family) {
      const Eigen::Index s = family->param_count();
      std::vector<ExcludedSubset> excluded;
      bool dead = false;
      for (const auto& d : sys.disequations) {
        IntMatrix e = IntMatrix::Zero(r, n);
        IntVec drhs = IntVec::Zero(r);
        fill_relation(lay, d, e, drhs, 0);
        IntMatrix c = e * family->basis;
        IntVec f = drhs - e * family->basepoint;
        if (is_zero(c)) {
          bool f_zero = true;
          for (Eigen::Index i = 0; i < f.size(); ++i)
            if (f[i] != 0) f_zero = false;
          if (f_zero) {
            dead = true;  // disequation excludes the whole family
            break;
          }
          continue;  // excludes nothing
        }
        if (!solve_diophantine(c, f)) continue;  // excluded set empty
        excluded.push_back({c, f});
      }
      if (!dead) {
        IntVec z = avoid_affine_subsets(s, excluded);
        IntVec point = family->point(z);
        AbelianResult res;
        res.sat = true;
        for (int v = 0; v < sys.num_vars; ++v)
          res.witness.push_back(point.segment(lay.var_col(v), r));
        return res;
      }
    }
    more = next_choice();
  }
  return {false, {}};
}

}  // namespace groupeq
