#include "groupeq/normal_form.hpp"

#include <cstdlib>
#include <stdexcept>

namespace groupeq {

namespace {

// Quotient rounded to nearest; |a - q*b| <= |b|/2. Keeps entries small
// during elimination sweeps.
Int rounded_quotient(const Int& a, const Int& b) {
  Int babs = abs(b);
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), babs.get_mpz_t());
  if (2 * r > babs) q += 1;
  return b < 0 ? Int(-q) : q;
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::Identity(m, m);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    // Repeatedly reduce the column below `row` by its smallest nonzero
    // entry until a single nonzero remains.
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index r = row; r < m; ++r) {
        if (h(r, col) == 0) continue;
        if (best < 0 || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (best < 0) break;  // column is zero from `row` down
      if (best != row) {
        h.row(best).swap(h.row(row));
        u.row(best).swap(u.row(row));
      }
      bool cleared = true;
      for (Eigen::Index r = row + 1; r < m; ++r) {
        if (h(r, col) == 0) continue;
        Int q = rounded_quotient(h(r, col), h(row, col));
        if (q != 0) {
          h.row(r) -= q * h.row(row);
          u.row(r) -= q * u.row(row);
        }
        if (h(r, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (Eigen::Index r = 0; r < row; ++r) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(row, col).get_mpz_t());
      if (q != 0) {
        h.row(r) -= q * h.row(row);
        u.row(r) -= q * u.row(row);
      }
    }
    ++row;
  }
  return {h, u};
}

bool is_row_hnf(const IntMatrix& h) {
  const Eigen::Index m = h.rows(), n = h.cols();
  Eigen::Index last_pivot = -1;
  bool zero_seen = false;
  for (Eigen::Index r = 0; r < m; ++r) {
    Eigen::Index p = -1;
    for (Eigen::Index c = 0; c < n; ++c)
      if (h(r, c) != 0) {
        p = c;
        break;
      }
    if (p < 0) {
      zero_seen = true;
      continue;
    }
    if (zero_seen) return false;          // zero rows must come last
    if (p <= last_pivot) return false;    // pivots strictly to the right
    if (h(r, p) <= 0) return false;
    for (Eigen::Index r2 = 0; r2 < r; ++r2)
      if (h(r2, p) < 0 || h(r2, p) >= h(r, p)) return false;
    last_pivot = p;
  }
  return true;
}

SnfResult snf(const IntMatrix& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SnfResult res;
  res.s = a;
  res.u = IntMatrix::Identity(m, m);
  res.v = IntMatrix::Identity(n, n);
  res.u_inv = IntMatrix::Identity(m, m);
  res.v_inv = IntMatrix::Identity(n, n);
  IntMatrix& s = res.s;

  auto row_sub = [&](Eigen::Index r, Eigen::Index r0, const Int& q) {
    s.row(r) -= q * s.row(r0);
    res.u.row(r) -= q * res.u.row(r0);
    res.u_inv.col(r0) += q * res.u_inv.col(r);
  };
  auto col_sub = [&](Eigen::Index c, Eigen::Index c0, const Int& q) {
    s.col(c) -= q * s.col(c0);
    res.v.col(c) -= q * res.v.col(c0);
    res.v_inv.row(c0) += q * res.v_inv.row(c);
  };
  auto row_swap = [&](Eigen::Index r, Eigen::Index r0) {
    s.row(r).swap(s.row(r0));
    res.u.row(r).swap(res.u.row(r0));
    res.u_inv.col(r).swap(res.u_inv.col(r0));
  };
  auto col_swap = [&](Eigen::Index c, Eigen::Index c0) {
    s.col(c).swap(s.col(c0));
    res.v.col(c).swap(res.v.col(c0));
    res.v_inv.row(c).swap(res.v_inv.row(c0));
  };
  auto row_negate = [&](Eigen::Index r) {
    s.row(r) = -s.row(r);
    res.u.row(r) = -res.u.row(r);
    res.u_inv.col(r) = -res.u_inv.col(r);
  };

  Eigen::Index t = 0;
  const Eigen::Index bound = std::min(m, n);
  while (t < bound) {
    // Locate a nonzero entry of minimal absolute value in the trailing block.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i)
      for (Eigen::Index j = t; j < n; ++j) {
        if (s(i, j) == 0) continue;
        if (pi < 0 || abs(s(i, j)) < abs(s(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Int q = rounded_quotient(s(i, t), s(t, t));
        row_sub(i, t, q);
        if (s(i, t) != 0) {
          row_swap(i, t);  // remainder is strictly smaller; iterate
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Int q = rounded_quotient(s(t, j), s(t, t));
        col_sub(j, t, q);
        if (s(t, j) != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
    }
    // Enforce divisibility of the trailing block by the pivot: fold an
    // offending row into row t and redo this pivot.
    bool redo = false;
    for (Eigen::Index i = t + 1; i < m && !redo; ++i)
      for (Eigen::Index j = t + 1; j < n && !redo; ++j)
        if (s(i, j) % s(t, t) != 0) {
          row_sub(t, i, Int(-1));  // add row i to row t
          redo = true;
        }
    if (redo) continue;
    if (s(t, t) < 0) row_negate(t);
    ++t;
  }
  res.rank = static_cast<int>(t);
  return res;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfResult f = snf(a);
  const Eigen::Index n = a.cols();
  const Eigen::Index k = n - f.rank;
  IntMatrix basis(n, k);
  for (Eigen::Index j = 0; j < k; ++j) basis.col(j) = f.v.col(f.rank + j);
  return basis;
}

int rank_exact(const IntMatrix& a) { return snf(a).rank; }

}  // namespace groupeq
