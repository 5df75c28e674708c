#include "groupeq/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace groupeq {

Rat det_rational(RatMatrix a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("det: matrix not square");
  Rat det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (a(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / a(col, col);
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Int det_exact(const IntMatrix& a) {
  Rat d = det_rational(to_rational(a));
  if (d.get_den() != 1) throw std::logic_error("det_exact: non-integer determinant");
  return d.get_num();
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Int d = det_exact(a);
  return d == 1 || d == -1;
}

std::optional<RatMatrix> rat_inverse(const RatMatrix& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("rat_inverse: matrix not square");
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    Rat p = m(col, col);
    for (Eigen::Index c = 0; c < n; ++c) {
      m(col, c) /= p;
      inv(col, c) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rat f = m(r, col);
      for (Eigen::Index c = 0; c < n; ++c) {
        m(r, c) -= f * m(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

std::optional<IntMatrix> int_inverse(const IntMatrix& a) {
  auto inv = rat_inverse(to_rational(a));
  if (!inv) return std::nullopt;
  IntMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      Rat e = (*inv)(i, j);
      if (e.get_den() != 1) return std::nullopt;
      out(i, j) = e.get_num();
    }
  return out;
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << (i ? "; " : "");
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
  }
  os << "]";
  return os.str();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace groupeq
