#include "weylcm/matrix.hpp"

namespace weylcm {

UniPoly charpoly(const MatQ& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
  MatP a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      UniPoly e(-m(i, j));
      if (i == j) e += UniPoly::var();
      a(i, j) = e;
    }
  return det<UniPoly>(a);
}

RrefResult rref(const MatQ& m) {
  RrefResult out;
  out.reduced = m;
  MatQ& a = out.reduced;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(r).swap(a.row(piv));
    Rat lead = a(r, c);
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) /= lead;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

MatQ kernel_basis(const MatQ& m) {
  RrefResult rr = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<Eigen::Index> free_cols;
  {
    size_t p = 0;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  MatQ basis(cols, static_cast<Eigen::Index>(free_cols.size()));
  basis.setZero();
  for (size_t f = 0; f < free_cols.size(); ++f) {
    Eigen::Index fc = free_cols[f];
    basis(fc, static_cast<Eigen::Index>(f)) = 1;
    for (size_t p = 0; p < rr.pivot_cols.size(); ++p)
      basis(rr.pivot_cols[p], static_cast<Eigen::Index>(f)) =
          -rr.reduced(static_cast<Eigen::Index>(p), fc);
  }
  return basis;
}

std::optional<VecQ> solve(const MatQ& m, const VecQ& b) {
  auto sol = affine_solve(m, b);
  if (!sol) return std::nullopt;
  return sol->particular;
}

std::optional<AffineSolution> affine_solve(const MatQ& m, const VecQ& b) {
  if (m.rows() != b.size())
    throw std::invalid_argument("affine_solve: shape mismatch");
  MatQ aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  RrefResult rr = rref(aug);
  // Inconsistent iff the augmented column is a pivot.
  for (Eigen::Index c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  AffineSolution out;
  out.particular = VecQ::Zero(m.cols());
  for (size_t p = 0; p < rr.pivot_cols.size(); ++p)
    out.particular(rr.pivot_cols[p]) =
        rr.reduced(static_cast<Eigen::Index>(p), m.cols());
  out.kernel = kernel_basis(m);
  return out;
}

}  // namespace weylcm
