#pragma once

// Dense matrices over the exact scalar types, plus the exact linear-algebra
// kernels the rest of the library relies on: fraction-free determinants,
// adjugates, characteristic polynomials, and Gauss-Jordan elimination over
// the rationals.
//
// Eigen supplies the container and the expression arithmetic; all pivoting
// algorithms are provided here as free functions because floating-point
// decompositions are useless over Rat/UniPoly entries.

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "weylcm/rat.hpp"
#include "weylcm/unipoly.hpp"

namespace Eigen {

// Minimal scalar traits so Eigen expressions work over the exact scalars.
template <>
struct NumTraits<weylcm::Rat> {
  using Real = weylcm::Rat;
  using NonInteger = weylcm::Rat;
  using Nested = weylcm::Rat;
  using Literal = weylcm::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32,
  };
  static int digits10() { return 0; }
  static weylcm::Rat epsilon() { return weylcm::Rat(0); }
  static weylcm::Rat dummy_precision() { return weylcm::Rat(0); }
};

template <>
struct NumTraits<weylcm::UniPoly> {
  using Real = weylcm::UniPoly;
  using NonInteger = weylcm::UniPoly;
  using Nested = weylcm::UniPoly;
  using Literal = weylcm::UniPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static int digits10() { return 0; }
  static weylcm::UniPoly epsilon() { return weylcm::UniPoly(); }
  static weylcm::UniPoly dummy_precision() { return weylcm::UniPoly(); }
};

template <>
struct NumTraits<weylcm::RatFun> {
  using Real = weylcm::RatFun;
  using NonInteger = weylcm::RatFun;
  using Nested = weylcm::RatFun;
  using Literal = weylcm::RatFun;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 128,
    MulCost = 256,
  };
  static int digits10() { return 0; }
  static weylcm::RatFun epsilon() { return weylcm::RatFun(); }
  static weylcm::RatFun dummy_precision() { return weylcm::RatFun(); }
};

}  // namespace Eigen

namespace weylcm {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatQ = Mat<Rat>;
using VecQ = Vec<Rat>;
using RowVecQ = RowVec<Rat>;
using MatP = Mat<UniPoly>;
using MatF = Mat<RatFun>;

// Exact division hooks used by the fraction-free elimination.
inline Rat divexact(const Rat& a, const Rat& b) { return a / b; }
inline UniPoly divexact(const UniPoly& a, const UniPoly& b) {
  return poly_divexact(a, b);
}
inline RatFun divexact(const RatFun& a, const RatFun& b) { return a / b; }

// Determinant by the fraction-free Bareiss scheme; every division is exact
// in the coefficient ring, so polynomial entries never leave the ring.
template <class Scalar>
Scalar det(const Mat<Scalar>& m);

// Classical adjoint: adj(M) * M = M * adj(M) = det(M) * Id.  The adjugate
// of a 0x0 matrix is the (empty) identity.
template <class Scalar>
Mat<Scalar> adjugate(const Mat<Scalar>& m);

// Monic characteristic polynomial det(t*Id - M).
UniPoly charpoly(const MatQ& m);

// Reduced row echelon form over the rationals.
struct RrefResult {
  MatQ reduced;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank = 0;
};
RrefResult rref(const MatQ& m);

// Basis of the right kernel {v : M v = 0}, one column per basis vector.
MatQ kernel_basis(const MatQ& m);

// One solution of M x = b, if any.
std::optional<VecQ> solve(const MatQ& m, const VecQ& b);

// Full solution set of M x = b: a particular solution plus a kernel basis.
struct AffineSolution {
  VecQ particular;
  MatQ kernel;  // columns span the homogeneous solutions
};
std::optional<AffineSolution> affine_solve(const MatQ& m, const VecQ& b);

// --- template implementations ---

template <class Scalar>
Scalar det(const Mat<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return Scalar(1);
  Mat<Scalar> a = m;
  Scalar prev = Scalar(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index piv = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (!(a(r, k) == Scalar(0))) {
          piv = r;
          break;
        }
      if (piv < 0) return Scalar(0);
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = divexact(num, prev);
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  Scalar d = a(n - 1, n - 1);
  return sign < 0 ? Scalar(Scalar(0) - d) : d;
}

template <class Scalar>
Mat<Scalar> adjugate(const Mat<Scalar>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
  Mat<Scalar> adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  Mat<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (Eigen::Index j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj) = m(i, j);
          ++mj;
        }
        ++mi;
      }
      Scalar cof = det<Scalar>(minor);
      // adj = transpose of the cofactor matrix.
      adj(c, r) = ((r + c) % 2 == 0) ? cof : Scalar(Scalar(0) - cof);
    }
  }
  return adj;
}

}  // namespace weylcm
