#pragma once

// Matrix quadruples (X, Y, i, j) with [X, Y] + Id = i j: validity, the
// lambda invariants j Y^l X^k i, the conjugation kernel kappa and its
// inverse, GL_n-equivalence, the automorphism action, and a small catalog
// of example points used throughout the tests.

#include <vector>

#include "weylcm/free_algebra.hpp"
#include "weylcm/matrix.hpp"
#include "weylcm/skew.hpp"

namespace weylcm {

struct CMPoint {
  long n = 0;
  MatQ X, Y;   // n x n
  VecQ i;      // column
  RowVecQ j;   // row
};

// True iff X Y - Y X + Id = i j holds exactly.  Throws
// std::invalid_argument on inconsistent shapes.
bool validate(const CMPoint& p);

// The scalars lambda_{lk} = j Y^l X^k i for 0 <= l, k <= bound.
// lambda_{00} = n always (trace of the rank-one relation).
struct LambdaTable {
  long bound = 0;
  std::vector<std::vector<Rat>> values;  // values[l][k]
  const Rat& at(long l, long k) const { return values[l][k]; }
  bool operator==(const LambdaTable& o) const = default;
};
LambdaTable lambda_table(const CMPoint& p, long bound);

// kappa = 1 - j (Y - y)^{-1} (X - x)^{-1} i as a YX sum and its inverse
// chi = 1 + j (X - x)^{-1} (Y - y)^{-1} i as an XY sum, both assembled
// from adjugate / determinant so every factor is a univariate RatFun.
struct KappaPair {
  SkewSum kappa{Chirality::YX};
  SkewSum chi{Chirality::XY};
};
KappaPair kappa(const CMPoint& p);

// Verifies the expansion kappa = 1 - sum lambda_{lk} y^{-l-1} x^{-k-1} up
// to the given bound by comparing truncated power-series coefficients of
// the separated factors against lambda_table(p, bound).
bool kappa_series_check(const CMPoint& p, long bound);

// Cyclicity of the column data: span{Y^l X^k i : 0 <= l, k <= n} = k^n.
bool cyclic(const CMPoint& p);

// GL_n-equivalence: exists invertible g with g X_p = X_q g,
// g Y_p = Y_q g, g i_p = i_q, j_p = j_q g.  Decided by an exact linear
// solve in g after a lambda-table pre-filter at bound 2n.  Throws
// std::logic_error if the solution space contradicts freeness of the
// action (an invertible solution plus a nontrivial homogeneous one).
bool equivalent(const CMPoint& p, const CMPoint& q);

// The automorphism action: (X, Y, i, j) -> (s^{-1}(x)(X,Y),
// s^{-1}(y)(X,Y), i, j); preserves validity because s fixes xy - yx.
CMPoint act(const Automorphism& s, const CMPoint& p);

// Conjugation by an invertible g: (g X g^{-1}, g Y g^{-1}, g i, j g^{-1}).
// Throws std::invalid_argument if g is singular.
CMPoint conjugate(const CMPoint& p, const MatQ& g);

// --- example points ---

// n = 0: empty matrices.
CMPoint cm_empty();
// n = 1: X = a, Y = b, i = 1, j = 1.  cm_zero_point() is (0, 0).
CMPoint cm_point_n1(const Rat& a, const Rat& b);
CMPoint cm_zero_point();
// n = 2 nilpotent point: X = [[0,1],[0,0]], Y = [[0,0],[1,0]],
// i = (1,0)^T, j = (2,0).
CMPoint cm_point_n2();
// All of the above (zero, (1,0), (0,1), (-2,3), empty, n=2).
std::vector<CMPoint> cm_catalog();

}  // namespace weylcm
