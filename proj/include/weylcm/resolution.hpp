#pragma once

// From a matrix quadruple to explicit fractional-ideal representatives of
// the associated module.  The building blocks are the correction maps
//
//   delta_x^{km}(v) = -jbar (Xbar - x)^{-1} (Ybar - y)^{-1}
//                       (Ybar^m - y^m) Xbar^k v          in k(x)[y],
//   delta_y^{km}(v) =  jbar (Ybar - y)^{-1} (Xbar - x)^{-1}
//                       (Xbar^k - x^k) y^m v             in k(y)[x],
//
// computed exactly through the adjugate of the shifted matrix, and the
// images x^k y^m + delta^{km}(ibar) of the monomial basis.  Collecting the
// images of the two canonical kernel generators yields the presentation
//
//   M_y = det(Ybar - y) A + kappa det(Xbar - x) A,
//
// a fractional right ideal; multiplying on the left by the least common
// denominator d(y) turns it into a genuine right ideal of the Weyl
// algebra with two polynomial generators.

#include "weylcm/cm.hpp"
#include "weylcm/skew.hpp"

namespace weylcm {

// A two-generator presentation of the fractional ideal attached to a
// point, together with its denominator-cleared form.
struct IdealPresentation {
  CMPoint source;
  // The polynomial generator: the characteristic polynomial of Ybar
  // evaluated at y (an element of k[y]).
  WeylElement gen_poly;
  // The fractional generator kappa * charpoly(Xbar)(x), an element of
  // k(y)[x]: y-rational left factors, polynomial x-powers on the right.
  SkewSum gen_skew{Chirality::YX};
  // Monic least common denominator d(y) of the left factors of gen_skew.
  UniPoly clearing;
  // Generators of the cleared ideal d(y) * (gen_poly A + gen_skew A),
  // both genuine Weyl-algebra elements.
  WeylElement cleared_poly, cleared_skew;
};

// The corrections above as separated sums: delta_x lands in chirality XY
// (rational in x on the left, polynomial in y on the right), delta_y in
// chirality YX.  Both vanish when their inner sum is empty (m = 0 for
// delta_x, k = 0 for delta_y).
SkewSum delta_x(const CMPoint& p, const VecQ& v, long k, long m);
SkewSum delta_y(const CMPoint& p, const VecQ& v, long k, long m);

// The image of the basis element carrying x^k y^m under the x-linear
// (which = 'x', chirality XY) or y-linear (which = 'y', chirality YX)
// comparison map, normalized so the cyclic vector maps to 1:
// x^k y^m + delta^{km}(ibar).  Throws std::invalid_argument on any other
// `which`.
SkewSum gmap_image(const CMPoint& p, char which, long k, long m);

// Builds the presentation from the point's own kappa; the overload
// accepts the YX factor explicitly and throws std::domain_error if the
// product with charpoly(Xbar)(x) fails to be polynomial in x (which
// signals an invalid factor).
IdealPresentation omega_ideal(const CMPoint& p);
IdealPresentation omega_ideal(const CMPoint& p, const SkewSum& kfac);

}  // namespace weylcm
