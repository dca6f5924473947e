#include "weylcm/resolution.hpp"

#include <stdexcept>
#include <vector>

namespace weylcm {

namespace {

// M - t*Id as a matrix of univariate polynomials.
MatP shifted(const MatQ& m) {
  const Eigen::Index n = m.rows();
  MatP s(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      s(r, c) = UniPoly(m(r, c));
      if (r == c) s(r, c) -= UniPoly::var();
    }
  return s;
}

// The row vector jbar * adj(M - t*Id), one polynomial per column, plus the
// determinant of the shifted matrix.
struct AdjRow {
  std::vector<UniPoly> row;
  UniPoly det_shift;
};
AdjRow adj_row(const RowVecQ& j, const MatQ& M) {
  const Eigen::Index n = M.rows();
  MatP s = shifted(M);
  AdjRow a;
  a.det_shift = det<UniPoly>(s);
  MatP adj = adjugate<UniPoly>(s);
  for (Eigen::Index c = 0; c < n; ++c) {
    UniPoly u;
    for (Eigen::Index t = 0; t < n; ++t) u += adj(t, c) * j(0, t);
    a.row.push_back(u);
  }
  return a;
}

// Scalar polynomial row * v.
UniPoly apply_row(const AdjRow& a, const VecQ& v) {
  UniPoly u;
  for (size_t s = 0; s < a.row.size(); ++s) u += a.row[s] * v(s, 0);
  return u;
}

}  // namespace

SkewSum delta_x(const CMPoint& p, const VecQ& v, long k, long m) {
  SkewSum out(Chirality::XY);
  if (m == 0 || p.n == 0) return out;
  AdjRow a = adj_row(p.j, p.X);
  VecQ w = v;
  for (long e = 0; e < k; ++e) w = p.X * w;
  // Inner vectors Ybar^{m-l} Xbar^k v for l = m down to 1.
  std::vector<VecQ> pw(m);
  pw[0] = w;
  for (long e = 1; e < m; ++e) pw[e] = p.Y * pw[e - 1];
  for (long l = 1; l <= m; ++l) {
    UniPoly c = apply_row(a, pw[m - l]);
    out.add_term(RatFun(-c, a.det_shift),
                 RatFun(UniPoly::monomial(l - 1, Rat(1))));
  }
  return out.normalized();
}

SkewSum delta_y(const CMPoint& p, const VecQ& v, long k, long m) {
  SkewSum out(Chirality::YX);
  if (k == 0 || p.n == 0) return out;
  AdjRow a = adj_row(p.j, p.Y);
  std::vector<VecQ> pw(k);
  pw[0] = v;
  for (long e = 1; e < k; ++e) pw[e] = p.X * pw[e - 1];
  for (long l = 1; l <= k; ++l) {
    UniPoly c = apply_row(a, pw[k - l]);
    out.add_term(RatFun(c, a.det_shift),
                 RatFun(UniPoly::monomial(l - 1, Rat(1))));
  }
  // The trailing y^m has to cross the x-powers collected on the right.
  if (m > 0) out = skew_rmul(out, WeylElement::monomial(0, m));
  return out.normalized();
}

SkewSum gmap_image(const CMPoint& p, char which, long k, long m) {
  if (which == 'x') {
    SkewSum s =
        SkewSum::from_weyl(WeylElement::monomial(k, m), Chirality::XY);
    return (s + delta_x(p, p.i, k, m)).normalized();
  }
  if (which == 'y') {
    SkewSum s =
        SkewSum::from_weyl(WeylElement::monomial(k, m), Chirality::YX);
    return (s + delta_y(p, p.i, k, m)).normalized();
  }
  throw std::invalid_argument("gmap_image: `which` must be 'x' or 'y'");
}

IdealPresentation omega_ideal(const CMPoint& p) {
  return omega_ideal(p, kappa(p).kappa);
}

IdealPresentation omega_ideal(const CMPoint& p, const SkewSum& kfac) {
  if (kfac.chirality() != Chirality::YX)
    throw std::invalid_argument("omega_ideal: factor must have chirality YX");
  IdealPresentation I;
  I.source = p;
  I.gen_poly = WeylElement::from_poly_y(charpoly(p.Y));
  // Right-multiplying by a polynomial in x needs no commutation and, done
  // per term, keeps each right factor whole for the membership check.
  RatFun px{charpoly(p.X)};
  SkewSum sk(Chirality::YX);
  for (const auto& t : kfac.terms()) sk.add_term(t.left, t.right * px);
  I.gen_skew = sk.normalized();
  for (const auto& t : I.gen_skew.terms())
    if (!t.right.is_poly())
      throw std::domain_error(
          "omega_ideal: skew generator is not polynomial in x");
  UniPoly d(Rat(1));
  for (const auto& t : I.gen_skew.terms()) d = poly_lcm(d, t.left.den());
  I.clearing = d;
  I.cleared_poly = WeylElement::from_poly_y(d) * I.gen_poly;
  I.cleared_skew = skew_to_weyl(skew_lmul_poly(d, false, I.gen_skew));
  return I;
}

}  // namespace weylcm
