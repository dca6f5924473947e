// Unit tests for separated-product arithmetic in the skew field: chiral
// sums, right Weyl-module structure, chirality conversion, projections,
// sandwich products, and the conjugation maps phi/psi.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylcm/skew.hpp"

using namespace weylcm;

namespace {

Rat rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Rat(num(rng)) / Rat(den(rng));
}

UniPoly rnd_poly(std::mt19937& rng, int max_deg, bool nonzero = false) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  for (;;) {
    int d = deg(rng);
    std::vector<Rat> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = rnd_rat(rng);
    UniPoly p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

WeylElement rnd_weyl(std::mt19937& rng, int max_deg, int n_terms = 3) {
  std::uniform_int_distribution<int> e(0, max_deg);
  WeylElement w;
  for (int t = 0; t < n_terms; ++t) w.add_term({e(rng), e(rng)}, rnd_rat(rng));
  return w;
}

SkewSum rnd_skew(std::mt19937& rng, Chirality chi, int n_terms = 3) {
  SkewSum s(chi);
  for (int t = 0; t < n_terms; ++t)
    s.add_term(RatFun(rnd_poly(rng, 2), rnd_poly(rng, 2, true)),
               RatFun(rnd_poly(rng, 2), rnd_poly(rng, 2, true)));
  return s;
}

RatFun inv_var() { return RatFun(UniPoly(Rat(1)), UniPoly::var()); }

// kappa = 1 - y^{-1} x^{-1} in YX form; its inverse 1 + x^{-1} y^{-1} in XY
// form (one-dimensional data X = Y = 0, i = j = 1).
SkewSum simple_kappa() {
  SkewSum k(Chirality::YX);
  k.add_term(RatFun(1), RatFun(1));
  k.add_term(-inv_var(), inv_var());
  return k;
}

SkewSum simple_chi() {
  SkewSum c(Chirality::XY);
  c.add_term(RatFun(1), RatFun(1));
  c.add_term(inv_var(), inv_var());
  return c;
}

}  // namespace

TEST_CASE("embedding round-trips through both chiralities") {
  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    WeylElement a = rnd_weyl(rng, 4);
    CHECK(skew_to_weyl(SkewSum::from_weyl(a, Chirality::XY)) == a);
    CHECK(skew_to_weyl(SkewSum::from_weyl(a, Chirality::YX)) == a);
    CHECK(skew_equal(SkewSum::from_weyl(a, Chirality::XY),
                     SkewSum::from_weyl(a, Chirality::YX)));
  }
}

TEST_CASE("right multiplication by generators") {
  // s = y^{-1} x^{-1}
  SkewSum s(Chirality::YX);
  s.add_term(inv_var(), inv_var());

  // s * x = y^{-1}
  SkewSum sx = skew_rmul(s, WeylElement::gen_x());
  SkewSum exp_x(Chirality::YX);
  exp_x.add_term(inv_var(), RatFun(1));
  CHECK(skew_is_zero(sx - exp_x));

  // s * y = x^{-1} - y^{-1} x^{-2}
  SkewSum sy = skew_rmul(s, WeylElement::gen_y());
  SkewSum exp_y(Chirality::YX);
  exp_y.add_term(RatFun(1), inv_var());
  exp_y.add_term(-inv_var(), inv_var() * inv_var());
  CHECK(skew_is_zero(sy - exp_y));
}

TEST_CASE("cross-chirality commutation: x^{-1} y = y x^{-1} - x^{-2}") {
  SkewSum s(Chirality::XY);
  s.add_term(inv_var(), RatFun(1));  // x^{-1}
  SkewSum sy = skew_rmul(s, WeylElement::gen_y());

  SkewSum exp(Chirality::YX);
  exp.add_term(RatFun(UniPoly::var()), inv_var());
  exp.add_term(RatFun(-1), inv_var() * inv_var());
  CHECK(skew_equal(sy, exp));
}

TEST_CASE("right module law: (s*a)*b = s*(ab)") {
  std::mt19937 rng(23);
  for (auto chi : {Chirality::YX, Chirality::XY}) {
    for (int it = 0; it < 8; ++it) {
      SkewSum s = rnd_skew(rng, chi);
      WeylElement a = rnd_weyl(rng, 2), b = rnd_weyl(rng, 2);
      SkewSum lhs = skew_rmul(skew_rmul(s, a), b);
      SkewSum rhs = skew_rmul(s, weyl_mul(a, b));
      CHECK(skew_is_zero(lhs - rhs));
    }
  }
}

TEST_CASE("left polynomial multiplication agrees with the embedding") {
  std::mt19937 rng(31);
  for (auto chi : {Chirality::YX, Chirality::XY}) {
    for (int it = 0; it < 8; ++it) {
      WeylElement a = rnd_weyl(rng, 3);
      UniPoly p = rnd_poly(rng, 3);
      bool var_is_x = (it % 2 == 0);
      WeylElement pa = weyl_mul(var_is_x ? WeylElement::from_poly_x(p)
                                         : WeylElement::from_poly_y(p),
                                a);
      SkewSum got = skew_lmul_poly(p, var_is_x, SkewSum::from_weyl(a, chi));
      CHECK(skew_is_zero(got - SkewSum::from_weyl(pa, chi)));
    }
  }
}

TEST_CASE("zero test sees through partial fractions") {
  // 1/(y^2 - 1) = 1/2 (1/(y-1)) - 1/2 (1/(y+1)) as left factors.
  UniPoly t = UniPoly::var();
  SkewSum s(Chirality::YX);
  s.add_term(RatFun(UniPoly(Rat(1)), t * t - UniPoly(Rat(1))),
             RatFun(UniPoly::var()));
  s.add_term(RatFun(UniPoly(Rat(-1)) * (Rat(1) / Rat(2)),
                    t - UniPoly(Rat(1))),
             RatFun(UniPoly::var()));
  s.add_term(RatFun(UniPoly(Rat(1)) * (Rat(1) / Rat(2)),
                    t + UniPoly(Rat(1))),
             RatFun(UniPoly::var()));
  CHECK(skew_is_zero(s));
  s.add_term(RatFun(1), RatFun(1));
  CHECK(!skew_is_zero(s));
}

TEST_CASE("chirality conversion round-trips and rejects proper*proper") {
  std::mt19937 rng(47);
  for (int it = 0; it < 8; ++it) {
    // Right factors polynomial: conversion is always possible.
    SkewSum s(Chirality::YX);
    for (int t = 0; t < 3; ++t)
      s.add_term(RatFun(rnd_poly(rng, 2), rnd_poly(rng, 2, true)),
                 RatFun(rnd_poly(rng, 3)));
    SkewSum back = skew_convert(skew_convert(s, Chirality::XY), Chirality::YX);
    CHECK(skew_is_zero(s - back));
  }
  SkewSum bad(Chirality::YX);
  bad.add_term(inv_var(), inv_var());
  bad.add_term(inv_var() * inv_var(), inv_var());
  CHECK_THROWS_AS(skew_convert(bad, Chirality::XY), std::domain_error);
}

TEST_CASE("projections: split, idempotence, chirality guard") {
  std::mt19937 rng(53);
  for (int it = 0; it < 8; ++it) {
    SkewSum s = rnd_skew(rng, Chirality::YX);
    for (auto which : {Projection::acute_x, Projection::grave_y}) {
      SkewDecomp d = skew_split(s, which);
      CHECK(skew_is_zero(s - d.polynomial_part - d.vanishing_part));
      SkewSum p = project(s, which);
      CHECK(skew_is_zero(p - d.polynomial_part));
      CHECK(skew_is_zero(project(p, which) - p));
    }
    CHECK_THROWS_AS(project(s, Projection::grave_x), std::domain_error);
    CHECK_THROWS_AS(project(s, Projection::acute_y), std::domain_error);
  }
}

TEST_CASE("sandwich products: kappa * kappa^{-1} = 1 both ways") {
  SkewSum kappa = simple_kappa(), chi = simple_chi();

  SandwichSum yxy = skew_mul_cross(kappa, chi);
  yxy.add_term(RatFun(-1), RatFun(1), RatFun(1));
  CHECK(sandwich_is_zero(yxy));

  SandwichSum xyx = skew_mul_cross(chi, kappa);
  xyx.add_term(RatFun(-1), RatFun(1), RatFun(1));
  CHECK(sandwich_is_zero(xyx));

  // A deliberately wrong inverse must fail.
  SkewSum not_chi(Chirality::XY);
  not_chi.add_term(RatFun(1), RatFun(1));
  not_chi.add_term(inv_var() * Rat(2), inv_var());
  SandwichSum bad = skew_mul_cross(kappa, not_chi);
  bad.add_term(RatFun(-1), RatFun(1), RatFun(1));
  CHECK(!sandwich_is_zero(bad));
}

TEST_CASE("phi fixes x- and y-polynomials, psi inverts phi") {
  SkewSum kappa = simple_kappa(), chi = simple_chi();
  std::mt19937 rng(61);
  for (int k = 0; k <= 4; ++k) {
    CHECK(phi(WeylElement::monomial(k, 0), kappa) ==
          WeylElement::monomial(k, 0));
    CHECK(phi(WeylElement::monomial(0, k), kappa) ==
          WeylElement::monomial(0, k));
  }
  CHECK(phi(WeylElement::monomial(1, 1), kappa) ==
        WeylElement::monomial(1, 1) - WeylElement(Rat(1)));
  for (int it = 0; it < 10; ++it) {
    WeylElement a = rnd_weyl(rng, 3);
    CHECK(psi(phi(a, kappa), chi) == a);
    CHECK(phi(psi(a, chi), kappa) == a);
  }
}

TEST_CASE("conjugated generators have scalar commutator defect") {
  SkewSum kappa = simple_kappa(), chi = simple_chi();
  std::mt19937 rng(67);
  // At the identity the defect is the rank of the data, here 1.
  CHECK(commutator_defect(WeylElement(Rat(1)), kappa, chi) == Rat(1));
  // For other arguments it is a scalar depending linearly on the argument.
  for (int it = 0; it < 6; ++it) {
    WeylElement a = rnd_weyl(rng, 3), b = rnd_weyl(rng, 3);
    Rat da = commutator_defect(a, kappa, chi);
    Rat db = commutator_defect(b, kappa, chi);
    CHECK(commutator_defect(a + b, kappa, chi) == da + db);
  }
}
