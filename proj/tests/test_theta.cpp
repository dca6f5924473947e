// Unit tests for the ideal-to-quadruple direction: exponent data,
// transported actions, the two triangular corrections, extraction, the
// round trip against the ideal presentations, lift-choice independence,
// and the structured non-split-spectrum failure.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylcm/resolution.hpp"
#include "weylcm/theta.hpp"

using namespace weylcm;

namespace {

std::vector<WeylElement> zero_ideal() {
  return {WeylElement::monomial(0, 2),
          WeylElement::monomial(1, 1) - WeylElement(Rat(2))};
}

std::vector<WeylElement> n2_ideal() {
  return {WeylElement::monomial(0, 3),
          WeylElement::monomial(2, 1) - WeylElement::monomial(1, 0, Rat(4))};
}

// Random elements of the staircase span, for probing the corrected maps.
MonVec random_m0(const ExponentData& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> ex(0, 4), co(-5, 5);
  MonVec a;
  int placed = 0;
  while (placed < 3) {
    Expo e{ex(rng), ex(rng)};
    if (!in_staircase(d.staircase, e)) continue;
    a.add_term(e, Rat(co(rng)));
    ++placed;
  }
  return a;
}

bool in_generator_row(const ExponentData& d, const MonVec& a) {
  for (const auto& [e, c] : a.terms())
    if (e.l != d.principal.l) return false;
  return true;
}

bool is_scalar_times_generator(const ExponentData& d, const MonVec& a) {
  for (const auto& [e, c] : a.terms())
    if (e != d.principal) return false;
  return true;
}

// A valid quadruple whose X-matrix has irrational eigenvalues (the
// X-stable filtration of the second correction cannot split over the
// rationals then, because the corrected action reproduces this spectrum).
CMPoint irrational_point() {
  CMPoint p;
  p.n = 2;
  p.X = MatQ::Zero(2, 2);
  p.X(0, 1) = Rat(1);
  p.X(1, 0) = Rat(2);
  p.Y = MatQ::Zero(2, 2);
  p.Y(1, 0) = Rat(-1);
  p.i = VecQ(2, 1);
  p.i(0, 0) = Rat(0);
  p.i(1, 0) = Rat(1);
  p.j = RowVecQ(1, 2);
  p.j(0, 0) = Rat(0);
  p.j(0, 1) = Rat(2);
  return p;
}

}  // namespace

TEST_CASE("exponent data of the catalog ideals") {
  ExponentData a = exponent_data(groebner(zero_ideal()));
  CHECK(a.principal == Expo{0, 1});
  CHECK(a.complement == std::vector<Expo>{{0, 1}});
  CHECK(a.n() == 1);

  ExponentData u = exponent_data(groebner({WeylElement(Rat(1))}));
  CHECK(u.n() == 0);

  ExponentData b = exponent_data(groebner(n2_ideal()));
  CHECK(b.n() == 2);
}

TEST_CASE("transported actions on the staircase and the complement") {
  RightIdealGB M = groebner(zero_ideal());
  // Complement monomials just shift.
  CHECK(transport_action(M, MonVec::monomial(0, 1), 'x') ==
        MonVec::monomial(1, 1));
  // Staircase monomials travel through the lift.
  CHECK(transport_action(M, MonVec::monomial(1, 2), 'y') ==
        MonVec::monomial(1, 3));
  CHECK_THROWS_AS(transport_action(M, MonVec(Rat(1)), 'x'),
                  std::invalid_argument);
  CHECK_THROWS_AS(transport_action(M, MonVec::monomial(0, 1), 'z'),
                  std::invalid_argument);
}

TEST_CASE("the commutator defect vanishes on the staircase span") {
  for (const auto& gens : {zero_ideal(), n2_ideal()}) {
    ThetaRun run(groebner(gens));
    std::mt19937 rng(3);
    for (int it = 0; it < 10; ++it)
      CHECK(run.bracket_defect(random_m0(run.data(), rng)).is_zero());
  }
}

TEST_CASE("first correction pushes the defect into the generator row") {
  for (const auto& gens : {zero_ideal(), n2_ideal()}) {
    ThetaRun run(groebner(gens));
    CHECK_THROWS_AS(run.correct_Y(), std::logic_error);  // order enforced
    run.correct_X();
    for (const auto& e : run.data().complement)
      CHECK(in_generator_row(run.data(),
                             run.bracket_defect(MonVec::monomial(e.k, e.l))));
    std::mt19937 rng(7);
    for (int it = 0; it < 10; ++it)
      CHECK(run.bracket_defect(random_m0(run.data(), rng)).is_zero());
    CHECK_THROWS_AS(run.correct_X(), std::logic_error);
  }
}

TEST_CASE("no correction is needed for the simplest ideal") {
  ThetaRun run(groebner(zero_ideal()));
  run.correct_X();
  run.correct_Y();
  REQUIRE(run.x_correction().size() == 1);
  CHECK(run.x_correction()[0].is_zero());
  CHECK(run.y_correction()[0].is_zero());
  CHECK(run.y_eigenvalues() == std::vector<Rat>{Rat(0)});
  CHECK(run.x_eigenvalues() == std::vector<Rat>{Rat(0)});
}

TEST_CASE("second correction leaves a scalar multiple of the generator") {
  for (const auto& gens : {zero_ideal(), n2_ideal()}) {
    ThetaRun run(groebner(gens));
    run.correct_X();
    run.correct_Y();
    for (const auto& e : run.data().complement)
      CHECK(is_scalar_times_generator(
          run.data(), run.bracket_defect(MonVec::monomial(e.k, e.l))));
    std::mt19937 rng(11);
    for (int it = 0; it < 10; ++it)
      CHECK(run.bracket_defect(random_m0(run.data(), rng)).is_zero());
  }
}

TEST_CASE("extraction on the named ideals") {
  CHECK(equivalent(theta(zero_ideal()), cm_zero_point()));
  CHECK(theta({WeylElement(Rat(1))}).n == 0);
  CHECK(equivalent(theta(n2_ideal()), cm_point_n2()));
}

TEST_CASE("round trip through the ideal presentation") {
  for (const auto& p : cm_catalog()) {
    IdealPresentation I = omega_ideal(p);
    CMPoint q = theta({I.cleared_poly, I.cleared_skew});
    CHECK(q.n == p.n);
    CHECK(equivalent(q, p));
  }
}

TEST_CASE("lift tie-break does not change the equivalence class") {
  for (const auto& p : cm_catalog()) {
    IdealPresentation I = omega_ideal(p);
    CMPoint q = theta({I.cleared_poly, I.cleared_skew}, 1000000, true);
    CHECK(equivalent(q, p));
  }
}

TEST_CASE("equivariance under transvections") {
  std::vector<Automorphism> sigmas = {
      Automorphism::transvection_x(UniPoly::var()),          // y -> y + x
      Automorphism::transvection_x(UniPoly::monomial(2, Rat(1))),
      Automorphism::transvection_y(UniPoly::var()),          // x -> x + y
  };
  for (const auto& p : {cm_zero_point(), cm_point_n1(Rat(1), Rat(0))}) {
    IdealPresentation I = omega_ideal(p);
    for (const auto& s : sigmas) {
      std::vector<WeylElement> moved = {
          apply_automorphism(s, I.cleared_poly),
          apply_automorphism(s, I.cleared_skew)};
      CHECK(equivalent(theta(moved), act(s, theta({I.cleared_poly,
                                                   I.cleared_skew}))));
    }
  }
}

TEST_CASE("irrational filtration spectra raise a structured error") {
  CMPoint p = irrational_point();
  REQUIRE(validate(p));
  IdealPresentation I = omega_ideal(p);
  try {
    theta({I.cleared_poly, I.cleared_skew});
    FAIL("expected NonSplitSpectrum");
  } catch (const NonSplitSpectrum& e) {
    // The offending factor has no rational roots.
    CHECK(e.factor.degree() >= 2);
    CHECK(rational_roots(e.factor).empty());
  }
}

TEST_CASE("the step guard aborts runaway reductions") {
  CHECK_THROWS_AS(theta(groebner(n2_ideal()), 5), std::runtime_error);
}
