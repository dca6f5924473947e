// Unit tests for the arithmetic foundations: rationals, polynomials,
// rational functions, exact matrix kernels, Weyl-algebra normal forms and
// automorphisms.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "weylcm/free_algebra.hpp"
#include "weylcm/matrix.hpp"
#include "weylcm/rat.hpp"
#include "weylcm/unipoly.hpp"
#include "weylcm/weyl.hpp"

using namespace weylcm;

namespace {

Rat rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Rat(num(rng)) / Rat(den(rng));
}

UniPoly rnd_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Rat> c(static_cast<size_t>(d) + 1);
  for (auto& v : c) v = rnd_rat(rng);
  return UniPoly(std::move(c));
}

WeylElement rnd_weyl(std::mt19937& rng, int max_deg, int n_terms = 4) {
  std::uniform_int_distribution<int> e(0, max_deg);
  WeylElement w;
  for (int t = 0; t < n_terms; ++t) w.add_term({e(rng), e(rng)}, rnd_rat(rng));
  return w;
}

}  // namespace

TEST_CASE("rational string round-trip") {
  CHECK(rat_to_string(Rat(7)) == "7");
  CHECK(rat_to_string(Rat(-3) / Rat(6)) == "-1/2");
  CHECK(rat_from_string("22/7") == Rat(22) / Rat(7));
  CHECK(rat_from_string("-5") == Rat(-5));
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("abc"), std::invalid_argument);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == Rat(10));
  CHECK(binomial(3, 5) == Rat(0));
  CHECK(factorial(5) == Rat(120));
}

TEST_CASE("polynomial arithmetic and division") {
  UniPoly t = UniPoly::var();
  UniPoly p = t * t - UniPoly(Rat(1));            // t^2 - 1
  UniPoly q = t + UniPoly(Rat(1));                // t + 1
  CHECK(poly_divexact(p, q) == t - UniPoly(Rat(1)));
  auto dm = poly_divmod(p, t * t);
  CHECK(dm.quot == UniPoly(Rat(1)));
  CHECK(dm.rem == -UniPoly(Rat(1)));
  CHECK(poly_gcd(p, q) == q);
  CHECK(poly_lcm(q, t - UniPoly(Rat(1))) == p);
  CHECK(p.derivative() == t * Rat(2));
  CHECK(p.eval(Rat(3)) == Rat(8));
}

TEST_CASE("rational roots") {
  UniPoly t = UniPoly::var();
  // (t - 1/2)(t + 3) t = t^3 + (5/2)t^2 - (3/2)t
  UniPoly p = (t - UniPoly(Rat(1) / 2)) * (t + UniPoly(Rat(3))) * t;
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == Rat(-3));
  CHECK(roots[1] == Rat(0));
  CHECK(roots[2] == Rat(1) / 2);
  // t^2 + 1 has no rational roots.
  CHECK(rational_roots(t * t + UniPoly(Rat(1))).empty());
}

TEST_CASE("rational functions reduce and split") {
  UniPoly t = UniPoly::var();
  RatFun f(t * t - UniPoly(Rat(1)), (t + UniPoly(Rat(1))) * Rat(2));
  CHECK(f.is_poly());
  CHECK(f.num() == (t - UniPoly(Rat(1))) * (Rat(1) / 2));
  RatFun g(UniPoly(Rat(1)), t);  // 1/t
  RatFun h = RatFun(t) + g;      // t + 1/t = (t^2+1)/t
  CHECK(h.poly_part() == t);
  CHECK(h.proper_part() == g);
  CHECK(h - RatFun(h.poly_part()) == h.proper_part());
  CHECK(g.derivative() == -RatFun(UniPoly(Rat(1)), t * t));
  CHECK((g * g.inverse()) == RatFun(Rat(1)));
}

TEST_CASE("determinant and adjugate over polynomial entries") {
  std::mt19937 rng(7);
  for (int n = 0; n <= 4; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      MatP m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rnd_poly(rng, 2);
      UniPoly d = det<UniPoly>(m);
      MatP adj = adjugate<UniPoly>(m);
      MatP prod = adj * m;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(prod(i, j) == (i == j ? d : UniPoly()));
    }
  }
}

TEST_CASE("determinant handles zero pivots") {
  MatQ m(3, 3);
  m << 0, 1, 0, 1, 0, 0, 0, 0, 2;
  CHECK(det<Rat>(m) == Rat(-2));
}

TEST_CASE("charpoly is monic with trace and determinant coefficients") {
  MatQ m(2, 2);
  m << 1, 2, 3, 4;
  UniPoly cp = charpoly(m);
  UniPoly t = UniPoly::var();
  CHECK(cp == t * t - t * Rat(5) - UniPoly(Rat(2)));
}

TEST_CASE("rref, kernel, solve") {
  MatQ m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  auto rr = rref(m);
  CHECK(rr.rank == 1);
  MatQ k = kernel_basis(m);
  REQUIRE(k.cols() == 2);
  CHECK((m * k).isZero());  // exact: all entries are rationals
  VecQ b(2);
  b << 6, 12;
  auto sol = solve(m, b);
  REQUIRE(sol.has_value());
  CHECK(m * *sol == b);
  b << 6, 13;
  CHECK(!solve(m, b).has_value());
}

TEST_CASE("weyl_mul basic identities") {
  WeylElement x = WeylElement::gen_x(), y = WeylElement::gen_y();
  CHECK(weyl_mul(y, x) == weyl_mul(x, y) - WeylElement(Rat(1)));
  CHECK(weyl_mul(weyl_mul(x, y), x) ==
        WeylElement::monomial(2, 1) - WeylElement::monomial(1, 0));
  CHECK(weyl_mul(weyl_mul(y, y), x) ==
        WeylElement::monomial(1, 2) - WeylElement::monomial(0, 1) * Rat(2));
  CHECK(weyl_mul(x, y) - weyl_mul(y, x) == WeylElement(Rat(1)));
}

TEST_CASE("weyl_mul matches brute-force word rewriting") {
  // Oracle: rewrite words letter by letter through FreeElement::to_weyl.
  std::mt19937 rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    WeylElement a = rnd_weyl(rng, 3), b = rnd_weyl(rng, 3);
    WeylElement via_words = (free_lift(a) * free_lift(b)).to_weyl();
    CHECK(weyl_mul(a, b) == via_words);
  }
}

TEST_CASE("weyl_mul associativity and unit") {
  std::mt19937 rng(13);
  WeylElement one(Rat(1));
  for (int rep = 0; rep < 20; ++rep) {
    WeylElement a = rnd_weyl(rng, 5), b = rnd_weyl(rng, 5),
                c = rnd_weyl(rng, 5);
    CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
    CHECK(weyl_mul(a, one) == a);
    CHECK(weyl_mul(one, a) == a);
  }
}

TEST_CASE("tau on normal forms matches reversal of canonical lifts") {
  WeylElement x = WeylElement::gen_x(), y = WeylElement::gen_y();
  CHECK(weyl_tau(x) == x);
  CHECK(weyl_tau(y) == y);
  CHECK(weyl_tau(weyl_mul(x, y)) == weyl_mul(x, y) - WeylElement(Rat(1)));
  CHECK(weyl_tau(WeylElement(Rat(1))) == WeylElement(Rat(1)));
  std::mt19937 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    WeylElement a = rnd_weyl(rng, 4);
    // Oracle: reverse the canonical word lift and renormalize.
    CHECK(weyl_tau(a) == free_lift(a).tau().to_weyl());
  }
}

TEST_CASE("free tau is an anti-involution") {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    FreeElement a = free_lift(rnd_weyl(rng, 4)),
                b = free_lift(rnd_weyl(rng, 4));
    CHECK(a.tau().tau() == a);
    CHECK((a * b).tau() == b.tau() * a.tau());
  }
}

TEST_CASE("eval_tau on monomials and word-level product reversal") {
  std::mt19937 rng(19);
  MatQ X(2, 2), Y(2, 2);
  X << 0, 1, 0, 0;
  Y << 0, 0, 1, 0;
  WeylElement x = WeylElement::gen_x(), y = WeylElement::gen_y();
  CHECK(eval_tau(x, X, Y) == X);
  CHECK(eval_tau(weyl_mul(x, y), X, Y) == Y * X);
  CHECK(eval_tau(WeylElement::monomial(2, 3), X, Y) == Y * Y * Y * X * X);
  for (int rep = 0; rep < 15; ++rep) {
    FreeElement a = free_lift(rnd_weyl(rng, 3)),
                b = free_lift(rnd_weyl(rng, 3));
    // Product reversal holds at word level (the free algebra acts; the
    // Weyl algebra does not act on a finite-dimensional space).
    CHECK((a * b).eval_tau(X, Y) == b.eval_tau(X, Y) * a.eval_tau(X, Y));
    // On canonical lifts the two evaluations agree.
    WeylElement c = rnd_weyl(rng, 3);
    CHECK(free_lift(c).eval_tau(X, Y) == eval_tau(c, X, Y));
  }
}

TEST_CASE("leading_term and the y-dominant order") {
  WeylElement a = WeylElement::monomial(3, 0) + WeylElement::gen_y();
  CHECK(leading_term(a).expo == Expo{0, 1});
  WeylElement b = weyl_mul(WeylElement::gen_x(), WeylElement::gen_y()) -
                  WeylElement(Rat(2));
  CHECK(leading_term(b).expo == Expo{1, 1});
  WeylElement c = WeylElement::monomial(2, 1) - WeylElement::monomial(1, 0) * Rat(4);
  CHECK(leading_term(c).expo == Expo{2, 1});
  CHECK_THROWS_AS(leading_term(WeylElement()), std::invalid_argument);
}

TEST_CASE("leading exponents are additive under multiplication") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    WeylElement a = rnd_weyl(rng, 4), b = rnd_weyl(rng, 4);
    if (a.is_zero() || b.is_zero()) continue;
    auto la = leading_term(a), lb = leading_term(b);
    auto lab = leading_term(weyl_mul(a, b));
    CHECK(lab.expo.k == la.expo.k + lb.expo.k);
    CHECK(lab.expo.l == la.expo.l + lb.expo.l);
    CHECK(lab.coeff == la.coeff * lb.coeff);
  }
}

TEST_CASE("automorphism construction and application") {
  UniPoly t = UniPoly::var();
  Automorphism s = Automorphism::transvection_x(t * t);  // y -> y + x^2
  CHECK(apply_automorphism(s, WeylElement::gen_y()) ==
        WeylElement::gen_y() + WeylElement::monomial(2, 0));
  WeylElement comm = weyl_mul(WeylElement::gen_x(), WeylElement::gen_y()) -
                     weyl_mul(WeylElement::gen_y(), WeylElement::gen_x());
  CHECK(apply_automorphism(s, comm) == WeylElement(Rat(1)));

  Automorphism u = Automorphism::transvection_y(t);  // x -> x + y
  CHECK(apply_automorphism(u, weyl_mul(WeylElement::gen_x(),
                                       WeylElement::gen_y())) ==
        weyl_mul(WeylElement::gen_x(), WeylElement::gen_y()) +
            WeylElement::monomial(0, 2));
}

TEST_CASE("automorphism composition and inverse") {
  UniPoly t = UniPoly::var();
  Automorphism s = Automorphism::transvection_x(t * t);
  Automorphism u = Automorphism::transvection_y(t);
  Automorphism su = Automorphism::compose(s, u);
  std::mt19937 rng(29);
  for (int rep = 0; rep < 10; ++rep) {
    WeylElement a = rnd_weyl(rng, 3);
    CHECK(apply_automorphism(su, a) ==
          apply_automorphism(s, apply_automorphism(u, a)));
    CHECK(apply_automorphism(s.inverse(), apply_automorphism(s, a)) == a);
  }
}
