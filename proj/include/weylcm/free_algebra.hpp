#pragma once

// The free algebra k<x,y> and the commutator-preserving automorphisms
// generated by transvections.  Free elements are finite sums of words over
// the alphabet {x, y}.

#include <map>
#include <string>

#include "weylcm/weyl.hpp"

namespace weylcm {

class FreeElement {
 public:
  using TermMap = std::map<std::string, Rat>;  // word -> coefficient

  FreeElement() = default;
  explicit FreeElement(const Rat& c) { add_term("", c); }
  static FreeElement word(const std::string& w, const Rat& c = Rat(1)) {
    FreeElement e;
    e.add_term(w, c);
    return e;
  }
  static FreeElement gen_x() { return word("x"); }
  static FreeElement gen_y() { return word("y"); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const std::string& w, const Rat& c);

  FreeElement operator-() const;
  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement operator*(const FreeElement& o) const;  // word concatenation
  FreeElement operator*(const Rat& c) const;
  bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const FreeElement& o) const { return !(*this == o); }

  // Image in the Weyl algebra (normal ordering via the defining relation).
  WeylElement to_weyl() const;

  // Substitutes the given elements for the generators, multiplying letters
  // left to right.
  FreeElement substitute(const FreeElement& for_x,
                         const FreeElement& for_y) const;

  // Evaluates the words at a pair of square matrices, left to right:
  // the word "xy" evaluates to X*Y.
  MatQ eval(const MatQ& X, const MatQ& Y) const;

  // Word reversal: the canonical anti-involution fixing the generators.
  // Satisfies tau(tau(a)) = a and tau(a*b) = tau(b)*tau(a).
  FreeElement tau() const;

  // tau-twisted evaluation: evaluates the reversed words, so the word
  // "xy" gives Y*X.  Reverses products: (a*b) evaluates to eval_tau(b) *
  // eval_tau(a).
  MatQ eval_tau(const MatQ& X, const MatQ& Y) const {
    return tau().eval(X, Y);
  }

  std::string to_string() const;

 private:
  TermMap terms_;
};

// Canonical word lift x^k y^l of a normal monomial, extended linearly.
FreeElement free_lift(const WeylElement& a);

// An automorphism of the Weyl algebra given by free-algebra images of the
// generators, together with the images under its inverse.  Construction
// verifies sigma(x)sigma(y) - sigma(y)sigma(x) = xy - yx exactly in the
// free algebra (which holds for transvections and their compositions) and
// that the claimed inverse really inverts on generators.
class Automorphism {
 public:
  static Automorphism identity();
  // x -> x, y -> y + p(x); inverse substitutes -p.
  static Automorphism transvection_x(const UniPoly& p);
  // x -> x + q(y), y -> y; inverse substitutes -q.
  static Automorphism transvection_y(const UniPoly& q);
  // first `a`, then `b`:  (b after a)(t) = b(a(t)).
  static Automorphism compose(const Automorphism& b, const Automorphism& a);

  const FreeElement& image_x() const { return fx_; }
  const FreeElement& image_y() const { return fy_; }
  const FreeElement& inverse_image_x() const { return gx_; }
  const FreeElement& inverse_image_y() const { return gy_; }
  Automorphism inverse() const { return Automorphism(gx_, gy_, fx_, fy_); }

 private:
  Automorphism(FreeElement fx, FreeElement fy, FreeElement gx, FreeElement gy);
  FreeElement fx_, fy_, gx_, gy_;
};

// Applies the automorphism to a Weyl element by substituting into the
// canonical word lift and renormalizing; the result does not depend on the
// lift because the images preserve the defining relation.
WeylElement apply_automorphism(const Automorphism& s, const WeylElement& a);

}  // namespace weylcm
