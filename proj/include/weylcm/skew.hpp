#pragma once

// Arithmetic in the two chiral subspaces of the quotient skew field Q of
// the Weyl algebra: finite sums of separated products g(y) f(x) (chirality
// YX) and f(x) g(y) (chirality XY), with rational-function factors.
//
// These subspaces are closed under multiplication by Weyl-algebra elements
// on either side via the commutation rules
//     f(x) y = y f(x) + f'(x)       and       g(y) x = x g(y) - g'(y),
// which is all the localization machinery the correspondence needs.
// Products of one chirality with the other land in three-factor "sandwich"
// sums; a dedicated zero test clears the outer denominators and folds the
// result back into a single chirality.

#include <string>
#include <vector>

#include "weylcm/unipoly.hpp"
#include "weylcm/weyl.hpp"

namespace weylcm {

enum class Chirality { YX, XY };

// Polynomial-part projections; accents record which side of the written
// product the projection acts on (grave = left factor, acute = right).
enum class Projection { acute_x, grave_x, acute_y, grave_y };

class SkewSum {
 public:
  // One separated product: left * right in writing order.  For YX the left
  // factor is rational in y and the right in x; for XY the reverse.
  struct Term {
    RatFun left, right;
  };

  explicit SkewSum(Chirality chi) : chi_(chi) {}
  static SkewSum zero(Chirality chi) { return SkewSum(chi); }
  static SkewSum one(Chirality chi) {
    SkewSum s(chi);
    s.add_term(RatFun(Rat(1)), RatFun(Rat(1)));
    return s;
  }
  // Embeds a Weyl-algebra element: trivial for XY (normal order is already
  // x-left), and via x^k y^m = sum_j C(m,j) C(k,j) j! y^{m-j} x^{k-j} for YX.
  static SkewSum from_weyl(const WeylElement& a, Chirality chi);

  Chirality chirality() const { return chi_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(const RatFun& left, const RatFun& right);

  SkewSum operator-() const;
  SkewSum operator+(const SkewSum& o) const;  // requires equal chirality
  SkewSum operator-(const SkewSum& o) const;
  SkewSum operator*(const Rat& c) const;

  // Merges terms sharing a right factor and drops zeros (cheap dedup; the
  // canonical zero test below does not depend on it).
  SkewSum normalized() const;

 private:
  Chirality chi_;
  std::vector<Term> terms_;
};

// Right product s * a in Q; chirality is preserved.
SkewSum skew_rmul(const SkewSum& s, const WeylElement& a);

// Left product p * s for a pure polynomial in the variable named by
// `var_is_x`; used for denominator clearing.
SkewSum skew_lmul_poly(const UniPoly& p, bool var_is_x, const SkewSum& s);

// Exact zero test: clears the right-hand denominators to a common q,
// collects the (already ordered) coefficients per power of the right
// variable, and tests them all.
bool skew_is_zero(const SkewSum& s);

// Rewrites into the other chirality term by term.  Requires each term to
// have a polynomial factor on the side that must cross (a proper-proper
// term has no finite rewriting); throws std::domain_error otherwise.
SkewSum skew_convert(const SkewSum& s, Chirality target);

// Equality in Q; converts chirality if the operands disagree.
bool skew_equal(const SkewSum& a, const SkewSum& b);

// Replaces the designated factor of each term by its polynomial part.
// Throws std::domain_error when the projection does not apply to the
// sum's chirality.
SkewSum project(const SkewSum& s, Projection which);

// Converts a sum whose factors are all polynomial into a Weyl element;
// throws std::domain_error if a denominator survives.
WeylElement skew_to_weyl(const SkewSum& s);

// Splitting off the polynomial part of the projected factor: s =
// polynomial_part + vanishing_part, the latter proper in that factor.
struct SkewDecomp {
  SkewSum polynomial_part;
  SkewSum vanishing_part;
};
SkewDecomp skew_split(const SkewSum& s, Projection which);

// Three-factor sums left(v1) * mid(v2) * right(v1) arising as products of
// opposite chiralities; XYX means the outer factors are rational in x.
class SandwichSum {
 public:
  struct Term {
    RatFun left, mid, right;
  };
  enum class Kind { XYX, YXY };

  explicit SandwichSum(Kind kind) : kind_(kind) {}
  Kind kind() const { return kind_; }
  const std::vector<Term>& terms() const { return terms_; }
  void add_term(const RatFun& left, const RatFun& mid, const RatFun& right) {
    if (left.is_zero() || mid.is_zero() || right.is_zero()) return;
    terms_.push_back({left, mid, right});
  }

 private:
  Kind kind_;
  std::vector<Term> terms_;
};

// Product across chiralities: XY * YX gives an XYX sandwich, YX * XY a
// YXY one (the two middle factors multiply in the commutative field).
SandwichSum skew_mul_cross(const SkewSum& a, const SkewSum& b);

// Zero test for sandwiches: clears the outer denominators on both sides
// (left multiplication and right multiplication by nonzero polynomials
// preserve vanishing in the skew field), commutes the now-polynomial
// outer factors through the middle, and defers to skew_is_zero.
bool sandwich_is_zero(const SandwichSum& s);

// phi(a) = grave_y . acute_x (kappa * a), an invertible filtration-
// preserving linear map A -> A; psi is its inverse, computed from
// chi = kappa^{-1} as grave_x . acute_y (chi * a).
WeylElement phi(const WeylElement& a, const SkewSum& kappa);
WeylElement psi(const WeylElement& a, const SkewSum& chi);

// The scalar (XY - YX)a + a where X(a) = psi(phi(a) * x) and Y(a) = a * y.
// Throws std::logic_error if the result is not scalar (invalid kappa).
Rat commutator_defect(const WeylElement& a, const SkewSum& kappa,
                      const SkewSum& chi);

}  // namespace weylcm
