#pragma once

// Normal-form arithmetic in the first Weyl algebra A1 = k<x,y>/(xy-yx-1).
//
// Elements are stored as finite sums  sum c_{kl} x^k y^l  with x-powers to
// the left of y-powers; this normal form is canonical, so equality is map
// equality.  The monomial order used everywhere is the y-dominant
// lexicographic order:  x^k y^l < x^k' y^l'  iff  l < l', or l = l' and
// k < k'.  Constants are minimal and the order is multiplicative, which is
// what the Groebner machinery downstream depends on.

#include <compare>
#include <map>
#include <string>

#include "weylcm/matrix.hpp"
#include "weylcm/rat.hpp"

namespace weylcm {

// Exponent pair of a normal monomial x^k y^l, ordered y-dominantly.
struct Expo {
  long k = 0;
  long l = 0;
  friend auto operator<=>(const Expo& a, const Expo& b) {
    if (auto c = a.l <=> b.l; c != 0) return c;
    return a.k <=> b.k;
  }
  friend bool operator==(const Expo&, const Expo&) = default;
  long total_degree() const { return k + l; }
};

class WeylElement {
 public:
  using TermMap = std::map<Expo, Rat>;

  WeylElement() = default;
  explicit WeylElement(const Rat& c) { add_term({0, 0}, c); }

  static WeylElement monomial(long k, long l, const Rat& c = Rat(1)) {
    WeylElement e;
    e.add_term({k, l}, c);
    return e;
  }
  static WeylElement gen_x() { return monomial(1, 0); }
  static WeylElement gen_y() { return monomial(0, 1); }
  // Embeds a univariate polynomial as p(x) or p(y).
  static WeylElement from_poly_x(const UniPoly& p);
  static WeylElement from_poly_y(const UniPoly& p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient of 1 (the full value if is_constant()).
  Rat constant_term() const { return coeff(0, 0); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(long k, long l) const {
    auto it = terms_.find({k, l});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  long total_degree() const;  // -1 for zero

  void add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  WeylElement operator-() const;
  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator*(const Rat& c) const;
  WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
  WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }
  bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline WeylElement operator*(const Rat& c, const WeylElement& a) {
  return a * c;
}

// Normal-order product.  Derived from the defining relation: moving y^b
// across x^c contributes  y^b x^c = sum_j (-1)^j C(b,j) C(c,j) j!
// x^{c-j} y^{b-j}.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return weyl_mul(a, b);
}

// Reversal on canonical lifts: tau(x^k y^l) = normal form of y^l x^k,
// extended linearly.  The genuine anti-involution lives on the free
// algebra (FreeElement::tau, word reversal); this is its shadow on normal
// forms, well-defined as a linear map but not an algebra anti-map (the
// Weyl algebra has no anti-automorphism fixing both generators, since one
// would negate the commutator).
WeylElement weyl_tau(const WeylElement& a);

// Reversal-twisted evaluation on canonical lifts: x^k y^l -> Y^l * X^k
// (matrix product), extended linearly.  Product reversal
// eval_tau(ab) = eval_tau(b) * eval_tau(a) holds at word level
// (FreeElement::eval_tau), not for the Weyl product: k^n is a module over
// the free algebra only, which is precisely why the homotopy corrections
// exist downstream.
MatQ eval_tau(const WeylElement& a, const MatQ& X, const MatQ& Y);

// Greatest term under the y-dominant order; throws on zero input.
struct LeadingTerm {
  Expo expo;
  Rat coeff;
};
LeadingTerm leading_term(const WeylElement& a);

}  // namespace weylcm
