#pragma once

// Dense univariate polynomials and reduced rational functions over Rat.
//
// UniPoly stores coefficients low degree first with no trailing zeros, so
// equality of values is equality of coefficient vectors.  RatFun keeps its
// denominator monic and coprime to the numerator, making zero and equality
// tests trivial.

#include <string>
#include <vector>

#include "weylcm/rat.hpp"

namespace weylcm {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const Rat& c) {
    if (c != 0) coeffs_ = {c};
  }
  // Needed so generic (e.g. Eigen) code can write Scalar(0), Scalar(1).
  explicit UniPoly(int c) : UniPoly(Rat(c)) {}
  explicit UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  // The variable t itself.
  static UniPoly var() { return monomial(1, Rat(1)); }
  // c * t^d.
  static UniPoly monomial(long d, const Rat& c);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(long d) const {
    return (d >= 0 && d <= degree()) ? coeffs_[d] : Rat(0);
  }
  Rat leading_coeff() const { return is_zero() ? Rat(0) : coeffs_.back(); }
  bool is_monic() const { return leading_coeff() == 1; }
  bool is_constant() const { return degree() <= 0; }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& c) const;
  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly derivative() const;
  Rat eval(const Rat& t) const;
  // Scales by the inverse of the leading coefficient; zero stays zero.
  UniPoly monic() const;

  // Human-readable form like "t^2 - 1/2 t + 3" (for diagnostics).
  std::string to_string(const std::string& var_name = "t") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

inline UniPoly operator*(const Rat& c, const UniPoly& p) { return p * c; }

// Euclidean division: a = q*b + r with deg r < deg b.  Throws on b = 0.
struct PolyDivResult {
  UniPoly quot, rem;
};
PolyDivResult poly_divmod(const UniPoly& a, const UniPoly& b);

// Exact division; throws std::logic_error if b does not divide a.
UniPoly poly_divexact(const UniPoly& a, const UniPoly& b);

// Monic gcd / lcm; gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
UniPoly poly_lcm(const UniPoly& a, const UniPoly& b);

// All rational roots of p (each listed once, no multiplicities).
std::vector<Rat> rational_roots(const UniPoly& p);

// Reduced fraction of two UniPoly: monic denominator, coprime to numerator.
class RatFun {
 public:
  RatFun() : num_(), den_(UniPoly(Rat(1))) {}
  explicit RatFun(const Rat& c) : num_(UniPoly(c)), den_(UniPoly(Rat(1))) {}
  explicit RatFun(int c) : RatFun(Rat(c)) {}
  explicit RatFun(const UniPoly& p) : num_(p), den_(UniPoly(Rat(1))) {}
  RatFun(const UniPoly& num, const UniPoly& den);

  static RatFun var() { return RatFun(UniPoly::var()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }
  // A proper fraction vanishes at infinity: deg num < deg den.
  bool is_proper() const { return num_.degree() < den_.degree(); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator*(const Rat& c) const { return *this * RatFun(c); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun inverse() const;
  // Quotient-rule derivative.
  RatFun derivative() const;

  // Unique splitting f = poly_part + proper_part with the latter vanishing
  // at infinity.
  UniPoly poly_part() const;
  RatFun proper_part() const;

  std::string to_string(const std::string& var_name = "t") const;

 private:
  UniPoly num_, den_;
};

inline RatFun operator*(const Rat& c, const RatFun& f) {
  return RatFun(c) * f;
}

}  // namespace weylcm
