#pragma once

// Exact rational scalars used as the base field throughout the library.
//
// Rat is an arbitrary-precision rational kept in lowest terms with a
// positive denominator.  It deliberately wraps the multiprecision backend
// in a plain value class: the backend's generic converting constructors
// otherwise interfere with Eigen's expression templates during overload
// resolution.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace weylcm {

using BigInt = boost::multiprecision::cpp_int;

class Rat {
 public:
  Rat() = default;
  Rat(int v) : v_(v) {}
  Rat(long v) : v_(v) {}
  Rat(const BigInt& v) : v_(v) {}
  Rat(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
  }

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  friend Rat operator-(const Rat& a) { return Rat(Wrap{}, -a.v_); }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(Wrap{}, a.v_ + b.v_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(Wrap{}, a.v_ - b.v_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(Wrap{}, a.v_ * b.v_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_ == 0) throw std::invalid_argument("rational division by zero");
    return Rat(Wrap{}, a.v_ / b.v_);
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  struct Wrap {};
  Rat(Wrap, Backend v) : v_(std::move(v)) {}
  Backend v_;
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

inline BigInt rat_num(const Rat& r) { return r.num(); }
inline BigInt rat_den(const Rat& r) { return r.den(); }

// Serializes as "p" for integers and "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
  if (r.den() == 1) return r.num().str();
  return r.num().str() + "/" + r.den().str();
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << rat_to_string(r);
}

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational: " + s);
  }
}

// Exact binomial coefficient; k may exceed n, giving 0.
inline Rat binomial(long n, long k) {
  if (k < 0 || k > n) return Rat(0);
  Rat acc(1);
  for (long t = 0; t < k; ++t) acc *= Rat(n - t) / Rat(t + 1);
  return acc;
}

inline Rat factorial(long n) {
  Rat acc(1);
  for (long t = 2; t <= n; ++t) acc *= Rat(t);
  return acc;
}

}  // namespace weylcm
