#include "weylcm/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcm {

UniPoly UniPoly::monomial(long d, const Rat& c) {
  if (c == 0) return UniPoly();
  std::vector<Rat> v(static_cast<size_t>(d) + 1, Rat(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v = coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rat& c) const {
  if (c == 0) return UniPoly();
  std::vector<Rat> v = coeffs_;
  for (auto& a : v) a *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return UniPoly();
  std::vector<Rat> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading_coeff());
}

std::string UniPoly::to_string(const std::string& var_name) const {
  if (is_zero()) return "0";
  std::string out;
  for (long d = degree(); d >= 0; --d) {
    Rat c = coeffs_[d];
    if (c == 0) continue;
    if (!out.empty()) {
      out += (c > 0) ? " + " : " - ";
      if (c < 0) c = -c;
    }
    bool unit_coeff = (c == 1) && d > 0;
    if (!unit_coeff) out += rat_to_string(c);
    if (d > 0) {
      if (!unit_coeff) out += " ";
      out += var_name;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

PolyDivResult poly_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  UniPoly rem = a;
  std::vector<Rat> quot;
  long db = b.degree();
  if (a.degree() >= db)
    quot.assign(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    long d = rem.degree() - db;
    Rat c = rem.leading_coeff() / b.leading_coeff();
    quot[d] = c;
    rem -= UniPoly::monomial(d, c) * b;
  }
  return {UniPoly(std::move(quot)), rem};
}

UniPoly poly_divexact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = poly_divmod(u, v).rem;
    u = v;
    v = r;
  }
  return u.monic();
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  return poly_divexact(a * b, poly_gcd(a, b)).monic();
}

namespace {

// Divisors of |n| including 1 and |n| (n != 0); sign-free.
std::vector<BigInt> positive_divisors(const BigInt& n) {
  BigInt m = n < 0 ? BigInt(-n) : n;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& p) {
  std::vector<Rat> roots;
  if (p.degree() < 1) return roots;
  // Strip the content so candidates come from integer coefficients.
  BigInt den_lcm = 1;
  for (const Rat& c : p.coeffs())
    den_lcm = den_lcm / gcd(den_lcm, rat_den(c)) * rat_den(c);
  std::vector<BigInt> ic(p.coeffs().size());
  for (size_t i = 0; i < ic.size(); ++i) {
    Rat scaled = p.coeffs()[i] * Rat(den_lcm);
    ic[i] = rat_num(scaled);
  }
  // Factor out powers of t.
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= ic.size()) return roots;
  // Candidates p/q with p | trailing coefficient, q | leading coefficient.
  const BigInt& trail = ic[low];
  const BigInt& lead = ic.back();
  for (const BigInt& pn : positive_divisors(trail)) {
    for (const BigInt& qn : positive_divisors(lead)) {
      for (int sign : {1, -1}) {
        Rat cand = Rat(pn * sign) / Rat(qn);
        if (p.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RatFun::RatFun(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = UniPoly();
    den_ = UniPoly(Rat(1));
    return;
  }
  UniPoly g = poly_gcd(num, den);
  UniPoly n = poly_divexact(num, g);
  UniPoly d = poly_divexact(den, g);
  Rat lead = d.leading_coeff();
  num_ = n * (Rat(1) / lead);
  den_ = d * (Rat(1) / lead);
}

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::inverse() const { return RatFun(Rat(1)) / *this; }

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(),
                den_ * den_);
}

UniPoly RatFun::poly_part() const { return poly_divmod(num_, den_).quot; }

RatFun RatFun::proper_part() const {
  return RatFun(poly_divmod(num_, den_).rem, den_);
}

std::string RatFun::to_string(const std::string& var_name) const {
  if (is_poly()) return num_.to_string(var_name);
  return "(" + num_.to_string(var_name) + ")/(" + den_.to_string(var_name) +
         ")";
}

}  // namespace weylcm
