#include "weylcm/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcm {

WeylElement WeylElement::from_poly_x(const UniPoly& p) {
  WeylElement e;
  for (long d = 0; d <= p.degree(); ++d) e.add_term({d, 0}, p.coeff(d));
  return e;
}

WeylElement WeylElement::from_poly_y(const UniPoly& p) {
  WeylElement e;
  for (long d = 0; d <= p.degree(); ++d) e.add_term({0, d}, p.coeff(d));
  return e;
}

bool WeylElement::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0});
}

long WeylElement::total_degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

WeylElement WeylElement::operator-() const {
  WeylElement r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  WeylElement r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const {
  return *this + (-o);
}

WeylElement WeylElement::operator*(const Rat& c) const {
  WeylElement r;
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Print leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    if (!out.empty()) {
      out += (c > 0) ? " + " : " - ";
      if (c < 0) c = -c;
    }
    const Expo& e = it->first;
    bool unit = (c == 1) && (e.k > 0 || e.l > 0);
    if (!unit) out += rat_to_string(c);
    auto power = [&out](const char* v, long p) {
      if (p == 0) return;
      out += v;
      if (p > 1) out += "^" + std::to_string(p);
    };
    power("x", e.k);
    power("y", e.l);
  }
  return out;
}

// Product of normal monomials:
//   (x^a y^b)(x^c y^d) = sum_j (-1)^j C(b,j) C(c,j) j! x^{a+c-j} y^{b+d-j}.
static void mul_monomials(const Expo& u, const Expo& v, const Rat& coeff,
                          WeylElement& acc) {
  long top = std::min(u.l, v.k);
  for (long j = 0; j <= top; ++j) {
    Rat c = coeff * binomial(u.l, j) * binomial(v.k, j) * factorial(j);
    if (j % 2 == 1) c = -c;
    acc.add_term({u.k + v.k - j, u.l + v.l - j}, c);
  }
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  WeylElement r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms())
      mul_monomials(ea, eb, ca * cb, r);
  return r;
}

WeylElement weyl_tau(const WeylElement& a) {
  // tau(x^k y^l) = y^l x^k in normal form = (x^0 y^l)(x^k y^0).
  WeylElement r;
  for (const auto& [e, c] : a.terms())
    mul_monomials({0, e.l}, {e.k, 0}, c, r);
  return r;
}

MatQ eval_tau(const WeylElement& a, const MatQ& X, const MatQ& Y) {
  if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
    throw std::invalid_argument("eval_tau: matrices must be square, same size");
  const Eigen::Index n = X.rows();
  long max_k = 0, max_l = 0;
  for (const auto& [e, c] : a.terms()) {
    max_k = std::max(max_k, e.k);
    max_l = std::max(max_l, e.l);
  }
  std::vector<MatQ> xp{MatQ::Identity(n, n)}, yp{MatQ::Identity(n, n)};
  for (long d = 1; d <= max_k; ++d) xp.push_back(xp.back() * X);
  for (long d = 1; d <= max_l; ++d) yp.push_back(yp.back() * Y);
  MatQ acc = MatQ::Zero(n, n);
  for (const auto& [e, c] : a.terms()) acc += c * (yp[e.l] * xp[e.k]);
  return acc;
}

LeadingTerm leading_term(const WeylElement& a) {
  if (a.is_zero()) throw std::invalid_argument("leading_term of zero");
  auto it = a.terms().rbegin();
  return {it->first, it->second};
}

}  // namespace weylcm
