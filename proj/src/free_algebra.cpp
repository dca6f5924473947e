#include "weylcm/free_algebra.hpp"

#include <stdexcept>

namespace weylcm {

void FreeElement::add_term(const std::string& w, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeElement FreeElement::operator-() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
  return *this + (-o);
}

FreeElement FreeElement::operator*(const FreeElement& o) const {
  FreeElement r;
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

FreeElement FreeElement::operator*(const Rat& c) const {
  FreeElement r;
  if (c == 0) return r;
  for (const auto& [w, coef] : terms_) r.terms_.emplace(w, coef * c);
  return r;
}

WeylElement FreeElement::to_weyl() const {
  WeylElement acc;
  for (const auto& [w, c] : terms_) {
    WeylElement m(Rat(1));
    for (char ch : w)
      m = weyl_mul(m, ch == 'x' ? WeylElement::gen_x() : WeylElement::gen_y());
    acc += m * c;
  }
  return acc;
}

FreeElement FreeElement::substitute(const FreeElement& for_x,
                                    const FreeElement& for_y) const {
  FreeElement acc;
  for (const auto& [w, c] : terms_) {
    FreeElement m(Rat(1));
    for (char ch : w) m = m * (ch == 'x' ? for_x : for_y);
    acc = acc + m * c;
  }
  return acc;
}

MatQ FreeElement::eval(const MatQ& X, const MatQ& Y) const {
  if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
    throw std::invalid_argument("eval: matrices must be square, same size");
  const Eigen::Index n = X.rows();
  MatQ acc = MatQ::Zero(n, n);
  for (const auto& [w, c] : terms_) {
    MatQ m = MatQ::Identity(n, n);
    for (char ch : w) m = m * (ch == 'x' ? X : Y);
    acc += c * m;
  }
  return acc;
}

FreeElement FreeElement::tau() const {
  FreeElement r;
  for (const auto& [w, c] : terms_)
    r.add_term(std::string(w.rbegin(), w.rend()), c);
  return r;
}

std::string FreeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, coef] : terms_) {
    Rat c = coef;
    if (!out.empty()) {
      out += (c > 0) ? " + " : " - ";
      if (c < 0) c = -c;
    }
    if (c != 1 || w.empty()) out += rat_to_string(c);
    out += w;
  }
  return out;
}

FreeElement free_lift(const WeylElement& a) {
  FreeElement r;
  for (const auto& [e, c] : a.terms()) {
    std::string w(static_cast<size_t>(e.k), 'x');
    w.append(static_cast<size_t>(e.l), 'y');
    r.add_term(w, c);
  }
  return r;
}

Automorphism::Automorphism(FreeElement fx, FreeElement fy, FreeElement gx,
                           FreeElement gy)
    : fx_(std::move(fx)), fy_(std::move(fy)), gx_(std::move(gx)),
      gy_(std::move(gy)) {
  const FreeElement x = FreeElement::gen_x(), y = FreeElement::gen_y();
  const FreeElement comm = x * y - y * x;
  if (fx_ * fy_ - fy_ * fx_ != comm || gx_ * gy_ - gy_ * gx_ != comm)
    throw std::invalid_argument("automorphism does not preserve the commutator");
  if (gx_.substitute(fx_, fy_) != x || gy_.substitute(fx_, fy_) != y ||
      fx_.substitute(gx_, gy_) != x || fy_.substitute(gx_, gy_) != y)
    throw std::invalid_argument("automorphism inverse data is not an inverse");
}

Automorphism Automorphism::identity() {
  const FreeElement x = FreeElement::gen_x(), y = FreeElement::gen_y();
  return Automorphism(x, y, x, y);
}

// Embeds p(t) as a free-algebra polynomial in the given generator word.
static FreeElement poly_in(const UniPoly& p, char gen) {
  FreeElement r;
  for (long d = 0; d <= p.degree(); ++d)
    r.add_term(std::string(static_cast<size_t>(d), gen), p.coeff(d));
  return r;
}

Automorphism Automorphism::transvection_x(const UniPoly& p) {
  const FreeElement x = FreeElement::gen_x(), y = FreeElement::gen_y();
  return Automorphism(x, y + poly_in(p, 'x'), x, y - poly_in(p, 'x'));
}

Automorphism Automorphism::transvection_y(const UniPoly& q) {
  const FreeElement x = FreeElement::gen_x(), y = FreeElement::gen_y();
  return Automorphism(x + poly_in(q, 'y'), y, x - poly_in(q, 'y'), y);
}

Automorphism Automorphism::compose(const Automorphism& b,
                                   const Automorphism& a) {
  // (b after a)(x) substitutes b's images into a's image of x; the inverse
  // composes the other way round.
  return Automorphism(a.fx_.substitute(b.fx_, b.fy_),
                      a.fy_.substitute(b.fx_, b.fy_),
                      b.gx_.substitute(a.gx_, a.gy_),
                      b.gy_.substitute(a.gx_, a.gy_));
}

WeylElement apply_automorphism(const Automorphism& s, const WeylElement& a) {
  return free_lift(a).substitute(s.image_x(), s.image_y()).to_weyl();
}

}  // namespace weylcm
