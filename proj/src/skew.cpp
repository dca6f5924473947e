#include "weylcm/skew.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace weylcm {

namespace {

// g(y) x^t = sum_j (-1)^j C(t,j) x^{t-j} g^(j)(y): iterated g x = x g - g'.
// f(x) y^t = sum_j C(t,j) y^{t-j} f^(j)(x):        iterated f y = y f + f'.
// Both expansions are driven by the same loop; `sign` selects the rule.
void cross_powers(const RatFun& fun, long t, int sign,
                  const std::function<void(long j, const RatFun&)>& emit) {
  RatFun deriv = fun;
  for (long j = 0; j <= t; ++j) {
    Rat c = binomial(t, j);
    if (sign < 0 && j % 2 == 1) c = -c;
    emit(j, deriv * c);
    if (j < t) deriv = deriv.derivative();
  }
}

UniPoly poly_x_power(long d) { return UniPoly::monomial(d, Rat(1)); }

}  // namespace

SkewSum SkewSum::from_weyl(const WeylElement& a, Chirality chi) {
  SkewSum s(chi);
  for (const auto& [e, c] : a.terms()) {
    if (chi == Chirality::XY) {
      s.add_term(RatFun(UniPoly::monomial(e.k, c)),
                 RatFun(poly_x_power(e.l)));
    } else {
      // x^k y^m = sum_j C(m,j) C(k,j) j! y^{m-j} x^{k-j}.
      long top = std::min(e.k, e.l);
      for (long j = 0; j <= top; ++j) {
        Rat coef = c * binomial(e.l, j) * binomial(e.k, j) * factorial(j);
        s.add_term(RatFun(UniPoly::monomial(e.l - j, coef)),
                   RatFun(poly_x_power(e.k - j)));
      }
    }
  }
  return s.normalized();
}

void SkewSum::add_term(const RatFun& left, const RatFun& right) {
  if (left.is_zero() || right.is_zero()) return;
  terms_.push_back({left, right});
}

SkewSum SkewSum::operator-() const {
  SkewSum r(chi_);
  for (const auto& t : terms_) r.terms_.push_back({-t.left, t.right});
  return r;
}

SkewSum SkewSum::operator+(const SkewSum& o) const {
  if (chi_ != o.chi_)
    throw std::domain_error("skew sum addition across chiralities");
  SkewSum r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  return r.normalized();
}

SkewSum SkewSum::operator-(const SkewSum& o) const { return *this + (-o); }

SkewSum SkewSum::operator*(const Rat& c) const {
  SkewSum r(chi_);
  if (c == 0) return r;
  for (const auto& t : terms_) r.terms_.push_back({t.left * c, t.right});
  return r;
}

SkewSum SkewSum::normalized() const {
  // Group by the right factor (string form is canonical since RatFun is
  // reduced with a monic denominator).
  std::map<std::string, std::pair<RatFun, RatFun>> groups;
  for (const auto& t : terms_) {
    auto key = t.right.to_string();
    auto it = groups.find(key);
    if (it == groups.end())
      groups.emplace(key, std::make_pair(t.left, t.right));
    else
      it->second.first += t.left;
  }
  SkewSum r(chi_);
  for (auto& [key, lr] : groups) r.add_term(lr.first, lr.second);
  return r;
}

SkewSum skew_rmul(const SkewSum& s, const WeylElement& a) {
  SkewSum acc(s.chirality());
  for (const auto& [e, c] : a.terms()) {
    std::vector<SkewSum::Term> cur(s.terms().begin(), s.terms().end());
    if (s.chirality() == Chirality::YX) {
      // multiply by x^k into the right factor, then push y through l times
      for (auto& t : cur) t.right *= RatFun(poly_x_power(e.k));
      for (long step = 0; step < e.l; ++step) {
        std::vector<SkewSum::Term> next;
        for (const auto& t : cur) {
          // g(y) f(x) y = g(y) y f(x) + g(y) f'(x)
          next.push_back({t.left * RatFun::var(), t.right});
          next.push_back({t.left, t.right.derivative()});
        }
        cur = std::move(next);
      }
    } else {
      // push x through k times, then multiply y^l into the right factor
      for (long step = 0; step < e.k; ++step) {
        std::vector<SkewSum::Term> next;
        for (const auto& t : cur) {
          // f(x) g(y) x = f(x) x g(y) - f(x) g'(y)
          next.push_back({t.left * RatFun::var(), t.right});
          next.push_back({t.left, -t.right.derivative()});
        }
        cur = std::move(next);
      }
      for (auto& t : cur) t.right *= RatFun(poly_x_power(e.l));
    }
    for (const auto& t : cur) acc.add_term(t.left * c, t.right);
  }
  return acc.normalized();
}

SkewSum skew_lmul_poly(const UniPoly& p, bool var_is_x, const SkewSum& s) {
  const bool left_is_x = (s.chirality() == Chirality::XY);
  SkewSum acc(s.chirality());
  if (var_is_x == left_is_x) {
    // Same variable as the left factor: plain multiplication.
    for (const auto& t : s.terms()) acc.add_term(RatFun(p) * t.left, t.right);
    return acc.normalized();
  }
  // The polynomial must cross the left factor; moving x left-to-right
  // picks +derivatives, moving y picks -derivatives.
  const int sign = var_is_x ? +1 : -1;
  for (long d = 0; d <= p.degree(); ++d) {
    Rat c = p.coeff(d);
    if (c == 0) continue;
    for (const auto& t : s.terms()) {
      cross_powers(t.left, d, sign, [&](long j, const RatFun& lf) {
        acc.add_term(lf * c, RatFun(poly_x_power(d - j)) * t.right);
      });
    }
  }
  return acc.normalized();
}

bool skew_is_zero(const SkewSum& s) {
  if (s.terms().empty()) return true;
  // Common monic denominator of the right factors; right multiplication by
  // it is injective and needs no commutation.
  UniPoly q(Rat(1));
  for (const auto& t : s.terms()) q = poly_lcm(q, t.right.den());
  std::map<long, RatFun> per_power;  // right exponent -> left coefficient
  for (const auto& t : s.terms()) {
    UniPoly cleared = t.right.num() * poly_divexact(q, t.right.den());
    for (long d = 0; d <= cleared.degree(); ++d) {
      Rat c = cleared.coeff(d);
      if (c == 0) continue;
      auto [it, fresh] = per_power.emplace(d, t.left * c);
      if (!fresh) it->second += t.left * c;
    }
  }
  for (const auto& [d, coeff] : per_power)
    if (!coeff.is_zero()) return false;
  return true;
}

SkewSum skew_convert(const SkewSum& s, Chirality target) {
  if (s.chirality() == target) return s;
  SkewSum acc(target);
  const int to_xy = (target == Chirality::XY);
  for (const auto& t : s.terms()) {
    // Split the right factor; its polynomial part crosses the left factor.
    UniPoly rp = t.right.poly_part();
    RatFun rproper = t.right.proper_part();
    for (long d = 0; d <= rp.degree(); ++d) {
      Rat c = rp.coeff(d);
      if (c == 0) continue;
      // YX->XY moves g(y) right across x^d (sign -1); XY->YX moves f(x)
      // right across y^d (sign +1).
      cross_powers(t.left, d, to_xy ? -1 : +1, [&](long j, const RatFun& lf) {
        acc.add_term(RatFun(poly_x_power(d - j)), lf * c);
      });
    }
    if (!rproper.is_zero()) {
      // The proper part cannot cross; the left factor must instead, so it
      // has to be polynomial.
      if (!t.left.is_poly())
        throw std::domain_error(
            "chirality conversion of a proper*proper term has no finite form");
      UniPoly lp = t.left.num() * (Rat(1) / t.left.den().leading_coeff());
      for (long d = 0; d <= lp.degree(); ++d) {
        Rat c = lp.coeff(d);
        if (c == 0) continue;
        // The polynomial old-left factor crosses the proper one; the sign
        // rule is the same as above (it depends only on which variable
        // moves right).
        cross_powers(rproper, d, to_xy ? -1 : +1,
                     [&](long j, const RatFun& rf) {
                       acc.add_term(rf * c, RatFun(poly_x_power(d - j)));
                     });
      }
    }
  }
  return acc.normalized();
}

bool skew_equal(const SkewSum& a, const SkewSum& b) {
  if (a.chirality() == b.chirality()) return skew_is_zero(a - b);
  return skew_is_zero(a - skew_convert(b, a.chirality()));
}

namespace {

// Which side of the sum the projection addresses, or throws.
bool projection_on_left(Chirality chi, Projection which) {
  switch (which) {
    case Projection::acute_x:
      if (chi == Chirality::YX) return false;
      break;
    case Projection::grave_y:
      if (chi == Chirality::YX) return true;
      break;
    case Projection::acute_y:
      if (chi == Chirality::XY) return false;
      break;
    case Projection::grave_x:
      if (chi == Chirality::XY) return true;
      break;
  }
  throw std::domain_error("projection incompatible with chirality");
}

}  // namespace

SkewSum project(const SkewSum& s, Projection which) {
  const bool left = projection_on_left(s.chirality(), which);
  SkewSum r(s.chirality());
  for (const auto& t : s.terms()) {
    if (left)
      r.add_term(RatFun(t.left.poly_part()), t.right);
    else
      r.add_term(t.left, RatFun(t.right.poly_part()));
  }
  return r.normalized();
}

SkewDecomp skew_split(const SkewSum& s, Projection which) {
  const bool left = projection_on_left(s.chirality(), which);
  SkewDecomp d{SkewSum(s.chirality()), SkewSum(s.chirality())};
  for (const auto& t : s.terms()) {
    if (left) {
      d.polynomial_part.add_term(RatFun(t.left.poly_part()), t.right);
      d.vanishing_part.add_term(t.left.proper_part(), t.right);
    } else {
      d.polynomial_part.add_term(t.left, RatFun(t.right.poly_part()));
      d.vanishing_part.add_term(t.left, t.right.proper_part());
    }
  }
  d.polynomial_part = d.polynomial_part.normalized();
  d.vanishing_part = d.vanishing_part.normalized();
  return d;
}

WeylElement skew_to_weyl(const SkewSum& s) {
  WeylElement acc;
  for (const auto& t : s.terms()) {
    if (!t.left.is_poly() || !t.right.is_poly())
      throw std::domain_error("skew_to_weyl: non-polynomial factor");
    UniPoly lp = t.left.num() * (Rat(1) / t.left.den().leading_coeff());
    UniPoly rp = t.right.num() * (Rat(1) / t.right.den().leading_coeff());
    for (long a = 0; a <= lp.degree(); ++a) {
      for (long b = 0; b <= rp.degree(); ++b) {
        Rat c = lp.coeff(a) * rp.coeff(b);
        if (c == 0) continue;
        if (s.chirality() == Chirality::XY) {
          acc.add_term({a, b}, c);
        } else {
          // y^a x^b renormalized
          acc += weyl_mul(WeylElement::monomial(0, a),
                          WeylElement::monomial(b, 0)) *
                 c;
        }
      }
    }
  }
  return acc;
}

SandwichSum skew_mul_cross(const SkewSum& a, const SkewSum& b) {
  if (a.chirality() == b.chirality())
    throw std::domain_error("skew_mul_cross expects opposite chiralities");
  const auto kind = (a.chirality() == Chirality::XY) ? SandwichSum::Kind::XYX
                                                     : SandwichSum::Kind::YXY;
  SandwichSum r(kind);
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      r.add_term(ta.left, ta.right * tb.left, tb.right);
  return r;
}

bool sandwich_is_zero(const SandwichSum& s) {
  if (s.terms().empty()) return true;
  // Clear outer denominators: multiply by L on the left and R on the right
  // (both nonzero polynomials in the outer variable), then commute the
  // polynomial outer factors through the middle, producing a YX sum.
  UniPoly L(Rat(1)), R(Rat(1));
  for (const auto& t : s.terms()) {
    L = poly_lcm(L, t.left.den());
    R = poly_lcm(R, t.right.den());
  }
  // Moving powers of x rightwards across the middle picks +derivatives;
  // moving the middle across powers of y (YXY case) likewise; both cases
  // reduce to sign +1 expansions but assemble differently.
  SkewSum acc(Chirality::YX);
  const bool xyx = (s.kind() == SandwichSum::Kind::XYX);
  for (const auto& t : s.terms()) {
    UniPoly lcl = t.left.num() * poly_divexact(L, t.left.den());
    UniPoly rcl = t.right.num() * poly_divexact(R, t.right.den());
    if (xyx) {
      // lcl(x) * mid(y) * rcl(x):  x^d mid(y) = sum C(d,j) mid^(j) x^{d-j}
      for (long d = 0; d <= lcl.degree(); ++d) {
        Rat c = lcl.coeff(d);
        if (c == 0) continue;
        cross_powers(t.mid, d, +1, [&](long j, const RatFun& mf) {
          acc.add_term(mf * c, RatFun(poly_x_power(d - j)) * RatFun(rcl));
        });
      }
    } else {
      // lcl(y) * mid(x) * rcl(y):  mid(x) y^d = sum C(d,j) y^{d-j} mid^(j)
      for (long d = 0; d <= rcl.degree(); ++d) {
        Rat c = rcl.coeff(d);
        if (c == 0) continue;
        cross_powers(t.mid, d, +1, [&](long j, const RatFun& mf) {
          acc.add_term(RatFun(lcl) * RatFun(poly_x_power(d - j)) * c, mf);
        });
      }
    }
  }
  return skew_is_zero(acc);
}

WeylElement phi(const WeylElement& a, const SkewSum& kappa) {
  if (kappa.chirality() != Chirality::YX)
    throw std::domain_error("phi expects kappa in YX form");
  SkewSum t = skew_rmul(kappa, a);
  return skew_to_weyl(project(project(t, Projection::acute_x),
                              Projection::grave_y));
}

WeylElement psi(const WeylElement& a, const SkewSum& chi) {
  if (chi.chirality() != Chirality::XY)
    throw std::domain_error("psi expects kappa^{-1} in XY form");
  SkewSum t = skew_rmul(chi, a);
  return skew_to_weyl(project(project(t, Projection::acute_y),
                              Projection::grave_x));
}

Rat commutator_defect(const WeylElement& a, const SkewSum& kappa,
                      const SkewSum& chi) {
  const WeylElement x = WeylElement::gen_x(), y = WeylElement::gen_y();
  auto X = [&](const WeylElement& u) {
    return psi(weyl_mul(phi(u, kappa), x), chi);
  };
  WeylElement xy = X(weyl_mul(a, y));
  WeylElement yx = weyl_mul(X(a), y);
  WeylElement defect = xy - yx + a;
  if (!defect.is_constant())
    throw std::logic_error("commutator defect is not scalar: invalid kappa");
  return defect.constant_term();
}

}  // namespace weylcm
