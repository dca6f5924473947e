#include "weylcm/groebner.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace weylcm {

namespace {

bool divides(const Expo& d, const Expo& e) {
  return d.k <= e.k && d.l <= e.l;
}

// Full reduction against a list of monic elements.
WeylElement reduce(WeylElement a, const std::vector<WeylElement>& basis,
                   long& guard) {
  bool changed = true;
  while (changed && !a.is_zero()) {
    changed = false;
    // Scan terms from the greatest; maps iterate ascending, so reverse.
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
      const Expo e = it->first;
      const Rat c = it->second;
      for (const auto& g : basis) {
        const Expo ge = leading_term(g).expo;
        if (!divides(ge, e)) continue;
        if (--guard < 0)
          throw std::runtime_error("groebner: reduction step guard exceeded");
        WeylElement prod =
            weyl_mul(g, WeylElement::monomial(e.k - ge.k, e.l - ge.l));
        a -= prod * (c / leading_term(prod).coeff);
        changed = true;
        break;
      }
      if (changed) break;  // term map mutated; restart the scan
    }
  }
  return a;
}

}  // namespace

bool in_staircase(const std::vector<Expo>& staircase_gens, const Expo& e) {
  for (const auto& g : staircase_gens)
    if (divides(g, e)) return true;
  return false;
}

RightIdealGB groebner(const std::vector<WeylElement>& gens, long guard) {
  RightIdealGB I;
  I.generators = gens;
  std::vector<WeylElement> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g * (Rat(1) / leading_term(g).coeff));
  }
  if (basis.empty())
    throw std::invalid_argument("groebner: all generators are zero");

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) pairs.push_back({a, b});

  while (!pairs.empty()) {
    auto [a, b] = pairs.front();
    pairs.pop_front();
    const Expo ea = leading_term(basis[a]).expo;
    const Expo eb = leading_term(basis[b]).expo;
    const Expo lcm{std::max(ea.k, eb.k), std::max(ea.l, eb.l)};
    WeylElement sa =
        weyl_mul(basis[a], WeylElement::monomial(lcm.k - ea.k, lcm.l - ea.l));
    WeylElement sb =
        weyl_mul(basis[b], WeylElement::monomial(lcm.k - eb.k, lcm.l - eb.l));
    WeylElement s = sa * (Rat(1) / leading_term(sa).coeff) -
                    sb * (Rat(1) / leading_term(sb).coeff);
    s = reduce(std::move(s), basis, guard);
    if (s.is_zero()) continue;
    s = s * (Rat(1) / leading_term(s).coeff);
    for (size_t c = 0; c < basis.size(); ++c) pairs.push_back({c, basis.size()});
    basis.push_back(std::move(s));
    if (--guard < 0)
      throw std::runtime_error("groebner: completion step guard exceeded");
  }

  // Minimalize: drop elements whose lead another lead divides.
  std::vector<WeylElement> minimal;
  for (size_t a = 0; a < basis.size(); ++a) {
    const Expo ea = leading_term(basis[a]).expo;
    bool redundant = false;
    for (size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Expo eb = leading_term(basis[b]).expo;
      if (eb == ea ? b < a : divides(eb, ea)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  // Tail-reduce each element against the others.
  for (size_t a = 0; a < minimal.size(); ++a) {
    std::vector<WeylElement> others;
    for (size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    const LeadingTerm lt = leading_term(minimal[a]);
    WeylElement tail = minimal[a] - WeylElement::monomial(lt.expo.k, lt.expo.l,
                                                          lt.coeff);
    minimal[a] = WeylElement::monomial(lt.expo.k, lt.expo.l, lt.coeff) +
                 reduce(std::move(tail), others, guard);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const WeylElement& a, const WeylElement& b) {
              return leading_term(a).expo < leading_term(b).expo;
            });
  I.basis = std::move(minimal);
  for (const auto& g : I.basis) I.staircase_gens.push_back(leading_term(g).expo);
  return I;
}

WeylElement normal_form(const WeylElement& a, const RightIdealGB& I,
                        long guard) {
  WeylElement v = a;
  return reduce(std::move(v), I.basis, guard);
}

StaircaseData staircase_complement_in(
    const std::vector<Expo>& staircase_gens) {
  if (staircase_gens.empty())
    throw std::invalid_argument(
        "staircase complement: zero ideal has no finite complement");
  long a = staircase_gens.front().k, b = staircase_gens.front().l;
  for (const auto& g : staircase_gens) {
    a = std::min(a, g.k);
    b = std::min(b, g.l);
  }
  // Bounds: a generator (a, L) makes every (k >= a, l >= L) a staircase
  // point, and a generator (K, b) every (k >= K, l >= b); both exist since
  // the minima are attained, so the complement sits in [a,K) x [b,L).
  long L = -1, K = -1;
  for (const auto& g : staircase_gens) {
    if (g.k == a) L = (L < 0) ? g.l : std::min(L, g.l);
    if (g.l == b) K = (K < 0) ? g.k : std::min(K, g.k);
  }
  StaircaseData d;
  d.principal = {a, b};
  for (long l = b; l < L; ++l)
    for (long k = a; k < K; ++k)
      if (!in_staircase(staircase_gens, {k, l})) d.complement.push_back({k, l});
  std::sort(d.complement.begin(), d.complement.end());
  return d;
}

}  // namespace weylcm
