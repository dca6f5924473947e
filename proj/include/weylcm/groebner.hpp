#pragma once

// Right-ideal Groebner bases in the Weyl algebra under the hardwired
// y-dominant lexicographic order, normal forms, and the staircase of
// leading exponents together with its complement inside the minimal
// principal monomial ideal.

#include <vector>

#include "weylcm/weyl.hpp"

namespace weylcm {

struct RightIdealGB {
  std::vector<WeylElement> generators;  // the input
  std::vector<WeylElement> basis;       // reduced, monic
  std::vector<Expo> staircase_gens;     // minimal generators of Sigma
};

// Buchberger completion for the right ideal generated by `gens`; S-pairs
// right-multiply by monomials up to the exponent lcm.  The step guard
// throws std::runtime_error as a defense against nontermination bugs.
RightIdealGB groebner(const std::vector<WeylElement>& gens,
                      long guard = 1000000);

// Fully reduced remainder: no term has its exponent in the staircase;
// a - normal_form(a) lies in the ideal.
WeylElement normal_form(const WeylElement& a, const RightIdealGB& I,
                        long guard = 1000000);

// Componentwise divisibility test against the staircase generators.
bool in_staircase(const std::vector<Expo>& staircase_gens, const Expo& e);

// The principal monomial ideal generated by x^a y^b with a = min k and
// b = min l over the staircase, and the (always finite) list of its
// exponents outside the staircase, sorted ascending.  Throws
// std::invalid_argument for the zero ideal (empty staircase).
struct StaircaseData {
  Expo principal;
  std::vector<Expo> complement;
};
StaircaseData staircase_complement_in(const std::vector<Expo>& staircase_gens);

}  // namespace weylcm
