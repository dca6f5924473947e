#pragma once

// The two-term homotopy module attached to a matrix quadruple: K^0 is the
// cyclic module R/J truncated at total degree D, with basis e_{k,m}
// identified with the normal monomials x^k y^m; K^1 = k^n.  The structure
// maps are m1 (e_{k,m} -> Ybar^m Xbar^k ibar), the letter actions X, Y on
// K^0 driven by the lambda invariants, m2 = monomial-wise action, and the
// homotopy correction m3 = -curvature o (preimage of m1).  A DG variant
// carries the same complex with an explicit degree -1 element w acting by
// v.w = jbar(v) i; restricting it along the monomial section reproduces
// the same m3 by an independent route (decomposing the curvature inside
// the two-sided ideal generated by w in the free algebra).

#include <string>
#include <vector>

#include "weylcm/cm.hpp"

namespace weylcm {

class Envelope {
 public:
  // Requires a valid point and D >= 2.  K^0 elements are represented as
  // WeylElement coefficient vectors on the basis e_{k,m} = [x^k y^m],
  // k + m <= D.
  Envelope(const CMPoint& p, long D);

  const CMPoint& point() const { return p_; }
  long truncation() const { return D_; }

  // Letter actions on K^0.  X raises the slice degree by one and throws
  // std::domain_error when a term would leave the truncation; Y is the
  // plain shift e_{k,m} -> e_{k,m+1} with the same guard.
  WeylElement actX(const WeylElement& u) const;
  WeylElement actY(const WeylElement& u) const;

  // The chosen section acting on K^0: for each monomial x^k y^m of a,
  // apply X k times, then Y m times.
  WeylElement rho0(const WeylElement& a, const WeylElement& u) const;

  VecQ m1(const WeylElement& u) const;
  WeylElement m2_0(const WeylElement& u, const WeylElement& a) const {
    return rho0(a, u);
  }
  // Monomial-wise matrix action Ybar^m Xbar^k on K^1.
  VecQ m2_1(const VecQ& v, const WeylElement& a) const;

  // First preimage of v under m1 supported on the slices k + m <= n, in
  // the canonical monomial order (any choice gives the same m3).
  WeylElement m1_preimage(const VecQ& v) const;

  // m3(v, a, b) = -(rho0(ab) - rho0(b) rho0(a)) applied to a preimage.
  WeylElement m3(const VecQ& v, const WeylElement& a,
                 const WeylElement& b) const;

  // The functional j = jbar o m1 on K^0.
  Rat j0(const WeylElement& u) const;

  Rat lambda(long l, long k) const { return lam_.at(l, k); }
  // Deliberately corrupts one stored invariant (mutation testing only).
  void perturb_lambda(long l, long k, const Rat& delta);

 private:
  CMPoint p_;
  long D_;
  LambdaTable lam_;
  std::vector<VecQ> m1_col_;  // m1(e_{k,m}), indexed by basis order
  std::vector<Expo> basis_;   // e-basis exponents, ascending
  long basis_index(const Expo& e) const;
};

// One verdict per axiom; `location` names the first failing arguments and
// `defect` prints the offending value (both empty on success).
struct AxiomCheck {
  std::string axiom;
  std::string location;
  bool pass = true;
  std::string defect;
};
struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

// Verifies the homotopy-module relations, unitality, the weak
// associativity axioms, preimage independence, the commutator homotopy,
// and the functional identities, on all basis vectors that leave enough
// headroom and all monomial tuples of combined degree <= budget.  Throws
// std::domain_error if the budget cannot fit inside the truncation.
AxiomReport check_ainf_axioms(const Envelope& e, long budget);

class DGEnvelope {
 public:
  DGEnvelope(const CMPoint& p, long D);

  const Envelope& complex() const { return env_; }

  // Degree-0 generator actions (right module over the free algebra).
  WeylElement act0(const WeylElement& u, char letter) const;
  VecQ act1(const VecQ& v, char letter) const;
  // The degree -1 element w: trivial on L^0, v.w = jbar(v) e_{0,0} on L^1.
  WeylElement act_w(const VecQ& v) const;
  VecQ differential(const WeylElement& u) const { return env_.m1(u); }

  // Structure maps of the restricted module.  m2 agrees with the
  // homotopy-module action letter by letter; m3 is computed by writing
  // the curvature of the monomial section as an explicit combination
  // sum c * (left w right) in the free algebra and acting with it.
  WeylElement m2_0(const WeylElement& u, const WeylElement& a) const;
  VecQ m2_1(const VecQ& v, const WeylElement& a) const;
  WeylElement m3(const VecQ& v, const WeylElement& a,
                 const WeylElement& b) const;

 private:
  Envelope env_;
};

}  // namespace weylcm
