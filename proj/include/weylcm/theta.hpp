#pragma once

// From a right ideal of the Weyl algebra back to a matrix quadruple.
//
// The staircase of a Groebner basis spans a monomial subspace M0 of the
// commutative plane; the smallest principal monomial ideal I containing it
// has finite complement, and transporting the right action of x and y
// through canonical monic lifts makes I a module over two endomorphisms X
// and Y with [X, Y] + Id vanishing on M0.  Two triangular corrections --
// first to X along a Y-stable filtration, then to Y along an X-stable one
// -- shrink the image of [X, Y] + Id to scalar multiples of the generator
// monomial, at which point the induced maps on I/M0, the class of the
// generator, and the scalar functional form a valid quadruple.

#include <stdexcept>
#include <vector>

#include "weylcm/cm.hpp"
#include "weylcm/groebner.hpp"

namespace weylcm {

// Elements of the commutative monomial plane: the container is the same
// exponent -> coefficient map as a Weyl element, but multiplication here
// is plain exponent shifting, never the normal-order product.
using MonVec = WeylElement;

// The combinatorial shadow of a nonzero right ideal.
struct ExponentData {
  std::vector<Expo> staircase;   // minimal staircase generators (leads)
  Expo principal;                // generator exponent of the ambient
                                 // principal monomial ideal I
  std::vector<Expo> complement;  // monomial basis of I modulo the
                                 // staircase span, ascending
  long n() const { return static_cast<long>(complement.size()); }
};
ExponentData exponent_data(const RightIdealGB& M);

// Raised when a filtration step needs an eigenvalue the rationals do not
// provide; carries the rational-root-free factor of the offending
// characteristic polynomial.
struct NonSplitSpectrum : std::runtime_error {
  UniPoly factor;
  explicit NonSplitSpectrum(const UniPoly& f);
};

// One extraction run.  The pipeline is: construct (transport actions
// available immediately), correct_X(), correct_Y(), extract_cm().
// `alternate_lift` flips the tie-break used for canonical lifts from
// (maximal l, then maximal k) to (minimal l, then minimal k); the
// extracted points must be equivalent either way.
class ThetaRun {
 public:
  explicit ThetaRun(const RightIdealGB& M, long guard = 1000000,
                    bool alternate_lift = false);

  const ExponentData& data() const { return data_; }

  // Canonical monic lift of a staircase monomial into the ideal: the
  // basis element whose lead divides the exponent (tie-broken as above)
  // times the complementary monomial.
  WeylElement lift(const Expo& e) const;

  // The inverse of the lift on the whole ideal: peels leading terms,
  // asserting strict descent.  Throws std::logic_error if an exponent
  // falls outside the staircase (the element was not in the ideal).
  MonVec reduce_to_m0(WeylElement m) const;

  // Current endomorphisms of I: staircase monomials travel through the
  // lift, complement monomials shift; corrections accumulated by the
  // pipeline are added on the complement part.  Inputs must be supported
  // in I (throws std::invalid_argument otherwise).
  MonVec actX(const MonVec& a) const;
  MonVec actY(const MonVec& a) const;

  // [X, Y]a + a under the current endomorphisms.
  MonVec bracket_defect(const MonVec& a) const;

  // First correction: along a Y-stable filtration of I over M0, adjust X
  // below its leading behaviour so the bracket defect lands in the span
  // of { x^k * generator }.  Throws NonSplitSpectrum if the induced map
  // has no rational eigenvalue chain, std::logic_error on reuse.
  void correct_X();
  // Second correction: along an X-stable filtration, adjust Y (with
  // values in the same span) so the defect becomes scalar * generator.
  // Requires correct_X() first.
  void correct_Y();

  // Induced maps on I/M0 in the complement basis, class of the generator
  // monomial, and the scalar functional.  Requires both corrections; the
  // result is validated (std::logic_error on failure).
  CMPoint extract_cm() const;

  // Transcript data: filtration eigenvalues and correction tables in the
  // complement basis (empty before the respective step).
  const std::vector<Rat>& y_eigenvalues() const { return alphas_; }
  const std::vector<Rat>& x_eigenvalues() const { return betas_; }
  const std::vector<MonVec>& x_correction() const { return xcorr_; }
  const std::vector<MonVec>& y_correction() const { return ycorr_; }

 private:
  RightIdealGB gb_;
  ExponentData data_;
  mutable long guard_;
  bool alt_;
  bool x_done_ = false, y_done_ = false;
  std::vector<Rat> alphas_, betas_;
  std::vector<MonVec> xcorr_, ycorr_;  // per complement index

  long complement_index(const Expo& e) const;
  MonVec base_act(const MonVec& a, bool gen_is_x) const;
  MonVec act(const MonVec& a, bool gen_is_x) const;
  MatQ induced_matrix(bool gen_is_x) const;
  void step_guard() const;
  void check_support(const MonVec& a) const;
};

// Transport of one element through the uncorrected actions (gen is 'x'
// or 'y').
MonVec transport_action(const RightIdealGB& M, const MonVec& a, char gen);

// The full pipeline: exponent data, both corrections, extraction.
CMPoint theta(const RightIdealGB& M, long guard = 1000000,
              bool alternate_lift = false);
CMPoint theta(const std::vector<WeylElement>& gens, long guard = 1000000,
              bool alternate_lift = false);

}  // namespace weylcm
