#include "weylcm/theta.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcm {

namespace {

MatQ rat_inverse(const MatQ& m) {
  Rat d = det<Rat>(m);
  if (d == 0) throw std::logic_error("theta: singular basis change");
  MatQ inv = adjugate<Rat>(m);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) inv(r, c) = inv(r, c) / d;
  return inv;
}

struct Flag {
  MatQ P;                   // columns: filtration vectors, coordinates in
                            // the complement basis
  std::vector<Rat> evals;   // induced eigenvalues, in column order
};

// Successive rational eigenvectors: A P = P T with T upper triangular.
Flag triangularize(const MatQ& A) {
  const Eigen::Index n = A.rows();
  Flag f;
  f.P = MatQ::Identity(n, n);
  if (n == 0) return f;
  UniPoly cp = charpoly(A);
  std::vector<Rat> roots = rational_roots(cp);
  if (roots.empty()) throw NonSplitSpectrum(cp);
  std::sort(roots.begin(), roots.end());
  const Rat alpha = roots.front();
  MatQ shifted = A;
  for (Eigen::Index d = 0; d < n; ++d) shifted(d, d) -= alpha;
  VecQ v = kernel_basis(shifted).col(0);
  // Complete v to a basis with standard vectors, greedily by rank.
  MatQ S = MatQ::Zero(n, n);
  S.col(0) = v;
  Eigen::Index filled = 1;
  for (Eigen::Index s = 0; s < n && filled < n; ++s) {
    S.col(filled) = VecQ::Zero(n, 1);
    S(s, filled) = Rat(1);
    MatQ probe = S.leftCols(filled + 1);
    if (rref(probe).rank == filled + 1) ++filled;
  }
  MatQ M = rat_inverse(S) * A * S;
  Flag sub = triangularize(MatQ(M.block(1, 1, n - 1, n - 1)));
  MatQ E = MatQ::Identity(n, n);
  E.block(1, 1, n - 1, n - 1) = sub.P;
  f.P = S * E;
  f.evals.push_back(alpha);
  f.evals.insert(f.evals.end(), sub.evals.begin(), sub.evals.end());
  // Echelon pass: make each column's greatest nonzero coordinate unique
  // and monic.  Only earlier columns are mixed in, so the filtration and
  // the induced eigenvalues are untouched; distinct leads keep the
  // corrections triangular with respect to the monomial order.
  auto lead_row = [&](Eigen::Index c) {
    for (Eigen::Index r = n - 1; r >= 0; --r)
      if (f.P(r, c) != 0) return r;
    throw std::logic_error("theta: zero filtration vector");
  };
  std::vector<Eigen::Index> leads;
  for (Eigen::Index c = 0; c < n; ++c) {
    for (;;) {
      Eigen::Index L = lead_row(c);
      auto hit = std::find(leads.begin(), leads.end(), L);
      if (hit == leads.end()) {
        leads.push_back(L);
        break;
      }
      Eigen::Index i = static_cast<Eigen::Index>(hit - leads.begin());
      f.P.col(c) -= f.P.col(i) * (f.P(L, c) / f.P(L, i));
    }
    f.P.col(c) *= Rat(1) / f.P(lead_row(c), c);
  }
  return f;
}

}  // namespace

NonSplitSpectrum::NonSplitSpectrum(const UniPoly& f)
    : std::runtime_error("filtration spectrum not rational: no rational root of " +
                         f.to_string()),
      factor(f) {}

ExponentData exponent_data(const RightIdealGB& M) {
  ExponentData d;
  d.staircase = M.staircase_gens;
  StaircaseData s = staircase_complement_in(M.staircase_gens);
  d.principal = s.principal;
  d.complement = s.complement;
  return d;
}

ThetaRun::ThetaRun(const RightIdealGB& M, long guard, bool alternate_lift)
    : gb_(M), data_(exponent_data(M)), guard_(guard), alt_(alternate_lift) {}

void ThetaRun::step_guard() const {
  if (--guard_ < 0) throw std::runtime_error("theta: step guard exceeded");
}

long ThetaRun::complement_index(const Expo& e) const {
  auto it = std::lower_bound(data_.complement.begin(), data_.complement.end(), e);
  if (it == data_.complement.end() || *it != e) return -1;
  return static_cast<long>(it - data_.complement.begin());
}

void ThetaRun::check_support(const MonVec& a) const {
  for (const auto& [e, c] : a.terms())
    if (e.k < data_.principal.k || e.l < data_.principal.l)
      throw std::invalid_argument(
          "theta: element not supported in the principal monomial ideal");
}

WeylElement ThetaRun::lift(const Expo& e) const {
  const WeylElement* best = nullptr;
  Expo bl{0, 0};
  for (const auto& g : gb_.basis) {
    const Expo ge = leading_term(g).expo;
    if (ge.k > e.k || ge.l > e.l) continue;
    bool better;
    if (!best)
      better = true;
    else if (alt_)
      better = ge.l < bl.l || (ge.l == bl.l && ge.k < bl.k);
    else
      better = ge.l > bl.l || (ge.l == bl.l && ge.k > bl.k);
    if (better) {
      best = &g;
      bl = ge;
    }
  }
  if (!best)
    throw std::logic_error("theta: exponent outside the staircase has no lift");
  return weyl_mul(*best, WeylElement::monomial(e.k - bl.k, e.l - bl.l));
}

MonVec ThetaRun::reduce_to_m0(WeylElement m) const {
  MonVec r;
  bool first = true;
  Expo prev{0, 0};
  while (!m.is_zero()) {
    const LeadingTerm lt = leading_term(m);
    if (!first && !(lt.expo < prev))
      throw std::logic_error("theta: leading exponent failed to descend");
    first = false;
    prev = lt.expo;
    if (!in_staircase(data_.staircase, lt.expo))
      throw std::logic_error("theta: element is not in the ideal");
    step_guard();
    r.add_term(lt.expo, lt.coeff);
    m -= lift(lt.expo) * lt.coeff;
  }
  return r;
}

MonVec ThetaRun::base_act(const MonVec& a, bool gen_is_x) const {
  const WeylElement gen =
      gen_is_x ? WeylElement::gen_x() : WeylElement::gen_y();
  MonVec out;
  for (const auto& [e, c] : a.terms()) {
    if (in_staircase(data_.staircase, e)) {
      out += reduce_to_m0(weyl_mul(lift(e), gen)) * c;
    } else {
      out.add_term({e.k + (gen_is_x ? 1 : 0), e.l + (gen_is_x ? 0 : 1)}, c);
    }
  }
  return out;
}

MonVec ThetaRun::act(const MonVec& a, bool gen_is_x) const {
  check_support(a);
  MonVec out = base_act(a, gen_is_x);
  const std::vector<MonVec>& corr = gen_is_x ? xcorr_ : ycorr_;
  if (!corr.empty())
    for (const auto& [e, c] : a.terms()) {
      long s = complement_index(e);
      if (s >= 0) out += corr[static_cast<size_t>(s)] * c;
    }
  return out;
}

MonVec ThetaRun::actX(const MonVec& a) const { return act(a, true); }
MonVec ThetaRun::actY(const MonVec& a) const { return act(a, false); }

MonVec ThetaRun::bracket_defect(const MonVec& a) const {
  return act(act(a, false), true) - act(act(a, true), false) + a;
}

MatQ ThetaRun::induced_matrix(bool gen_is_x) const {
  const long n = data_.n();
  MatQ m = MatQ::Zero(n, n);
  for (long s = 0; s < n; ++s) {
    MonVec img = act(MonVec::monomial(data_.complement[s].k,
                                      data_.complement[s].l),
                     gen_is_x);
    for (const auto& [e, c] : img.terms()) {
      long r = complement_index(e);
      if (r >= 0) m(r, s) = c;
    }
  }
  return m;
}

void ThetaRun::correct_X() {
  if (x_done_) throw std::logic_error("theta: X already corrected");
  const long n = data_.n();
  Flag f = triangularize(induced_matrix(false));
  alphas_ = f.evals;
  MatQ Pinv = rat_inverse(f.P);
  MatQ T = Pinv * induced_matrix(false) * f.P;
  std::vector<MonVec> v(n), val(n);
  for (long j = 0; j < n; ++j)
    for (long s = 0; s < n; ++s)
      v[j].add_term(data_.complement[s], f.P(s, j));
  for (long j = 0; j < n; ++j) {
    MonVec u = bracket_defect(v[j]);
    for (long i = 0; i < j; ++i) u += val[i] * T(i, j);
    // Split off a pre-image along Y - alpha, leaving only terms in the
    // x-power span of the generator; the working lead strictly descends.
    MonVec a;
    bool first = true;
    Expo prev{0, 0};
    for (;;) {
      const Expo* pick = nullptr;
      Rat c;
      for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it)
        if (it->first.l > data_.principal.l) {
          pick = &it->first;
          c = it->second;
          break;
        }
      if (!pick) break;
      step_guard();
      if (!first && !(*pick < prev))
        throw std::logic_error("theta: leading exponent failed to descend");
      first = false;
      prev = *pick;
      MonVec t = MonVec::monomial(pick->k, pick->l - 1, c);
      a += t;
      u -= act(t, false) - t * alphas_[j];
    }
    val[j] = a;
  }
  xcorr_.assign(n, MonVec());
  for (long s = 0; s < n; ++s)
    for (long j = 0; j < n; ++j)
      xcorr_[static_cast<size_t>(s)] += val[j] * Pinv(j, s);
  x_done_ = true;
}

void ThetaRun::correct_Y() {
  if (!x_done_) throw std::logic_error("theta: correct X first");
  if (y_done_) throw std::logic_error("theta: Y already corrected");
  const long n = data_.n();
  Flag f = triangularize(induced_matrix(true));
  betas_ = f.evals;
  MatQ Pinv = rat_inverse(f.P);
  MatQ T = Pinv * induced_matrix(true) * f.P;
  std::vector<MonVec> w(n), val(n);
  for (long j = 0; j < n; ++j)
    for (long s = 0; s < n; ++s)
      w[j].add_term(data_.complement[s], f.P(s, j));
  for (long j = 0; j < n; ++j) {
    MonVec u = bracket_defect(w[j]);
    for (long i = 0; i < j; ++i) u -= val[i] * T(i, j);
    for (const auto& [e, c] : u.terms())
      if (e.l != data_.principal.l)
        throw std::logic_error(
            "theta: defect escaped the x-power span of the generator");
    // Absorb the x-powers above the generator along X - beta.
    MonVec a;
    bool first = true;
    Expo prev{0, 0};
    for (;;) {
      const Expo* pick = nullptr;
      Rat c;
      for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it)
        if (it->first.l == data_.principal.l &&
            it->first.k > data_.principal.k) {
          pick = &it->first;
          c = it->second;
          break;
        }
      if (!pick) break;
      step_guard();
      if (!first && !(*pick < prev))
        throw std::logic_error("theta: leading exponent failed to descend");
      first = false;
      prev = *pick;
      MonVec t = MonVec::monomial(pick->k - 1, data_.principal.l, -c);
      a += t;
      u += act(t, true) - t * betas_[j];
      for (const auto& [e, cc] : u.terms())
        if (e.l != data_.principal.l)
          throw std::logic_error(
              "theta: defect escaped the x-power span of the generator");
    }
    for (const auto& [e, c] : u.terms())
      if (e != data_.principal)
        throw std::logic_error("theta: residual defect is not scalar");
    val[j] = a;
  }
  ycorr_.assign(n, MonVec());
  for (long s = 0; s < n; ++s)
    for (long j = 0; j < n; ++j)
      ycorr_[static_cast<size_t>(s)] += val[j] * Pinv(j, s);
  y_done_ = true;
}

CMPoint ThetaRun::extract_cm() const {
  if (!x_done_ || !y_done_)
    throw std::logic_error("theta: corrections incomplete");
  const long n = data_.n();
  CMPoint p;
  p.n = n;
  p.X = induced_matrix(true);
  p.Y = induced_matrix(false);
  p.i = VecQ::Zero(n, 1);
  p.j = RowVecQ::Zero(1, n);
  for (long s = 0; s < n; ++s) {
    if (data_.complement[s] == data_.principal) p.i(s, 0) = Rat(1);
    MonVec d = bracket_defect(
        MonVec::monomial(data_.complement[s].k, data_.complement[s].l));
    for (const auto& [e, c] : d.terms()) {
      if (e != data_.principal)
        throw std::logic_error("theta: commutator image is not a multiple "
                               "of the generator");
      p.j(0, s) = c;
    }
  }
  if (!validate(p))
    throw std::logic_error("theta: extracted quadruple fails the rank-one "
                           "relation");
  return p;
}

MonVec transport_action(const RightIdealGB& M, const MonVec& a, char gen) {
  if (gen != 'x' && gen != 'y')
    throw std::invalid_argument("transport_action: gen must be 'x' or 'y'");
  ThetaRun run(M);
  return gen == 'x' ? run.actX(a) : run.actY(a);
}

CMPoint theta(const RightIdealGB& M, long guard, bool alternate_lift) {
  ThetaRun run(M, guard, alternate_lift);
  run.correct_X();
  run.correct_Y();
  return run.extract_cm();
}

CMPoint theta(const std::vector<WeylElement>& gens, long guard,
              bool alternate_lift) {
  return theta(groebner(gens), guard, alternate_lift);
}

}  // namespace weylcm
