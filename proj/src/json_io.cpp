#include "weylcm/json_io.hpp"

#include <stdexcept>
#include <string>

namespace weylcm {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

long get_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

Rat rat_from(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a rational string");
  try {
    return rat_from_string(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    bad(std::string(what) + " is not a valid rational");
  }
}

Json matrix_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(rat_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatQ matrix_from_json(const Json& j, long rows, long cols, const char* what) {
  if (!j.is_array() || static_cast<long>(j.size()) != rows)
    bad(std::string(what) + " must have " + std::to_string(rows) + " rows");
  MatQ m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<long>(row.size()) != cols)
      bad(std::string(what) + " rows must have " + std::to_string(cols) +
          " entries");
    for (long c = 0; c < cols; ++c) m(r, c) = rat_from(row[c], what);
  }
  return m;
}

RatFun ratfun_from(const Json& num, const Json& den, const char* what) {
  UniPoly n = unipoly_from_json(num), d = unipoly_from_json(den);
  if (d.is_zero()) bad(std::string(what) + " has a zero denominator");
  return RatFun(n, d);
}

}  // namespace

Json weyl_to_json(const WeylElement& a) {
  Json terms = Json::array();
  for (const auto& [e, c] : a.terms()) {
    Json t;
    t["k"] = e.k;
    t["l"] = e.l;
    t["num"] = c.num().str();
    t["den"] = c.den().str();
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

WeylElement weyl_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  WeylElement a;
  for (const Json& t : terms) {
    long k = get_long(field(t, "k"), "'k'");
    long l = get_long(field(t, "l"), "'l'");
    if (k < 0 || l < 0) bad("exponents must be nonnegative");
    Rat num = rat_from(field(t, "num"), "'num'");
    Rat den = rat_from(field(t, "den"), "'den'");
    if (den == 0) bad("'den' must be nonzero");
    a.add_term({k, l}, num / den);
  }
  return a;
}

Json unipoly_to_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
  return coeffs;
}

UniPoly unipoly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  std::vector<Rat> coeffs;
  for (const Json& c : j) coeffs.push_back(rat_from(c, "coefficient"));
  return UniPoly(std::move(coeffs));
}

Json skew_to_json(const SkewSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    Json e;
    e["outer_num"] = unipoly_to_json(t.left.num());
    e["outer_den"] = unipoly_to_json(t.left.den());
    e["inner_num"] = unipoly_to_json(t.right.num());
    e["inner_den"] = unipoly_to_json(t.right.den());
    terms.push_back(std::move(e));
  }
  return Json{{"chirality", s.chirality() == Chirality::YX ? "YX" : "XY"},
              {"terms", std::move(terms)}};
}

SkewSum skew_from_json(const Json& j) {
  const Json& chi = field(j, "chirality");
  if (!chi.is_string()) bad("'chirality' must be \"YX\" or \"XY\"");
  std::string c = chi.get<std::string>();
  Chirality which;
  if (c == "YX")
    which = Chirality::YX;
  else if (c == "XY")
    which = Chirality::XY;
  else
    bad("'chirality' must be \"YX\" or \"XY\"");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  SkewSum s(which);
  for (const Json& t : terms)
    s.add_term(
        ratfun_from(field(t, "outer_num"), field(t, "outer_den"), "outer"),
        ratfun_from(field(t, "inner_num"), field(t, "inner_den"), "inner"));
  return s;
}

Json cm_to_json(const CMPoint& p) {
  Json j;
  j["n"] = p.n;
  j["X"] = matrix_to_json(p.X);
  j["Y"] = matrix_to_json(p.Y);
  Json iv = Json::array();
  for (long r = 0; r < p.n; ++r) iv.push_back(rat_to_string(p.i(r, 0)));
  j["i"] = std::move(iv);
  Json jv = Json::array();
  for (long c = 0; c < p.n; ++c) jv.push_back(rat_to_string(p.j(0, c)));
  j["j"] = std::move(jv);
  return j;
}

CMPoint cm_from_json(const Json& j) {
  CMPoint p;
  p.n = get_long(field(j, "n"), "'n'");
  if (p.n < 0) bad("'n' must be nonnegative");
  p.X = matrix_from_json(field(j, "X"), p.n, p.n, "'X'");
  p.Y = matrix_from_json(field(j, "Y"), p.n, p.n, "'Y'");
  const Json& iv = field(j, "i");
  if (!iv.is_array() || static_cast<long>(iv.size()) != p.n)
    bad("'i' must have n entries");
  p.i = VecQ(p.n, 1);
  for (long r = 0; r < p.n; ++r) p.i(r, 0) = rat_from(iv[r], "'i'");
  const Json& jv = field(j, "j");
  if (!jv.is_array() || static_cast<long>(jv.size()) != p.n)
    bad("'j' must have n entries");
  p.j = RowVecQ(1, p.n);
  for (long c = 0; c < p.n; ++c) p.j(0, c) = rat_from(jv[c], "'j'");
  return p;
}

Json report_to_json(const AxiomReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks)
    out.push_back(Json{{"axiom", c.axiom},
                       {"location", c.location},
                       {"pass", c.pass},
                       {"defect", c.defect}});
  return out;
}

Json ideal_to_json(const IdealPresentation& I) {
  Json j;
  j["point"] = cm_to_json(I.source);
  j["gen_poly"] = weyl_to_json(I.gen_poly);
  j["gen_skew"] = skew_to_json(I.gen_skew);
  j["clearing"] = unipoly_to_json(I.clearing);
  j["cleared_poly"] = weyl_to_json(I.cleared_poly);
  j["cleared_skew"] = weyl_to_json(I.cleared_skew);
  return j;
}

}  // namespace weylcm
