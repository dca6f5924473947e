// Command-line front end for the library: validation and invariants of
// matrix quadruples, both correspondence directions (quadruple -> ideal
// and ideal -> quadruple), round trips, equivariance, envelope checks,
// and Groebner bases, all over JSON on stdin/stdout.
//
// Exit codes: 0 success (or property true), 1 property failure (with a
// structured report on stdout), 2 malformed input or bad options.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "weylcm/envelope.hpp"
#include "weylcm/groebner.hpp"
#include "weylcm/json_io.hpp"
#include "weylcm/resolution.hpp"
#include "weylcm/theta.hpp"

using namespace weylcm;

namespace {

struct Options {
  std::string input = "-";
  long trunc = 8;
  long lambda_bound = 4;
  long budget = 4;
  unsigned long seed = 0;
  long cases = 50;
  long guard = 1000000;
  bool alternate_lift = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json parse_input(const Options& opt) {
  std::string text = read_input(opt.input);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<WeylElement> gens_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(
        "json: expected a nonempty array of Weyl elements");
  std::vector<WeylElement> gens;
  for (const Json& g : j) gens.push_back(weyl_from_json(g));
  return gens;
}

int emit(const Json& out, int code) {
  std::cout << out.dump() << "\n";
  return code;
}

Json expo_to_json(const Expo& e) { return Json::array({e.k, e.l}); }

// --- subcommand bodies -------------------------------------------------

int run_validate(const Options& opt) {
  CMPoint p = cm_from_json(parse_input(opt));
  bool ok = validate(p);
  return emit(Json{{"valid", ok}, {"n", p.n}}, ok ? 0 : 1);
}

int run_lambda(const Options& opt) {
  CMPoint p = cm_from_json(parse_input(opt));
  LambdaTable t = lambda_table(p, opt.lambda_bound);
  Json values = Json::array();
  for (const auto& row : t.values) {
    Json r = Json::array();
    for (const Rat& v : row) r.push_back(rat_to_string(v));
    values.push_back(std::move(r));
  }
  return emit(Json{{"bound", t.bound}, {"values", std::move(values)}}, 0);
}

int run_kappa(const Options& opt) {
  CMPoint p = cm_from_json(parse_input(opt));
  KappaPair kp = kappa(p);
  // kappa * chi - 1 must vanish in the skew field.
  SandwichSum prod = skew_mul_cross(kp.kappa, kp.chi);
  prod.add_term(RatFun(Rat(-1)), RatFun(Rat(1)), RatFun(Rat(1)));
  bool inverse_ok = sandwich_is_zero(prod);
  bool series_ok = kappa_series_check(p, opt.lambda_bound);
  Json out{{"kappa", skew_to_json(kp.kappa)},
           {"chi", skew_to_json(kp.chi)},
           {"inverse_check", inverse_ok},
           {"series_check", series_ok}};
  return emit(out, inverse_ok && series_ok ? 0 : 1);
}

int run_omega(const Options& opt) {
  CMPoint p = cm_from_json(parse_input(opt));
  try {
    return emit(ideal_to_json(omega_ideal(p)), 0);
  } catch (const std::domain_error& e) {
    return emit(Json{{"error", e.what()}}, 1);
  }
}

int run_theta(const Options& opt) {
  std::vector<WeylElement> gens = gens_from_json(parse_input(opt));
  try {
    RightIdealGB gb = groebner(gens, opt.guard);
    ThetaRun run(gb, opt.guard, opt.alternate_lift);
    run.correct_X();
    run.correct_Y();
    CMPoint p = run.extract_cm();
    Json staircase = Json::array();
    for (const Expo& e : gb.staircase_gens)
      staircase.push_back(expo_to_json(e));
    Json evy = Json::array(), evx = Json::array();
    for (const Rat& a : run.y_eigenvalues()) evy.push_back(rat_to_string(a));
    for (const Rat& b : run.x_eigenvalues()) evx.push_back(rat_to_string(b));
    Json cx = Json::array(), cy = Json::array();
    for (const auto& c : run.x_correction()) cx.push_back(weyl_to_json(c));
    for (const auto& c : run.y_correction()) cy.push_back(weyl_to_json(c));
    Json transcript{{"staircase", std::move(staircase)},
                    {"principal", expo_to_json(run.data().principal)},
                    {"n", run.data().n()},
                    {"y_eigenvalues", std::move(evy)},
                    {"x_eigenvalues", std::move(evx)},
                    {"x_correction", std::move(cx)},
                    {"y_correction", std::move(cy)}};
    return emit(
        Json{{"point", cm_to_json(p)}, {"transcript", std::move(transcript)}},
        0);
  } catch (const NonSplitSpectrum& e) {
    return emit(Json{{"error", "non_split_spectrum"},
                     {"factor", unipoly_to_json(e.factor)}},
                1);
  } catch (const std::runtime_error& e) {
    return emit(Json{{"error", e.what()}}, 1);
  }
}

bool roundtrip_once(const CMPoint& p, const Options& opt) {
  IdealPresentation I = omega_ideal(p);
  CMPoint q =
      theta({I.cleared_poly, I.cleared_skew}, opt.guard, opt.alternate_lift);
  return equivalent(p, q);
}

// A seeded invertible matrix with small integer entries.
MatQ random_invertible(long n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    MatQ g(n, n);
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) g(r, c) = Rat(d(rng));
    if (det<Rat>(g) != 0) return g;
  }
}

int run_roundtrip(const Options& opt) {
  CMPoint p = cm_from_json(parse_input(opt));
  if (!validate(p))
    throw std::invalid_argument("input quadruple is not valid");
  try {
    bool ok = roundtrip_once(p, opt);
    std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));
    for (long c = 0; ok && p.n > 0 && c < opt.cases; ++c)
      ok = roundtrip_once(conjugate(p, random_invertible(p.n, rng)), opt);
    return emit(Json{{"equivalent", ok}}, ok ? 0 : 1);
  } catch (const NonSplitSpectrum& e) {
    return emit(Json{{"error", "non_split_spectrum"},
                     {"factor", unipoly_to_json(e.factor)}},
                1);
  }
}

int run_envelope_check(const Options& opt) {
  CMPoint p = cm_from_json(parse_input(opt));
  if (!validate(p))
    throw std::invalid_argument("input quadruple is not valid");
  Envelope env(p, opt.trunc);
  AxiomReport report = check_ainf_axioms(env, opt.budget);
  return emit(report_to_json(report), report.all_pass() ? 0 : 1);
}

bool vec_eq(const VecQ& a, const VecQ& b) {
  if (a.rows() != b.rows()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    if (a(r, 0) != b(r, 0)) return false;
  return true;
}

int run_dg_check(const Options& opt) {
  CMPoint p = cm_from_json(parse_input(opt));
  if (!validate(p))
    throw std::invalid_argument("input quadruple is not valid");
  DGEnvelope dg(p, opt.trunc);
  const Envelope& env = dg.complex();
  AxiomReport report;
  auto record = [&report](const std::string& axiom, const std::string& loc,
                          bool pass) {
    for (auto& c : report.checks)
      if (c.axiom == axiom) {
        if (c.pass && !pass) {
          c.pass = false;
          c.location = loc;
        }
        return;
      }
    report.checks.push_back({axiom, pass ? "" : loc, pass, ""});
  };

  std::vector<WeylElement> monos;
  long half = opt.budget / 2;
  for (long k = 0; k <= half; ++k)
    for (long m = 0; k + m <= half; ++m)
      monos.push_back(WeylElement::monomial(k, m));
  std::vector<VecQ> basis1;
  for (long s = 0; s < p.n; ++s) {
    VecQ v = VecQ::Zero(p.n, 1);
    v(s, 0) = Rat(1);
    basis1.push_back(v);
  }
  auto loc_u = [](long k, long m) {
    return "u=x^" + std::to_string(k) + "y^" + std::to_string(m);
  };

  // The differential is linear over the generator actions.
  for (long k = 0; k + 1 <= opt.budget; ++k)
    for (long m = 0; k + m + 1 <= opt.budget; ++m) {
      WeylElement u = WeylElement::monomial(k, m);
      for (char g : {'x', 'y'})
        record("dg_differential_linear", loc_u(k, m),
               vec_eq(env.m1(dg.act0(u, g)), dg.act1(env.m1(u), g)));
    }
  // d(v.w) + v.dw = 0: the degree -1 element encodes the rank-one relation.
  for (long s = 0; s < p.n; ++s) {
    VecQ lhs = env.m1(dg.act_w(basis1[s]));
    VecQ rhs = dg.act1(dg.act1(basis1[s], 'x'), 'y') -
               dg.act1(dg.act1(basis1[s], 'y'), 'x') - basis1[s];
    record("dg_w_leibniz", "v=e_" + std::to_string(s),
           vec_eq(lhs, -rhs));
  }
  // The restricted structure maps agree with the homotopy-module ones.
  for (long k = 0; k <= opt.budget; ++k)
    for (long m = 0; k + m <= opt.budget; ++m) {
      WeylElement u = WeylElement::monomial(k, m);
      for (const auto& a : monos)
        record("dg_m2_0_matches", loc_u(k, m),
               dg.m2_0(u, a) == env.m2_0(u, a));
    }
  for (long s = 0; s < p.n; ++s)
    for (const auto& a : monos)
      record("dg_m2_1_matches", "v=e_" + std::to_string(s),
             vec_eq(dg.m2_1(basis1[s], a), env.m2_1(basis1[s], a)));
  for (long s = 0; s < p.n; ++s)
    for (const auto& a : monos)
      for (const auto& b : monos)
        record("dg_m3_matches", "v=e_" + std::to_string(s),
               dg.m3(basis1[s], a, b) == env.m3(basis1[s], a, b));

  return emit(report_to_json(report), report.all_pass() ? 0 : 1);
}

Automorphism automorphism_from_json(const Json& j) {
  if (!j.is_array())
    throw std::invalid_argument(
        "json: 'sigma' must be an array of transvections");
  Automorphism s = Automorphism::identity();
  for (const Json& step : j) {
    if (!step.is_object() || !step.contains("type") ||
        !step.contains("poly") || !step["type"].is_string())
      throw std::invalid_argument(
          "json: each transvection needs 'type' and 'poly'");
    UniPoly p = unipoly_from_json(step["poly"]);
    std::string type = step["type"].get<std::string>();
    Automorphism t = Automorphism::identity();
    if (type == "transvection_x")
      t = Automorphism::transvection_x(p);
    else if (type == "transvection_y")
      t = Automorphism::transvection_y(p);
    else
      throw std::invalid_argument(
          "json: 'type' must be transvection_x or transvection_y");
    s = Automorphism::compose(t, s);  // apply in array order
  }
  return s;
}

int run_act(const Options& opt) {
  Json in = parse_input(opt);
  if (!in.is_object() || !in.contains("sigma") || !in.contains("point"))
    throw std::invalid_argument("json: expected {\"sigma\":..., \"point\":...}");
  Automorphism s = automorphism_from_json(in["sigma"]);
  CMPoint p = cm_from_json(in["point"]);
  return emit(cm_to_json(act(s, p)), 0);
}

int run_groebner(const Options& opt) {
  std::vector<WeylElement> gens = gens_from_json(parse_input(opt));
  try {
    RightIdealGB gb = groebner(gens, opt.guard);
    Json basis = Json::array();
    for (const auto& b : gb.basis) basis.push_back(weyl_to_json(b));
    Json staircase = Json::array();
    for (const Expo& e : gb.staircase_gens)
      staircase.push_back(expo_to_json(e));
    return emit(
        Json{{"basis", std::move(basis)}, {"staircase", std::move(staircase)}},
        0);
  } catch (const std::runtime_error& e) {
    return emit(Json{{"error", e.what()}}, 1);
  }
}

int run_equiv(const Options& opt) {
  Json in = parse_input(opt);
  if (!in.is_object() || !in.contains("p") || !in.contains("q"))
    throw std::invalid_argument("json: expected {\"p\":..., \"q\":...}");
  CMPoint p = cm_from_json(in["p"]);
  CMPoint q = cm_from_json(in["q"]);
  if (p.n != q.n)
    return emit(Json{{"equivalent", false}, {"witness", "n"}}, 1);
  long bound = std::max<long>(2 * p.n, 2);
  LambdaTable tp = lambda_table(p, bound), tq = lambda_table(q, bound);
  for (long l = 0; l <= bound; ++l)
    for (long k = 0; k <= bound; ++k)
      if (tp.at(l, k) != tq.at(l, k))
        return emit(Json{{"equivalent", false},
                         {"witness", "lambda_" + std::to_string(l) +
                                         std::to_string(k)}},
                    1);
  if (!equivalent(p, q))
    return emit(Json{{"equivalent", false}, {"witness", "intertwiner"}}, 1);
  return emit(Json{{"equivalent", true}}, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl-algebra / matrix-quadruple correspondence tool"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.input,
                    "input file path, or '-' for standard input");
    sub->add_option("--trunc", opt.trunc, "truncation degree D (<= 16)");
    sub->add_option("--lambda-bound", opt.lambda_bound,
                    "invariant table bound (<= 12)");
    sub->add_option("--budget", opt.budget, "degree budget for axiom checks");
    sub->add_option("--seed", opt.seed, "seed for randomized cases");
    sub->add_option("--cases", opt.cases, "number of randomized cases");
    sub->add_option("--guard", opt.guard, "reduction step guard");
    sub->add_flag("--alternate-lift", opt.alternate_lift,
                  "use the alternate lift tie-break");
    return sub;
  };

  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Options&);
  };
  const Entry entries[] = {
      {"validate", "check the quadruple relation; report {valid, n}",
       run_validate},
      {"lambda", "invariant table j Y^l X^k i up to --lambda-bound",
       run_lambda},
      {"kappa", "conjugation kernel and inverse, with identity checks",
       run_kappa},
      {"omega", "two-generator ideal presentation of a quadruple", run_omega},
      {"theta", "extract a quadruple from ideal generators, with transcript",
       run_theta},
      {"roundtrip", "quadruple -> ideal -> quadruple, compare up to "
                    "equivalence (plus --cases random conjugates)",
       run_roundtrip},
      {"envelope-check", "homotopy-module axiom report at --trunc/--budget",
       run_envelope_check},
      {"dg-check", "dg module vs homotopy module structure maps and Leibniz",
       run_dg_check},
      {"act", "apply a composed transvection to a quadruple", run_act},
      {"groebner", "right-ideal basis and staircase generators", run_groebner},
      {"equiv", "decide equivalence of two quadruples, with witness",
       run_equiv},
  };
  for (const Entry& e : entries) add_common(app.add_subcommand(e.name, e.help));

  CLI11_PARSE(app, argc, argv);

  if (opt.trunc < 2 || opt.trunc > 16) {
    std::cout << Json{{"error", "--trunc must be between 2 and 16"}}.dump()
              << "\n";
    return 2;
  }
  if (opt.lambda_bound < 0 || opt.lambda_bound > 12) {
    std::cout << Json{{"error", "--lambda-bound must be between 0 and 12"}}
                     .dump()
              << "\n";
    return 2;
  }

  try {
    for (const Entry& e : entries)
      if (app.get_subcommand(e.name)->parsed()) return e.fn(opt);
    return 2;  // unreachable with require_subcommand(1)
  } catch (const std::invalid_argument& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
}
