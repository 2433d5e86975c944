#pragma once

// Named verification checks behind the CLI: each check builds the relevant
// objects and returns identity reports. Unlike the acceptance criteria, which
// pin fixed instances and constants, these take parameters.

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hesskit/families.hpp"
#include "hesskit/identity.hpp"
#include "hesskit/resultant.hpp"

namespace hesskit {

struct CheckDescriptor {
  std::string id;
  std::string summary;
  std::vector<std::string> params;  // "name=default" entries
};

inline const std::vector<CheckDescriptor>& check_catalog() {
  static const std::vector<CheckDescriptor> catalog = {
      {"segre-alpha", "det H of the generic (n+1) x (n+1) determinant is c f^(n^2-1)",
       {"n=2"}},
      {"segre-beta", "det H of the generic symmetric determinant is c g^((n+2)(n-1)/2)",
       {"n=2"}},
      {"segre-gamma", "det H of the generic pfaffian is c Pf^(v(m-1)/(m+1))", {"m=2"}},
      {"pf-square", "Pf(X)^2 = det(X) for the generic skew (2m+2) x (2m+2) matrix",
       {"m=2"}},
      {"lagrange", "|a|^2 |b|^2 - (a . b)^2 = sum of the squared 2x2 minors", {"n=1"}},
      {"cauchy-hess", "det H of the difference form is c f^(n+2)", {"n=1"}},
      {"p5-relation", "the quadric gradient relation of the P^5 quartic", {}},
      {"pencil-grid", "2x2 gradient minors of the pencil hypersurface vanish",
       {"g=z1^2 + z2^2 + z3^2"}},
      {"pencil-euler", "u f_u + v f_v = deg(g) f for the pencil hypersurface",
       {"g=z1^2 + z2^2 + z3^2"}},
      {"dual-cayley-grid", "gradient grid relations of the minor composition",
       {"g=z0*z2 - z1^2", "r=2"}},
      {"scroll-match", "the closed scroll-dual form equals the (1, b) resultant",
       {"b=2"}},
      {"res-degrees", "degree bookkeeping of the generic binary resultant",
       {"a=1", "b=2"}},
      {"res-common-factor", "the resultant vanishes exactly on a shared factor", {}},
      {"res-invariance", "Res transforms by det(A)^2 under form combinations", {}},
      {"adjugate", "X adj(X) = det(X) I and adj(adj(X)) = det(X)^(size-2) X",
       {"size=3"}},
  };
  return catalog;
}

namespace detail {

inline int check_param_int(const std::map<std::string, std::string>& params,
                           const std::string& key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  try {
    std::size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw Error("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error("parameter '" + key + "' must be an integer, got '" + it->second + "'");
  }
}

inline PolyQ check_param_poly(const std::map<std::string, std::string>& params,
                              const std::string& key, const std::string& fallback) {
  auto it = params.find(key);
  return parse_poly(it == params.end() ? fallback : it->second);
}

inline void check_reject_unknown(const std::string& id,
                                 const std::map<std::string, std::string>& params,
                                 std::initializer_list<const char*> known) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw Error("check '" + id + "' does not take parameter '" + k + "'");
  }
}

inline IdentityReport structural_report(std::string id, std::string claim) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.claim = std::move(claim);
  rep.mode = "exact";
  rep.passed = true;
  return rep;
}

inline void structural_expect(IdentityReport& rep, bool ok, const std::string& what) {
  rep.passed = rep.passed && ok;
  rep.notes.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
}

// The proportionality exponent deg(det H) / deg(f); the hessian determinant
// of these families is a perfect power of the form.
inline unsigned power_exponent(std::size_t n_vars, int entry_degree, int form_degree) {
  long long det_deg = static_cast<long long>(n_vars) * entry_degree;
  if (det_deg % form_degree != 0) {
    throw Error("hessian degree is not a multiple of the form degree");
  }
  return static_cast<unsigned>(det_deg / form_degree);
}

inline std::vector<IdentityReport> hessian_power_check(
    const std::string& id, const FamilyInstance& inst, std::optional<Rat> expected,
    const SampleConfig& cfg) {
  const int d = inst.expected.degree;
  const unsigned exponent =
      power_exponent(inst.f.vars()->size(), d - 2, d);
  auto in = make_hessian_power_input(
      id, "det H(" + inst.label + ") = c f^" + std::to_string(exponent), inst.f,
      exponent, std::move(expected), cfg);
  return {verify_proportionality(in, cfg)};
}

}  // namespace detail

inline std::vector<IdentityReport> run_check(
    const std::string& id, const std::map<std::string, std::string>& params,
    const SampleConfig& cfg) {
  using detail::check_param_int;
  using detail::check_param_poly;
  using detail::check_reject_unknown;
  using detail::structural_expect;
  using detail::structural_report;

  if (id == "segre-alpha") {
    check_reject_unknown(id, params, {"n"});
    int n = check_param_int(params, "n", 2);
    std::optional<Rat> expected;
    if (n == 2) expected = Rat(-2);
    if (n == 3) expected = Rat(-3);
    return detail::hessian_power_check(id, generic_det(n), expected, cfg);
  }

  if (id == "segre-beta") {
    check_reject_unknown(id, params, {"n"});
    int n = check_param_int(params, "n", 2);
    std::optional<Rat> expected;
    if (n == 2) expected = Rat(-16);
    if (n == 3) expected = Rat(-192);
    return detail::hessian_power_check(id, symmetric_det(n), expected, cfg);
  }

  if (id == "segre-gamma") {
    check_reject_unknown(id, params, {"m"});
    int m = check_param_int(params, "m", 2);
    std::optional<Rat> expected;
    if (m == 2) expected = Rat(2);
    return detail::hessian_power_check(id, pfaffian_form(m), expected, cfg);
  }

  if (id == "pf-square") {
    check_reject_unknown(id, params, {"m"});
    int m = check_param_int(params, "m", 2);
    if (m < 1 || m > 2) {
      throw Error("pf-square expands a symbolic determinant and is limited to m <= 2");
    }
    const int size = 2 * m + 2;
    Matrix<PolyQ> skew = detail::generic_skew_matrix(size);
    PolyQ pf = pfaffian(skew);
    return {verify_identity_exact(
        id, "Pf^2 = det for the generic skew " + std::to_string(size) + "x" +
                std::to_string(size) + " matrix",
        pf * pf, determinant(skew))};
  }

  if (id == "lagrange") {
    check_reject_unknown(id, params, {"n"});
    int n = check_param_int(params, "n", 1);
    auto inst = cauchy_schwartz(n);
    const auto& vars = inst.f.vars();
    const std::size_t len = vars->size() / 2;
    PolyQ sum = PolyQ::zero(vars);
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = i + 1; j < len; ++j) {
        PolyQ ai = PolyQ::variable(vars, i, Rat(1));
        PolyQ aj = PolyQ::variable(vars, j, Rat(1));
        PolyQ bi = PolyQ::variable(vars, len + i, Rat(1));
        PolyQ bj = PolyQ::variable(vars, len + j, Rat(1));
        PolyQ minor = ai * bj - aj * bi;
        sum += minor * minor;
      }
    }
    return {verify_identity_exact(
        id, "the difference form equals the sum of squared 2x2 minors", inst.f, sum)};
  }

  if (id == "cauchy-hess") {
    check_reject_unknown(id, params, {"n"});
    int n = check_param_int(params, "n", 1);
    std::optional<Rat> expected;
    if (n == 1) expected = Rat(192);
    return detail::hessian_power_check(id, cauchy_schwartz(n), expected, cfg);
  }

  if (id == "p5-relation") {
    check_reject_unknown(id, params, {});
    auto inst = p5_example();
    return {check_gradient_grid_relations(
        id, "the x and y derivative rows of the P^5 quartic are proportional", inst.f,
        inst.gradient_grid)};
  }

  if (id == "pencil-grid") {
    check_reject_unknown(id, params, {"g"});
    auto inst = pencil(check_param_poly(params, "g", "z1^2 + z2^2 + z3^2"));
    return {check_gradient_grid_relations(
        id, "2x2 gradient minors of " + inst.label + " vanish", inst.f,
        inst.gradient_grid)};
  }

  if (id == "pencil-euler") {
    check_reject_unknown(id, params, {"g"});
    PolyQ g = check_param_poly(params, "g", "z1^2 + z2^2 + z3^2");
    auto inst = pencil(g);
    const int d = *g.is_homogeneous();
    return {verify_identity_exact(
        id, "u f_u + v f_v = " + std::to_string(d) + " f for " + inst.label,
        inst.f.euler_sum({0, 1}), inst.f.scaled(Rat(d)))};
  }

  if (id == "dual-cayley-grid") {
    check_reject_unknown(id, params, {"g", "r"});
    auto inst = dual_cayley(check_param_poly(params, "g", "z0*z2 - z1^2"),
                            check_param_int(params, "r", 2));
    return {check_gradient_grid_relations(
        id, "gradient grid relations of " + inst.label, inst.f, inst.gradient_grid)};
  }

  if (id == "scroll-match") {
    check_reject_unknown(id, params, {"b"});
    int b = check_param_int(params, "b", 2);
    auto closed = scroll_dual_closed(b);
    auto res = scroll_dual(1, b);
    return {verify_identity_exact(id,
                                  "closed form of the (1, " + std::to_string(b) +
                                      ") scroll dual equals the resultant",
                                  closed.f, res.f)};
  }

  if (id == "res-degrees") {
    check_reject_unknown(id, params, {"a", "b"});
    int a = check_param_int(params, "a", 1);
    int b = check_param_int(params, "b", 2);
    auto inst = scroll_dual(a, b);
    auto rep = structural_report(
        id, "degrees of the resultant of generic binary forms of degrees " +
                std::to_string(a) + " and " + std::to_string(b));
    structural_expect(rep, inst.f.total_degree() == a + b,
                      "total degree is " + std::to_string(a + b));
    std::vector<std::size_t> wblock, zblock;
    for (int i = 0; i <= a; ++i) wblock.push_back(static_cast<std::size_t>(i));
    for (int i = 0; i <= b; ++i) zblock.push_back(static_cast<std::size_t>(a + 1 + i));
    auto dw = inst.f.uniform_degree_in(wblock);
    auto dz = inst.f.uniform_degree_in(zblock);
    structural_expect(rep, dw.has_value() && *dw == b,
                      "uniform degree " + std::to_string(b) + " in the first block");
    structural_expect(rep, dz.has_value() && *dz == a,
                      "uniform degree " + std::to_string(a) + " in the second block");
    return {rep};
  }

  if (id == "res-common-factor") {
    check_reject_unknown(id, params, {});
    VarSetPtr st = VarSet::make({"s", "t"});
    PolyQ common = parse_poly("s - t", st);
    PolyQ f = common * parse_poly("s + 2*t", st);
    PolyQ g = common * parse_poly("3*s + t", st);
    auto rep = structural_report(id, "the resultant vanishes exactly on a shared factor");
    structural_expect(rep, binary_resultant(f, g, 0, 1, 2, 2).is_zero(),
                      "shared factor (s - t) forces a zero resultant");
    PolyQ h = parse_poly("s^2 + t^2", st);
    structural_expect(rep, !binary_resultant(f, h, 0, 1, 2, 2).is_zero(),
                      "coprime forms give a nonzero resultant");
    return {rep};
  }

  if (id == "res-invariance") {
    check_reject_unknown(id, params, {});
    VarSetPtr st = VarSet::make({"s", "t"});
    auto random_quadratic = [&](std::uint64_t counter) {
      Stream rng(cfg.seed, "res-invariance-form", counter);
      PolyQ q = PolyQ::zero(st);
      for (int i = 0; i <= 2; ++i) {
        Rat coef(static_cast<long>(rng.int_in(-9, 9)));
        if (coef.is_zero()) continue;
        q += PolyQ::monomial(st, {2 - i, i}, coef);
      }
      return q;
    };
    PolyQ g0 = random_quadratic(0);
    PolyQ g1 = random_quadratic(1);
    Rat base = binary_resultant(g0, g1, 0, 1, 2, 2).constant_value();
    for (std::uint64_t extra = 2; base.is_zero() && extra < 16; ++extra) {
      g1 = random_quadratic(extra);
      base = binary_resultant(g0, g1, 0, 1, 2, 2).constant_value();
    }
    auto rep = structural_report(
        id, "Res(a00 g0 + a01 g1, a10 g0 + a11 g1) = det(A)^2 Res(g0, g1)");
    structural_expect(rep, !base.is_zero(), "the reference resultant is nonzero");
    for (int k = 0; k < 5; ++k) {
      Stream rng(cfg.seed, "res-invariance-matrix", static_cast<std::uint64_t>(k));
      Rat a00(static_cast<long>(rng.int_in(-9, 9))), a01(static_cast<long>(rng.int_in(-9, 9)));
      Rat a10(static_cast<long>(rng.int_in(-9, 9))), a11(static_cast<long>(rng.int_in(-9, 9)));
      Rat det = a00 * a11 - a01 * a10;
      PolyQ h0 = g0.scaled(a00) + g1.scaled(a01);
      PolyQ h1 = g0.scaled(a10) + g1.scaled(a11);
      Rat lhs = binary_resultant(h0, h1, 0, 1, 2, 2).constant_value();
      structural_expect(rep, lhs == det * det * base,
                        "combination " + std::to_string(k) + " transforms by det(A)^2");
    }
    rep.trials = 5;
    return {rep};
  }

  if (id == "adjugate") {
    check_reject_unknown(id, params, {"size"});
    int size = check_param_int(params, "size", 3);
    if (size < 2 || size > 4) {
      throw Error("adjugate check expands symbolic determinants and is limited to "
                  "sizes 2 to 4");
    }
    Matrix<PolyQ> m = detail::generic_square_matrix(size, "x");
    PolyQ det = determinant(m);
    Matrix<PolyQ> adj = adjugate(m);
    Matrix<PolyQ> prod = m * adj;
    auto rep = structural_report(
        id, "adjugate identities for the generic " + std::to_string(size) + "x" +
                std::to_string(size) + " matrix");
    bool laplace = true;
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        laplace = laplace &&
                  (prod.at(i, j) == (i == j ? det : PolyQ::zero(matrix_vars(m))));
      }
    }
    structural_expect(rep, laplace, "X adj(X) = det(X) I");
    Matrix<PolyQ> adj2 = adjugate(adj);
    PolyQ scale = det.pow(static_cast<unsigned>(size - 2));
    bool doubled = true;
    for (std::size_t i = 0; i < adj2.rows(); ++i) {
      for (std::size_t j = 0; j < adj2.cols(); ++j) {
        doubled = doubled && (adj2.at(i, j) == m.at(i, j) * scale);
      }
    }
    structural_expect(rep, doubled,
                      "adj(adj(X)) = det(X)^" + std::to_string(size - 2) + " X");
    return {rep};
  }

  throw Error("unknown check '" + id + "'");
}

}  // namespace hesskit
