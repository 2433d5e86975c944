#pragma once

// The acceptance suite: sixteen pinned criteria exercising the hessian
// machinery end to end on the family catalog. Each criterion yields one
// record; the record passes only if every assertion inside it holds. The
// suite is deterministic for a fixed configuration.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/families.hpp"
#include "hesskit/hessian.hpp"
#include "hesskit/identity.hpp"
#include "hesskit/matrix.hpp"
#include "hesskit/poly.hpp"
#include "hesskit/poly_io.hpp"
#include "hesskit/resultant.hpp"
#include "hesskit/sampling.hpp"

namespace hesskit {

struct AcceptanceRecord {
  int index = 0;
  std::string id;
  std::string claim;
  bool passed = true;
  std::string certificate;
  std::vector<std::string> details;
};

namespace detail {

class Checker {
 public:
  Checker(int index, std::string id, std::string claim, std::string certificate) {
    rec_.index = index;
    rec_.id = std::move(id);
    rec_.claim = std::move(claim);
    rec_.certificate = std::move(certificate);
  }

  void expect(bool ok, const std::string& what) {
    rec_.details.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    rec_.passed = rec_.passed && ok;
  }

  template <class T, class U>
  void expect_eq(const T& got, const U& want, const std::string& name) {
    const bool ok = got == static_cast<T>(want);
    expect(ok, name + " = " + fmt(got) + (ok ? "" : " (expected " + fmt(want) + ")"));
  }

  void note(const std::string& what) { rec_.details.push_back("note: " + what); }

  AcceptanceRecord take() { return std::move(rec_); }

 private:
  template <class T>
  static std::string fmt(const T& v) {
    if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else {
      return std::to_string(v);
    }
  }

  AcceptanceRecord rec_;
};

inline ProfileOptions sampled_profile_options(const FamilyInstance& inst) {
  ProfileOptions opts;
  opts.rank_strategy = RankStrategy::Sample;
  opts.rank_mod_prime = inst.preferred_sampling_prime;
  return opts;
}

}  // namespace detail

inline AcceptanceRecord criterion_perazzo(const SampleConfig& cfg) {
  detail::Checker c(1, "perazzo-hessian",
                    "the perazzo cubic has vanishing hessian and is not a cone", "exact");
  FamilyInstance inst = perazzo();
  ZeroTestResult z = hessian_determinant_is_zero(inst.f, cfg, ZeroTestMode::Exact);
  c.expect(z.is_zero, "det H(f) expands to the zero polynomial");
  c.expect(!cone_test(inst.f).is_cone, "the partial derivatives are linearly independent");
  return c.take();
}

inline AcceptanceRecord criterion_perazzo_ext(const SampleConfig& cfg) {
  detail::Checker c(2, "perazzo-ext-hessian",
                    "the extended cubic in P^6 has vanishing hessian and is not a cone",
                    "schwartz-zippel");
  FamilyInstance inst = perazzo_ext(6);
  ZeroTestResult z = hessian_determinant_is_zero(inst.f, cfg, ZeroTestMode::Probabilistic);
  c.expect(z.is_zero, "det H(f) vanishes at every sampled point");
  c.expect(z.failure_bound_log10 < -20.0,
           "failure bound log10 = " + std::to_string(z.failure_bound_log10) +
               " is below -20");
  c.expect(!cone_test(inst.f).is_cone, "the partial derivatives are linearly independent");
  return c.take();
}

inline AcceptanceRecord criterion_p7_fermat(const SampleConfig& cfg) {
  detail::Checker c(3, "p7-fermat-profile",
                    "the Fermat pencil quartic in P^7: rank 6, rank mod f 5, codim 2",
                    "sampled + schwartz-zippel");
  FamilyInstance inst = p7_fermat();
  HessianProfile p = hessian_profile(inst.f, cfg, detail::sampled_profile_options(inst));
  c.expect(p.hess_is_zero, "det H(f) vanishes at every sampled point");
  c.expect_eq(p.generic_rank, 6, "generic rank of H");
  c.expect_eq(p.rank_mod_f, 5, "rank of H mod (f)");
  c.expect_eq(p.dual_codim_in_polar, 2, "codimension of the dual in the polar image");
  c.note("codim 2 = codim of the dual conic in P^2 plus 1");
  return c.take();
}

inline AcceptanceRecord criterion_p5_example(const SampleConfig& cfg) {
  detail::Checker c(4, "p5-example",
                    "the quartic in P^5: hess = 0 exactly, quadric gradient relation, "
                    "rank 5, not a cone",
                    "exact + sampled");
  FamilyInstance inst = p5_example();
  ZeroTestResult z = hessian_determinant_is_zero(inst.f, cfg, ZeroTestMode::Exact);
  c.expect(z.is_zero, "det H(f) expands to the zero polynomial");
  IdentityReport rel = check_gradient_grid_relations(
      "p5-relation", "f_x1 f_y2 - f_x2 f_y1 = 0", inst.f, inst.gradient_grid);
  c.expect(rel.passed, "the gradient grid relation holds exactly");
  c.expect_eq(generic_rank(hessian_matrix(inst.f), cfg), 5, "generic rank of H");
  c.expect(!cone_test(inst.f).is_cone, "the partial derivatives are linearly independent");
  return c.take();
}

inline AcceptanceRecord criterion_pencil_euler(const SampleConfig& cfg) {
  (void)cfg;
  detail::Checker c(5, "pencil-euler",
                    "u f_u + v f_v = 2 f for the Fermat pencil quartic", "exact");
  FamilyInstance inst = p7_fermat();
  PolyQ lhs = inst.f.euler_sum({0, 1});
  c.expect(lhs == inst.f.scaled(Rat(2)), "the partial Euler relation holds exactly");
  return c.take();
}

inline AcceptanceRecord criterion_scroll_duals(const SampleConfig& cfg) {
  detail::Checker c(6, "scroll-duals",
                    "the closed scroll-dual forms match the resultant and have "
                    "vanishing hessian",
                    "exact + schwartz-zippel");
  FamilyInstance sd = scroll_dual(1, 2);
  FamilyInstance cl2 = scroll_dual_closed(2);
  FamilyInstance cl3 = scroll_dual_closed(3);
  const bool plus = sd.f == cl2.f;
  const bool minus = sd.f == -cl2.f;
  c.expect(plus || minus, "resultant form equals the closed form up to one global sign");
  if (plus || minus) c.note(std::string("global sign is ") + (plus ? "+1" : "-1"));
  c.expect_eq(*cl2.f.is_homogeneous(), 3, "degree of the closed form for b = 2");
  c.expect_eq(*cl3.f.is_homogeneous(), 4, "degree of the closed form for b = 3");
  ZeroTestResult z2 = hessian_determinant_is_zero(cl2.f, cfg, ZeroTestMode::Exact);
  c.expect(z2.is_zero, "b = 2: det H expands to the zero polynomial");
  ZeroTestResult z3 = hessian_determinant_is_zero(cl3.f, cfg, ZeroTestMode::Probabilistic);
  c.expect(z3.is_zero, "b = 3: det H vanishes at every sampled point");
  c.expect(!cone_test(cl2.f).is_cone, "b = 2: not a cone");
  c.expect(!cone_test(cl3.f).is_cone, "b = 3: not a cone");
  return c.take();
}

inline AcceptanceRecord criterion_resultant_degrees(const SampleConfig& cfg) {
  (void)cfg;
  detail::Checker c(7, "resultant-degrees",
                    "degree bookkeeping of the generic binary resultant and the "
                    "common-factor criterion",
                    "exact");
  FamilyInstance sd = scroll_dual(2, 3);
  c.expect_eq(sd.f.total_degree(), 5, "total degree of the (2, 3) resultant");
  auto wdeg = sd.f.uniform_degree_in({0, 1, 2});
  auto zdeg = sd.f.uniform_degree_in({3, 4, 5, 6});
  c.expect(wdeg.has_value() && *wdeg == 3,
           "the resultant is homogeneous of degree 3 in the first form's coefficients");
  c.expect(zdeg.has_value() && *zdeg == 2,
           "the resultant is homogeneous of degree 2 in the second form's coefficients");

  VarSetPtr st = VarSet::make({"s", "t"});
  PolyQ s = PolyQ::variable(st, 0, Rat(1));
  PolyQ t = PolyQ::variable(st, 1, Rat(1));
  PolyQ f = (s - t) * (s + t.scaled(Rat(2)));
  PolyQ g = (s - t) * (s.scaled(Rat(3)) + t);
  PolyQ res = binary_resultant(f, g, 0, 1, 2, 2);
  c.expect(res.is_zero(), "forms sharing the factor s - t have zero resultant");
  return c.take();
}

inline AcceptanceRecord criterion_resultant_invariance(const SampleConfig& cfg) {
  detail::Checker c(8, "resultant-invariance",
                    "Res(h0, h1) = det(A)^2 Res(g0, g1) for linear combinations "
                    "h_i = a_i0 g0 + a_i1 g1 of binary quadratics",
                    "exact");
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
  c.expect(!base.is_zero(), "the reference resultant is nonzero");
  for (int k = 0; k < 5; ++k) {
    Stream rng(cfg.seed, "res-invariance-matrix", static_cast<std::uint64_t>(k));
    Rat a00(static_cast<long>(rng.int_in(-9, 9))), a01(static_cast<long>(rng.int_in(-9, 9)));
    Rat a10(static_cast<long>(rng.int_in(-9, 9))), a11(static_cast<long>(rng.int_in(-9, 9)));
    Rat det = a00 * a11 - a01 * a10;
    PolyQ h0 = g0.scaled(a00) + g1.scaled(a01);
    PolyQ h1 = g0.scaled(a10) + g1.scaled(a11);
    Rat lhs = binary_resultant(h0, h1, 0, 1, 2, 2).constant_value();
    c.expect(lhs == det * det * base,
             "combination " + std::to_string(k) + " transforms by det(A)^2");
  }
  return c.take();
}

inline AcceptanceRecord criterion_adjugate(const SampleConfig& cfg) {
  (void)cfg;
  detail::Checker c(9, "adjugate-identities",
                    "X adj(X) = det(X) I and adj(adj(X)) = det(X)^(size-2) X for the "
                    "generic 3x3 and 4x4 matrices",
                    "exact");
  for (int size : {3, 4}) {
    Matrix<PolyQ> m = detail::generic_square_matrix(size, "x");
    PolyQ det = determinant(m);
    Matrix<PolyQ> adj = adjugate(m);
    Matrix<PolyQ> prod = m * adj;
    bool laplace = true;
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        laplace = laplace && (prod.at(i, j) == (i == j ? det : PolyQ::zero(m.at(0, 0).vars())));
      }
    }
    c.expect(laplace, "size " + std::to_string(size) + ": X adj(X) = det(X) I");
    Matrix<PolyQ> adj2 = adjugate(adj);
    PolyQ scale = det.pow(static_cast<unsigned>(size - 2));
    bool doubled = true;
    for (std::size_t i = 0; i < adj2.rows(); ++i) {
      for (std::size_t j = 0; j < adj2.cols(); ++j) {
        doubled = doubled && (adj2.at(i, j) == m.at(i, j) * scale);
      }
    }
    c.expect(doubled, "size " + std::to_string(size) +
                          ": adj(adj(X)) = det(X)^" + std::to_string(size - 2) + " X");
  }
  return c.take();
}

inline AcceptanceRecord criterion_segre_alpha(const SampleConfig& cfg) {
  detail::Checker c(10, "segre-alpha",
                    "hessians of generic determinants: det H = -2 f^3 (3x3) and "
                    "-3 f^8 (4x4)",
                    "exact + schwartz-zippel");
  FamilyInstance gd2 = generic_det(2);
  PolyQ hd = determinant(hessian_matrix(gd2.f));
  c.expect(hd == gd2.f.pow(3).scaled(Rat(-2)), "3x3: det H(f) = -2 f^3 symbolically");

  FamilyInstance gd3 = generic_det(3);
  IdentityReport rep = verify_proportionality(
      make_hessian_power_input("segre-alpha-3", "det H(f) = -3 f^8 for the generic 4x4",
                               gd3.f, 8, Rat(-3), cfg),
      cfg);
  c.expect(rep.passed && !rep.convention_flag,
           "4x4: det H(f) is proportional to f^8 with the exact constant");
  if (rep.measured_constant) {
    c.expect_eq(*rep.measured_constant, std::string("-3"), "4x4 measured constant");
  }
  return c.take();
}

inline AcceptanceRecord criterion_segre_beta(const SampleConfig& cfg) {
  detail::Checker c(11, "segre-beta",
                    "hessians of symmetric determinants: det H = -16 g^2 (3x3) and "
                    "proportional to g^5 (4x4)",
                    "exact + schwartz-zippel");
  FamilyInstance sd2 = symmetric_det(2);
  PolyQ hd = determinant(hessian_matrix(sd2.f));
  c.expect(hd == sd2.f.pow(2).scaled(Rat(-16)), "3x3: det H(g) = -16 g^2 symbolically");

  FamilyInstance sd3 = symmetric_det(3);
  IdentityReport rep = verify_proportionality(
      make_hessian_power_input("segre-beta-3",
                               "det H(g) = -192 g^5 for the generic symmetric 4x4",
                               sd3.f, 5, Rat(-192), cfg),
      cfg);
  c.expect(rep.passed, "4x4: det H(g) is proportional to g^5 with one constant");
  if (rep.measured_constant) {
    c.note("4x4 measured constant = " + *rep.measured_constant +
           (rep.convention_flag ? " (normalization differs by a power of 2)" : ""));
  }
  return c.take();
}

inline AcceptanceRecord criterion_pfaffian(const SampleConfig& cfg) {
  detail::Checker c(12, "pfaffian",
                    "Pf^2 = det for skew sizes 4 and 6; det H(Pf) = 2 Pf^5 for size 6",
                    "exact + schwartz-zippel");
  for (int size : {4, 6}) {
    Matrix<PolyQ> m = detail::generic_skew_matrix(size);
    PolyQ pf = pfaffian(m);
    c.expect(pf * pf == determinant(m),
             "size " + std::to_string(size) + ": Pf^2 = det symbolically");
  }
  FamilyInstance pff = pfaffian_form(2);
  IdentityReport rep = verify_proportionality(
      make_hessian_power_input("segre-gamma-2", "det H(Pf) = 2 Pf^5 for the skew 6x6",
                               pff.f, 5, Rat(2), cfg),
      cfg);
  c.expect(rep.passed && !rep.convention_flag,
           "skew 6x6: det H(Pf) is proportional to Pf^5 with the exact constant");
  if (rep.measured_constant) {
    c.expect_eq(*rep.measured_constant, std::string("2"), "measured constant");
  }
  return c.take();
}

inline AcceptanceRecord criterion_lagrange_cauchy(const SampleConfig& cfg) {
  detail::Checker c(13, "lagrange-cauchy",
                    "Lagrange identity for n = 1, 2, 3; the quartic difference form has "
                    "nonzero hessian proportional to f^3",
                    "exact + schwartz-zippel");
  for (int n = 1; n <= 3; ++n) {
    FamilyInstance cs = cauchy_schwartz(n);
    const int len = n + 2;
    PolyQ rhs = PolyQ::zero(cs.f.vars());
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) {
        PolyQ ai = PolyQ::variable(cs.f.vars(), static_cast<std::size_t>(i), Rat(1));
        PolyQ aj = PolyQ::variable(cs.f.vars(), static_cast<std::size_t>(j), Rat(1));
        PolyQ bi = PolyQ::variable(cs.f.vars(), static_cast<std::size_t>(len + i), Rat(1));
        PolyQ bj = PolyQ::variable(cs.f.vars(), static_cast<std::size_t>(len + j), Rat(1));
        PolyQ minor = ai * bj - aj * bi;
        rhs += minor * minor;
      }
    }
    c.expect(cs.f == rhs, "n = " + std::to_string(n) +
                              ": |a|^2 |b|^2 - (a.b)^2 equals the sum of squared minors");
  }
  FamilyInstance cs1 = cauchy_schwartz(1);
  ZeroTestResult z = hessian_determinant_is_zero(cs1.f, cfg, ZeroTestMode::Probabilistic);
  c.expect(!z.is_zero, "n = 1: det H(f) is not the zero polynomial");
  IdentityReport rep = verify_proportionality(
      make_hessian_power_input("cauchy-hess-1", "det H(f) = c f^3 for the 6-variable "
                               "quartic", cs1.f, 3, std::nullopt, cfg),
      cfg);
  c.expect(rep.passed, "n = 1: det H(f) / f^3 is one constant across all samples");
  if (rep.measured_constant) {
    c.expect(*rep.measured_constant != "0", "n = 1: the constant is nonzero");
    c.note("n = 1 measured constant = " + *rep.measured_constant);
  }
  return c.take();
}

inline AcceptanceRecord criterion_dual_cayley(const SampleConfig& cfg) {
  detail::Checker c(14, "dual-cayley",
                    "minor-composition instance: gradient grid relations, vanishing "
                    "hessian, and the r = 1 reduction to the pencil",
                    "exact + schwartz-zippel");
  FamilyInstance dc = dual_cayley(parse_poly("z0*z2 - z1^2"), 2);
  IdentityReport rel = check_gradient_grid_relations(
      "dual-cayley-grid", "2x2 minors of the multiplier-block gradient vanish", dc.f,
      dc.gradient_grid);
  c.expect(rel.passed, "all 2x2 gradient grid relations hold exactly");
  ZeroTestResult z = hessian_determinant_is_zero(dc.f, cfg, ZeroTestMode::Probabilistic);
  c.expect(z.is_zero, "det H(f) vanishes at every sampled point");

  VarSetPtr zv = VarSet::make({"z1", "z2", "z3"});
  PolyQ g = parse_poly("z1^2 + z2^2 + z3^2", zv);
  FamilyInstance dc1 = dual_cayley(g, 1);
  FamilyInstance pen = pencil(g);
  std::map<std::string, std::string> rename;
  for (int j = 0; j < 3; ++j) {
    rename["a0_" + std::to_string(j)] = "x" + std::to_string(j + 1);
    rename["a1_" + std::to_string(j)] = "y" + std::to_string(j + 1);
  }
  rename["b1_1"] = "u";
  rename["b0_1"] = "v";
  c.expect(dc1.f.reindexed(pen.f.vars(), rename) == pen.f,
           "the r = 1 instance equals the pencil instance term-for-term");
  return c.take();
}

inline AcceptanceRecord criterion_slices(const SampleConfig& cfg) {
  detail::Checker c(15, "slices",
                    "tangent-hyperplane sections of the determinant, symmetric and "
                    "pfaffian forms: vanishing hessian with the predicted codimensions",
                    "sampled + exact");
  {
    FamilyInstance ds = det_slice(2);
    HessianProfile p = hessian_profile(ds.f, cfg, detail::sampled_profile_options(ds));
    c.expect_eq(p.degree, 3, "det-slice degree");
    c.expect(p.hess_is_zero, "det-slice: det H vanishes at every sampled point");
    c.expect_eq(p.generic_rank, 7, "det-slice generic rank");
    c.expect_eq(p.rank_mod_f, 6, "det-slice rank mod (f)");
    c.expect_eq(p.dual_codim_in_polar, 2, "det-slice codimension (n^2 - 2)");
  }
  {
    FamilyInstance ss = sym_slice(2);
    ProfileOptions opts;  // 5x5 with linear entries: the exact minor walk is cheap
    opts.rank_strategy = RankStrategy::Exact;
    HessianProfile p = hessian_profile(ss.f, cfg, opts);
    c.expect_eq(p.degree, 3, "sym-slice degree");
    c.expect(p.hess_is_zero, "sym-slice: det H expands to the zero polynomial");
    c.expect_eq(p.dual_codim_in_polar, 1, "sym-slice codimension ((n^2 + n - 4) / 2)");
    c.note("sym-slice ranks (exact): generic " + std::to_string(p.generic_rank) +
           ", mod (f) " + std::to_string(p.rank_mod_f));
  }
  {
    FamilyInstance ps = pf_slice(2);
    HessianProfile p = hessian_profile(ps.f, cfg, detail::sampled_profile_options(ps));
    c.expect_eq(p.degree, 3, "pf-slice degree");
    c.expect(p.hess_is_zero, "pf-slice: det H vanishes at every sampled point");
    c.expect_eq(p.dual_codim_in_polar, 4, "pf-slice codimension (2m^2 - m - 2)");
    c.note("pf-slice ranks (sampled): generic " + std::to_string(p.generic_rank) +
           ", mod (f) " + std::to_string(p.rank_mod_f));
  }
  return c.take();
}

inline AcceptanceRecord criterion_invariant_sweep(const SampleConfig& cfg) {
  detail::Checker c(16, "invariant-sweep",
                    "dimension chain dim X* < dim Z < N for vanishing-hessian instances; "
                    "profiles are invariant under random coordinate changes",
                    "sampled");
  std::vector<FamilyInstance> instances;
  instances.push_back(perazzo());
  instances.push_back(perazzo_ext(6));
  instances.push_back(p7_fermat());
  instances.push_back(p5_example());
  instances.push_back(scroll_dual(1, 2));
  instances.push_back(scroll_dual(2, 3));
  instances.push_back(scroll_dual_closed(2));
  instances.push_back(scroll_dual_closed(3));
  instances.push_back(dual_cayley(parse_poly("z0*z2 - z1^2"), 2));
  instances.push_back(generic_det(2));
  instances.push_back(generic_det(3));
  instances.push_back(symmetric_det(2));
  instances.push_back(symmetric_det(3));
  instances.push_back(pfaffian_form(2));
  instances.push_back(det_slice(2));
  instances.push_back(sym_slice(2));
  instances.push_back(pf_slice(2));
  instances.push_back(cauchy_schwartz(1));

  for (const FamilyInstance& inst : instances) {
    ProfileOptions opts = detail::sampled_profile_options(inst);
    opts.zero_mode = ZeroTestMode::Probabilistic;
    HessianProfile base = hessian_profile(inst.f, cfg, opts);
    if (base.hess_is_zero) {
      const long long n_proj = static_cast<long long>(base.n_vars) - 1;
      c.expect(base.dim_dual < base.dim_polar_image && base.dim_polar_image < n_proj,
               inst.label + ": dim X* = " + std::to_string(base.dim_dual) +
                   " < dim Z = " + std::to_string(base.dim_polar_image) +
                   " < N = " + std::to_string(n_proj));
    }
    for (std::uint64_t s = 1; s <= 3; ++s) {
      Stream rng(cfg.seed, "sweep:" + inst.label, s);
      Matrix<Rat> a = random_unimodular_change(inst.f.vars()->size(), rng);
      PolyQ g = apply_linear_change(inst.f, a);
      HessianProfile q = hessian_profile(g, cfg, opts);
      const bool same = q.hess_is_zero == base.hess_is_zero &&
                        q.generic_rank == base.generic_rank &&
                        q.rank_mod_f == base.rank_mod_f &&
                        q.dim_polar_image == base.dim_polar_image &&
                        q.dim_dual == base.dim_dual &&
                        q.dual_codim_in_polar == base.dual_codim_in_polar &&
                        q.is_cone == base.is_cone;
      c.expect(same, inst.label + ", change " + std::to_string(s) +
                         ": profile matches the base profile");
    }
  }
  return c.take();
}

inline std::vector<AcceptanceRecord> run_acceptance(const SampleConfig& cfg,
                                                    const std::vector<int>& only = {}) {
  using Criterion = std::function<AcceptanceRecord(const SampleConfig&)>;
  static const std::vector<Criterion> criteria = {
      criterion_perazzo,        criterion_perazzo_ext,
      criterion_p7_fermat,      criterion_p5_example,
      criterion_pencil_euler,   criterion_scroll_duals,
      criterion_resultant_degrees, criterion_resultant_invariance,
      criterion_adjugate,       criterion_segre_alpha,
      criterion_segre_beta,     criterion_pfaffian,
      criterion_lagrange_cauchy, criterion_dual_cayley,
      criterion_slices,         criterion_invariant_sweep,
  };
  auto wanted = [&](int index) {
    if (only.empty()) return true;
    for (int i : only) {
      if (i == index) return true;
    }
    return false;
  };
  std::vector<AcceptanceRecord> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    if (!wanted(index)) continue;
    out.push_back(criteria[i](cfg));
  }
  return out;
}

}  // namespace hesskit
