#pragma once

// Named generators for hypersurface families with interesting hessian
// behavior, each carrying the polynomial, its variable-block structure, the
// profile fields the construction predicts, and the identity checks it is
// supposed to satisfy.
//
// Variable naming is fixed per family so instances are byte-reproducible:
//   pencil            u, v, x1..xn, y1..yn
//   matrix entries    x{i}_{j} row-major (generic), s{i}_{j} with i <= j
//                     (symmetric), a{i}_{j} with i < j (skew)
//   dual-cayley       a{i}_{j} for the multiplier block, b{i}_{j} for the
//                     minor block
//   scrolls           w0..wa and z0..zb coefficient variables
// All conventions keep names in ASCII order, so parsing a formatted instance
// with inferred variables reproduces it exactly. Index values stay below ten
// for the same reason; constructors reject larger parameters.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/hessian.hpp"
#include "hesskit/matrix.hpp"
#include "hesskit/poly.hpp"
#include "hesskit/poly_io.hpp"
#include "hesskit/resultant.hpp"

namespace hesskit {

struct ExpectedProfile {
  int degree = -1;
  std::optional<bool> hess_is_zero;
  std::optional<bool> is_cone;
  std::optional<std::size_t> generic_rank;
  std::optional<std::size_t> rank_mod_f;
  std::optional<long long> dual_codim_in_polar;
};

struct FamilyInstance {
  std::string family_id;
  std::string label;
  std::map<std::string, std::string> params;
  PolyQ f = PolyQ::zero(VarSet::make({"x"}));
  // Variable indices arranged so that the matching partial derivatives factor
  // through a common map; every 2x2 minor of this gradient grid vanishes.
  std::vector<std::vector<std::size_t>> gradient_grid;
  ExpectedProfile expected;
  std::vector<std::string> checks;
  // 0 means the caller's default; sums-of-squares loci need p = 1 mod 4 for
  // the point sampler to find smooth points.
  std::uint64_t preferred_sampling_prime = 0;
};

namespace detail {

inline std::string idx_name(const std::string& prefix, int i, int j) {
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

inline void check_index_range(int top) {
  if (top > 9) throw Error("parameter too large for the fixed naming scheme");
}

inline Matrix<PolyQ> generic_square_matrix(int size, const std::string& prefix,
                                           VarSetPtr* vars_out = nullptr) {
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) names.push_back(idx_name(prefix, i, j));
  }
  VarSetPtr vars = VarSet::make(names);
  Matrix<PolyQ> m(static_cast<std::size_t>(size), static_cast<std::size_t>(size),
                  PolyQ::zero(vars));
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = PolyQ::variable(
          vars, static_cast<std::size_t>(i * size + j), Rat(1));
    }
  }
  if (vars_out) *vars_out = vars;
  return m;
}

inline Matrix<PolyQ> generic_skew_matrix(int size) {
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) names.push_back(idx_name("a", i, j));
  }
  VarSetPtr vars = VarSet::make(names);
  Matrix<PolyQ> m(static_cast<std::size_t>(size), static_cast<std::size_t>(size),
                  PolyQ::zero(vars));
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      PolyQ e = PolyQ::variable(vars, vars->index_or_throw(idx_name("a", i, j)), Rat(1));
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e;
      m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -e;
    }
  }
  return m;
}

inline std::string join_params(const std::map<std::string, std::string>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v;
  }
  return out;
}

inline void finish_label(FamilyInstance& inst) {
  inst.label = inst.family_id;
  if (!inst.params.empty()) inst.label += "(" + join_params(inst.params) + ")";
}

inline void validate_inner_polynomial(const PolyQ& g) {
  if (g.is_zero() || g.is_constant()) throw Error("g must be a nonconstant polynomial");
  auto deg = g.is_homogeneous();
  if (!deg) throw Error("g must be homogeneous");
  if (*deg < 2) throw Error("g must have degree at least 2");
  if (g.vars()->size() < 2) throw Error("g needs at least 2 variables");
  ConeResult cone = cone_test(g);
  if (cone.is_cone) {
    std::string witness;
    for (const auto& c : cone.kernel.front()) {
      if (!witness.empty()) witness += ", ";
      witness += c.str();
    }
    throw Error("g is a cone (gradient relation with coefficients " + witness + ")");
  }
}

}  // namespace detail

// Cubic threefold in P^4 with vanishing hessian that is not a cone.
inline FamilyInstance perazzo() {
  FamilyInstance inst;
  inst.family_id = "perazzo";
  VarSetPtr vars = VarSet::make({"x0", "x1", "x2", "x3", "x4"});
  inst.f = parse_poly("x0*x3^2 + x1*x3*x4 + x2*x4^2", vars);
  inst.expected.degree = 3;
  inst.expected.hess_is_zero = true;
  inst.expected.is_cone = false;
  detail::finish_label(inst);
  return inst;
}

// The same cubic with cube terms appended, in P^N for N >= 5.
inline FamilyInstance perazzo_ext(int n_proj) {
  if (n_proj < 5) throw Error("perazzo-ext needs N >= 5");
  detail::check_index_range(n_proj);
  FamilyInstance inst;
  inst.family_id = "perazzo-ext";
  inst.params["n"] = std::to_string(n_proj);
  std::vector<std::string> names;
  for (int i = 0; i <= n_proj; ++i) names.push_back("x" + std::to_string(i));
  VarSetPtr vars = VarSet::make(names);
  PolyQ f = parse_poly("x0*x3^2 + x1*x3*x4 + x2*x4^2", vars);
  for (int i = 5; i <= n_proj; ++i) {
    f += PolyQ::variable(vars, static_cast<std::size_t>(i), Rat(1)).pow(3);
  }
  inst.f = std::move(f);
  inst.expected.degree = 3;
  inst.expected.hess_is_zero = true;
  inst.expected.is_cone = false;
  detail::finish_label(inst);
  return inst;
}

// f(u, v, x, y) = g(u x1 - v y1, ..., u xn - v yn): a hypersurface in P^{2n+1}
// whose partial derivatives are algebraically dependent, hence hess = 0.
inline FamilyInstance pencil(const PolyQ& g, std::string family_id = "pencil") {
  detail::validate_inner_polynomial(g);
  const std::size_t n = g.vars()->size();
  detail::check_index_range(static_cast<int>(n));
  FamilyInstance inst;
  inst.family_id = std::move(family_id);
  if (inst.family_id == "pencil") inst.params["g"] = format_poly(g);

  std::vector<std::string> names = {"u", "v"};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  VarSetPtr vars = VarSet::make(names);

  PolyQ u = PolyQ::variable(vars, 0, Rat(1));
  PolyQ v = PolyQ::variable(vars, 1, Rat(1));
  std::map<std::size_t, PolyQ> bindings;
  inst.gradient_grid.assign(2, {});
  for (std::size_t i = 0; i < n; ++i) {
    PolyQ x = PolyQ::variable(vars, 2 + i, Rat(1));
    PolyQ y = PolyQ::variable(vars, 2 + n + i, Rat(1));
    bindings.emplace(i, u * x - v * y);
    inst.gradient_grid[0].push_back(2 + i);
    inst.gradient_grid[1].push_back(2 + n + i);
  }
  inst.f = g.substitute(bindings, vars);
  inst.expected.degree = 2 * *g.is_homogeneous();
  inst.expected.hess_is_zero = true;
  inst.checks = {"pencil-grid", "pencil-euler"};
  inst.preferred_sampling_prime = kPrimeOneMod4;
  detail::finish_label(inst);
  return inst;
}

// The pencil construction applied to the Fermat conic z1^2 + z2^2 + z3^2: a
// quartic in P^7 whose polar image has dimension 5 and whose dual has
// dimension 3.
inline FamilyInstance p7_fermat() {
  VarSetPtr zv = VarSet::make({"z1", "z2", "z3"});
  PolyQ g = parse_poly("z1^2 + z2^2 + z3^2", zv);
  FamilyInstance inst = pencil(g, "p7-fermat");
  inst.expected.generic_rank = 6;
  inst.expected.rank_mod_f = 5;
  inst.expected.dual_codim_in_polar = 2;
  detail::finish_label(inst);
  return inst;
}

// Quartic in P^5 with vanishing hessian whose polar image is the cone over a
// quadric surface: (x1 u - y1 v)^2 + (x2 u - y2 v)^2 + u^4.
inline FamilyInstance p5_example() {
  FamilyInstance inst;
  inst.family_id = "p5-example";
  VarSetPtr vars = VarSet::make({"u", "v", "x1", "x2", "y1", "y2"});
  PolyQ u = PolyQ::variable(vars, 0, Rat(1));
  PolyQ v = PolyQ::variable(vars, 1, Rat(1));
  PolyQ x1 = PolyQ::variable(vars, 2, Rat(1));
  PolyQ x2 = PolyQ::variable(vars, 3, Rat(1));
  PolyQ y1 = PolyQ::variable(vars, 4, Rat(1));
  PolyQ y2 = PolyQ::variable(vars, 5, Rat(1));
  PolyQ a = u * x1 - v * y1;
  PolyQ b = u * x2 - v * y2;
  inst.f = a * a + b * b + u.pow(4);
  inst.gradient_grid = {{2, 3}, {4, 5}};
  inst.expected.degree = 4;
  inst.expected.hess_is_zero = true;
  inst.expected.is_cone = false;
  inst.expected.generic_rank = 5;
  inst.checks = {"p5-relation"};
  inst.preferred_sampling_prime = kPrimeOneMod4;
  detail::finish_label(inst);
  return inst;
}

// Composition of g with the maximal minors of a generic (r+1) x (N+1) matrix
// [A | B]: with C_i the signed r x r minors of the B block, the forms
// B_j = sum_i a{i}_{j} C_i feed g, and f = g(B_0, ..., B_{N-r}) has degree
// deg(g) * (r+1) and vanishing hessian. r = 1 reproduces the pencil family
// after renaming a0_j -> x_{j+1}, a1_j -> y_{j+1}, b1_1 -> u, b0_1 -> v.
inline FamilyInstance dual_cayley(const PolyQ& g, int r) {
  if (r < 1) throw Error("dual-cayley needs r >= 1");
  detail::validate_inner_polynomial(g);
  const int cols_a = static_cast<int>(g.vars()->size());  // N - r + 1
  detail::check_index_range(cols_a - 1);
  detail::check_index_range(r + 1);
  FamilyInstance inst;
  inst.family_id = "dual-cayley";
  inst.params["g"] = format_poly(g);
  inst.params["r"] = std::to_string(r);

  std::vector<std::string> names;
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j < cols_a; ++j) names.push_back(detail::idx_name("a", i, j));
  }
  for (int i = 0; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) names.push_back(detail::idx_name("b", i, j));
  }
  VarSetPtr vars = VarSet::make(names);
  auto a_at = [&](int i, int j) {
    return vars->index_or_throw(detail::idx_name("a", i, j));
  };
  auto b_at = [&](int i, int j) {
    return vars->index_or_throw(detail::idx_name("b", i, j));
  };

  // B block as an (r+1) x r polynomial matrix
  Matrix<PolyQ> bmat(static_cast<std::size_t>(r + 1), static_cast<std::size_t>(r),
                     PolyQ::zero(vars));
  for (int i = 0; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      bmat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) =
          PolyQ::variable(vars, b_at(i, j), Rat(1));
    }
  }
  // C_i = (-1)^i det(B with row i removed)
  std::vector<PolyQ> cmin;
  for (int i = 0; i <= r; ++i) {
    std::vector<std::size_t> rows;
    for (int k = 0; k <= r; ++k) {
      if (k != i) rows.push_back(static_cast<std::size_t>(k));
    }
    std::vector<std::size_t> cols(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) cols[static_cast<std::size_t>(k)] = k;
    PolyQ d = minor_det(bmat, rows, cols);
    cmin.push_back(i % 2 == 0 ? d : -d);
  }
  std::map<std::size_t, PolyQ> bindings;
  for (int j = 0; j < cols_a; ++j) {
    PolyQ bj = PolyQ::zero(vars);
    for (int i = 0; i <= r; ++i) {
      bj += PolyQ::variable(vars, a_at(i, j), Rat(1)) * cmin[static_cast<std::size_t>(i)];
    }
    bindings.emplace(static_cast<std::size_t>(j), std::move(bj));
  }
  inst.f = g.substitute(bindings, vars);

  inst.gradient_grid.assign(static_cast<std::size_t>(r + 1), {});
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j < cols_a; ++j) {
      inst.gradient_grid[static_cast<std::size_t>(i)].push_back(a_at(i, j));
    }
  }
  inst.expected.degree = *g.is_homogeneous() * (r + 1);
  inst.expected.hess_is_zero = true;
  inst.checks = {"dual-cayley-grid"};
  detail::finish_label(inst);
  return inst;
}

// Resultant of the generic binary forms of degrees a and b, in the coefficient
// variables w0..wa and z0..zb: the equation of the variety of pairs with a
// common root, of total degree a+b.
inline FamilyInstance scroll_dual(int a, int b) {
  if (a < 1 || b < a) throw Error("scroll-dual needs 1 <= a <= b");
  detail::check_index_range(b);
  FamilyInstance inst;
  inst.family_id = "scroll-dual";
  inst.params["a"] = std::to_string(a);
  inst.params["b"] = std::to_string(b);

  std::vector<std::string> names = {"s", "t"};
  for (int i = 0; i <= a; ++i) names.push_back("w" + std::to_string(i));
  for (int i = 0; i <= b; ++i) names.push_back("z" + std::to_string(i));
  VarSetPtr work = VarSet::make(names);
  PolyQ s = PolyQ::variable(work, 0, Rat(1));
  PolyQ t = PolyQ::variable(work, 1, Rat(1));
  PolyQ fa = PolyQ::zero(work);
  for (int i = 0; i <= a; ++i) {
    fa += PolyQ::variable(work, static_cast<std::size_t>(2 + i), Rat(1)) *
          s.pow(static_cast<unsigned>(a - i)) * t.pow(static_cast<unsigned>(i));
  }
  PolyQ fb = PolyQ::zero(work);
  for (int i = 0; i <= b; ++i) {
    fb += PolyQ::variable(work, static_cast<std::size_t>(3 + a + i), Rat(1)) *
          s.pow(static_cast<unsigned>(b - i)) * t.pow(static_cast<unsigned>(i));
  }
  PolyQ res = binary_resultant(fa, fb, 0, 1, a, b);

  VarSetPtr vars = VarSet::make(std::vector<std::string>(names.begin() + 2, names.end()));
  inst.f = res.reindexed(vars);
  inst.expected.degree = a + b;
  detail::finish_label(inst);
  return inst;
}

// Closed form of the degree-(1, b) scroll dual: sum_i (-w1)^(b-i) w0^i z_i,
// obtained by evaluating the generic degree-b form at the root (-w1 : w0) of
// the generic linear form. Equals scroll_dual(1, b) up to one global sign.
inline FamilyInstance scroll_dual_closed(int b) {
  if (b < 1) throw Error("scroll-dual-closed needs b >= 1");
  detail::check_index_range(b);
  FamilyInstance inst;
  inst.family_id = "scroll-dual-closed";
  inst.params["b"] = std::to_string(b);
  std::vector<std::string> names = {"w0", "w1"};
  for (int i = 0; i <= b; ++i) names.push_back("z" + std::to_string(i));
  VarSetPtr vars = VarSet::make(names);
  PolyQ w0 = PolyQ::variable(vars, 0, Rat(1));
  PolyQ neg_w1 = -PolyQ::variable(vars, 1, Rat(1));
  PolyQ f = PolyQ::zero(vars);
  for (int i = 0; i <= b; ++i) {
    f += neg_w1.pow(static_cast<unsigned>(b - i)) * w0.pow(static_cast<unsigned>(i)) *
         PolyQ::variable(vars, static_cast<std::size_t>(2 + i), Rat(1));
  }
  inst.f = std::move(f);
  inst.expected.degree = b + 1;
  if (b >= 2) {
    inst.expected.hess_is_zero = true;
    inst.expected.is_cone = false;
    inst.checks = {"scroll-match"};
  }
  detail::finish_label(inst);
  return inst;
}

// det of the generic (n+1) x (n+1) matrix in its n^2 + 2n + 1 entries.
inline FamilyInstance generic_det(int n) {
  if (n < 2) throw Error("generic-det needs n >= 2");
  detail::check_index_range(n);
  FamilyInstance inst;
  inst.family_id = "generic-det";
  inst.params["n"] = std::to_string(n);
  const std::size_t sz = static_cast<std::size_t>(n + 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) {
      names.push_back(detail::idx_name("x", static_cast<int>(i), static_cast<int>(j)));
    }
  }
  VarSetPtr vars = VarSet::make(names);
  Matrix<PolyQ> m(sz, sz, PolyQ::zero(vars));
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) {
      m.at(i, j) = PolyQ::variable(vars, i * sz + j, Rat(1));
    }
  }
  inst.f = determinant(m);
  inst.expected.degree = n + 1;
  inst.expected.hess_is_zero = false;
  inst.checks = {"segre-alpha"};
  detail::finish_label(inst);
  return inst;
}

// det of the generic symmetric (n+1) x (n+1) matrix in its upper entries.
inline FamilyInstance symmetric_det(int n) {
  if (n < 2) throw Error("symmetric-det needs n >= 2");
  detail::check_index_range(n);
  FamilyInstance inst;
  inst.family_id = "symmetric-det";
  inst.params["n"] = std::to_string(n);
  const int sz = n + 1;
  std::vector<std::string> names;
  for (int i = 0; i < sz; ++i) {
    for (int j = i; j < sz; ++j) names.push_back(detail::idx_name("s", i, j));
  }
  VarSetPtr vars = VarSet::make(names);
  Matrix<PolyQ> m(static_cast<std::size_t>(sz), static_cast<std::size_t>(sz),
                  PolyQ::zero(vars));
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      std::size_t idx =
          vars->index_or_throw(detail::idx_name("s", std::min(i, j), std::max(i, j)));
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          PolyQ::variable(vars, idx, Rat(1));
    }
  }
  inst.f = determinant(m);
  inst.expected.degree = n + 1;
  inst.expected.hess_is_zero = false;
  inst.checks = {"segre-beta"};
  detail::finish_label(inst);
  return inst;
}

// Pfaffian of the generic skew (2m+2) x (2m+2) matrix in its above-diagonal
// entries; its square is the determinant.
inline FamilyInstance pfaffian_form(int m) {
  if (m < 2) throw Error("pfaffian-form needs m >= 2");
  const int sz = 2 * m + 2;
  detail::check_index_range(sz - 1);
  FamilyInstance inst;
  inst.family_id = "pfaffian-form";
  inst.params["m"] = std::to_string(m);
  std::vector<std::string> names;
  for (int i = 0; i < sz; ++i) {
    for (int j = i + 1; j < sz; ++j) names.push_back(detail::idx_name("a", i, j));
  }
  VarSetPtr vars = VarSet::make(names);
  Matrix<PolyQ> m0(static_cast<std::size_t>(sz), static_cast<std::size_t>(sz),
                   PolyQ::zero(vars));
  for (int i = 0; i < sz; ++i) {
    for (int j = i + 1; j < sz; ++j) {
      PolyQ e = PolyQ::variable(vars, vars->index_or_throw(detail::idx_name("a", i, j)),
                                Rat(1));
      m0.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e;
      m0.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -e;
    }
  }
  inst.f = pfaffian(m0);
  inst.expected.degree = m + 1;
  inst.expected.hess_is_zero = false;
  inst.checks = {"segre-gamma", "pf-square"};
  detail::finish_label(inst);
  return inst;
}

namespace detail {

// Drops one variable from a family polynomial (sets it to zero) and rebuilds
// the instance over the smaller variable set.
inline PolyQ drop_variable(const PolyQ& f, const std::string& victim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < f.vars()->size(); ++i) {
    if (f.vars()->name(i) != victim) names.push_back(f.vars()->name(i));
  }
  VarSetPtr smaller = VarSet::make(names);
  std::size_t vi = f.vars()->index_or_throw(victim);
  PolyQ out = PolyQ::zero(smaller);
  for (const auto& [e, c] : f.terms()) {
    if (e[vi] != 0) continue;
    Exponents d;
    d.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != vi) d.push_back(e[i]);
    }
    out.add_term(std::move(d), c);
  }
  return out;
}

}  // namespace detail

// Tangent-hyperplane section of the generic determinant: x{n}_{n} = 0. The
// section has vanishing hessian and its dual sits in codimension n^2 - 2
// inside the polar image.
inline FamilyInstance det_slice(int n) {
  FamilyInstance base = generic_det(n);
  FamilyInstance inst;
  inst.family_id = "det-slice";
  inst.params["n"] = std::to_string(n);
  inst.f = detail::drop_variable(base.f, detail::idx_name("x", n, n));
  inst.expected.degree = n + 1;
  inst.expected.hess_is_zero = true;
  inst.expected.dual_codim_in_polar = static_cast<long long>(n) * n - 2;
  detail::finish_label(inst);
  return inst;
}

// Symmetric analogue: s{n}_{n} = 0, codimension (n^2 + n - 4) / 2.
inline FamilyInstance sym_slice(int n) {
  FamilyInstance base = symmetric_det(n);
  FamilyInstance inst;
  inst.family_id = "sym-slice";
  inst.params["n"] = std::to_string(n);
  inst.f = detail::drop_variable(base.f, detail::idx_name("s", n, n));
  inst.expected.degree = n + 1;
  inst.expected.hess_is_zero = true;
  inst.expected.dual_codim_in_polar = (static_cast<long long>(n) * n + n - 4) / 2;
  detail::finish_label(inst);
  return inst;
}

// Pfaffian analogue: a{2m}_{2m+1} = 0, codimension 2m^2 - m - 2.
inline FamilyInstance pf_slice(int m) {
  FamilyInstance base = pfaffian_form(m);
  FamilyInstance inst;
  inst.family_id = "pf-slice";
  inst.params["m"] = std::to_string(m);
  inst.f = detail::drop_variable(base.f, detail::idx_name("a", 2 * m, 2 * m + 1));
  inst.expected.degree = m + 1;
  inst.expected.hess_is_zero = true;
  inst.expected.dual_codim_in_polar = 2 * static_cast<long long>(m) * m - m - 2;
  detail::finish_label(inst);
  return inst;
}

// |a|^2 |b|^2 - (a . b)^2 for vectors of length n+2: a quartic with nonzero
// hessian proportional to f^3, equal to the sum of the squared 2x2 minors of
// [a; b] by the Lagrange identity.
inline FamilyInstance cauchy_schwartz(int n) {
  if (n < 1) throw Error("cauchy-schwartz needs n >= 1");
  detail::check_index_range(n + 1);
  FamilyInstance inst;
  inst.family_id = "cauchy-schwartz";
  inst.params["n"] = std::to_string(n);
  const int len = n + 2;
  std::vector<std::string> names;
  for (int i = 0; i < len; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i < len; ++i) names.push_back("b" + std::to_string(i));
  VarSetPtr vars = VarSet::make(names);
  PolyQ na = PolyQ::zero(vars), nb = PolyQ::zero(vars), dot = PolyQ::zero(vars);
  for (int i = 0; i < len; ++i) {
    PolyQ ai = PolyQ::variable(vars, static_cast<std::size_t>(i), Rat(1));
    PolyQ bi = PolyQ::variable(vars, static_cast<std::size_t>(len + i), Rat(1));
    na += ai * ai;
    nb += bi * bi;
    dot += ai * bi;
  }
  inst.f = na * nb - dot * dot;
  inst.expected.degree = 4;
  inst.expected.hess_is_zero = false;
  inst.checks = {"lagrange", "cauchy-hess"};
  inst.preferred_sampling_prime = kPrimeOneMod4;
  detail::finish_label(inst);
  return inst;
}

struct FamilyDescriptor {
  std::string id;
  std::string summary;
  std::vector<std::string> params;  // "name=default" entries
};

inline const std::vector<FamilyDescriptor>& family_catalog() {
  static const std::vector<FamilyDescriptor> catalog = {
      {"perazzo", "cubic in P^4 with vanishing hessian, not a cone", {}},
      {"perazzo-ext", "the cubic extended to P^n by cube terms", {"n=6"}},
      {"pencil", "g(u x1 - v y1, ..., u xn - v yn)", {"g=z1^2 + z2^2 + z3^2"}},
      {"p7-fermat", "the pencil instance for the Fermat conic, in P^7", {}},
      {"p5-example", "quartic in P^5 with one quadric gradient relation", {}},
      {"dual-cayley", "g composed with minors of a generic (r+1) x (N+1) matrix",
       {"g=z0*z2 - z1^2", "r=2"}},
      {"scroll-dual", "resultant of generic binary forms of degrees a and b",
       {"a=1", "b=2"}},
      {"scroll-dual-closed", "closed form of the (1, b) scroll dual", {"b=2"}},
      {"generic-det", "determinant of the generic (n+1) x (n+1) matrix", {"n=2"}},
      {"symmetric-det", "determinant of the generic symmetric matrix", {"n=2"}},
      {"pfaffian-form", "pfaffian of the generic skew (2m+2) x (2m+2) matrix", {"m=2"}},
      {"det-slice", "generic determinant with x{n}_{n} = 0", {"n=2"}},
      {"sym-slice", "symmetric determinant with s{n}_{n} = 0", {"n=2"}},
      {"pf-slice", "pfaffian with a{2m}_{2m+1} = 0", {"m=2"}},
      {"cauchy-schwartz", "|a|^2 |b|^2 - (a . b)^2 in 2n+4 variables", {"n=1"}},
  };
  return catalog;
}

// Builds an instance from string parameters (CLI surface). Unknown ids and
// malformed parameters raise Error.
inline FamilyInstance build_family(const std::string& id,
                                   const std::map<std::string, std::string>& params) {
  auto get_int = [&](const std::string& key, int fallback) {
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
  };
  auto get_poly = [&](const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    return parse_poly(it == params.end() ? fallback : it->second);
  };
  auto reject_unknown = [&](std::initializer_list<const char*> known) {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (const char* name : known) ok = ok || k == name;
      if (!ok) throw Error("family '" + id + "' does not take parameter '" + k + "'");
    }
  };

  if (id == "perazzo") {
    reject_unknown({});
    return perazzo();
  }
  if (id == "perazzo-ext") {
    reject_unknown({"n"});
    return perazzo_ext(get_int("n", 6));
  }
  if (id == "pencil") {
    reject_unknown({"g"});
    return pencil(get_poly("g", "z1^2 + z2^2 + z3^2"));
  }
  if (id == "p7-fermat") {
    reject_unknown({});
    return p7_fermat();
  }
  if (id == "p5-example") {
    reject_unknown({});
    return p5_example();
  }
  if (id == "dual-cayley") {
    reject_unknown({"g", "r"});
    return dual_cayley(get_poly("g", "z0*z2 - z1^2"), get_int("r", 2));
  }
  if (id == "scroll-dual") {
    reject_unknown({"a", "b"});
    return scroll_dual(get_int("a", 1), get_int("b", 2));
  }
  if (id == "scroll-dual-closed") {
    reject_unknown({"b"});
    return scroll_dual_closed(get_int("b", 2));
  }
  if (id == "generic-det") {
    reject_unknown({"n"});
    return generic_det(get_int("n", 2));
  }
  if (id == "symmetric-det") {
    reject_unknown({"n"});
    return symmetric_det(get_int("n", 2));
  }
  if (id == "pfaffian-form") {
    reject_unknown({"m"});
    return pfaffian_form(get_int("m", 2));
  }
  if (id == "det-slice") {
    reject_unknown({"n"});
    return det_slice(get_int("n", 2));
  }
  if (id == "sym-slice") {
    reject_unknown({"n"});
    return sym_slice(get_int("n", 2));
  }
  if (id == "pf-slice") {
    reject_unknown({"m"});
    return pf_slice(get_int("m", 2));
  }
  if (id == "cauchy-schwartz") {
    reject_unknown({"n"});
    return cauchy_schwartz(get_int("n", 1));
  }
  throw Error("unknown family '" + id + "'");
}

}  // namespace hesskit
