#pragma once

// Identity verification. Two routes:
//   - exact: expand both sides over Q and compare term maps;
//   - schwartz-zippel: evaluate both sides at seeded random F_p points and
//     report the probability bound for a missed disagreement.
// Evaluator-based variants exist for expressions that are cheap to evaluate
// but too large to expand (determinants of big polynomial matrices), and a
// proportionality checker measures the constant in lhs = c * rhs.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/hessian.hpp"
#include "hesskit/poly.hpp"
#include "hesskit/rng.hpp"

namespace hesskit {

struct IdentityReport {
  std::string id;
  std::string claim;
  bool passed = false;
  std::string mode;  // "exact", "schwartz-zippel" or "rational-sample"
  int trials = 0;
  long long degree_bound = -1;
  double failure_bound_log10 = -std::numeric_limits<double>::infinity();
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> measured_constant;
  // Set when a measured constant differs from the expected one by a factor
  // +-2^j, the fingerprint of a differing normalization convention.
  bool convention_flag = false;
  std::vector<std::string> notes;
};

using FpPointFn = std::function<Fp(std::span<const Fp>)>;
using RatPointFn = std::function<Rat(std::span<const Rat>)>;

inline FpPointFn make_poly_eval_fn(const PolyFp& f) {
  return [f](std::span<const Fp> pt) { return f.evaluate(pt); };
}

inline FpPointFn make_det_eval_fn(const Matrix<PolyFp>& m) {
  return [m](std::span<const Fp> pt) { return det_gauss(eval_matrix(m, pt)); };
}

inline RatPointFn make_poly_eval_fn_rat(const PolyQ& f) {
  return [f](std::span<const Rat> pt) { return f.evaluate(pt); };
}

inline RatPointFn make_det_eval_fn_rat(const Matrix<PolyQ>& m) {
  return [m](std::span<const Rat> pt) { return det_gauss(eval_matrix(m, pt)); };
}

inline IdentityReport verify_identity_exact(std::string id, std::string claim,
                                            const PolyQ& lhs, const PolyQ& rhs) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.claim = std::move(claim);
  rep.mode = "exact";
  rep.passed = lhs == rhs;
  if (!rep.passed) {
    PolyQ diff = lhs - rhs;
    rep.notes.push_back("difference has " + std::to_string(diff.num_terms()) + " terms");
  }
  return rep;
}

// Probabilistic equality of two evaluators on arity-many variables, where
// degree_bound dominates the total degree of lhs - rhs.
inline IdentityReport verify_identity_fn(std::string id, std::string claim,
                                         const FpPointFn& lhs, const FpPointFn& rhs,
                                         std::size_t arity, long long degree_bound,
                                         const SampleConfig& cfg = {}) {
  if (degree_bound >= static_cast<long long>(cfg.prime)) {
    throw Error("degree bound exceeds the sampling prime");
  }
  IdentityReport rep;
  rep.id = std::move(id);
  rep.claim = std::move(claim);
  rep.mode = "schwartz-zippel";
  rep.prime = cfg.prime;
  rep.seed = cfg.seed;
  rep.degree_bound = degree_bound;
  for (int t = 0; t < cfg.trials; ++t) {
    Stream rng(cfg.seed, "identity:" + rep.id, static_cast<std::uint64_t>(t));
    std::vector<Fp> pt = random_fp_point(arity, cfg.prime, rng);
    Fp l = lhs(pt), r = rhs(pt);
    if (!(l == r)) {
      rep.passed = false;
      rep.trials = t + 1;
      rep.notes.push_back("disagreement at trial " + std::to_string(t));
      return rep;
    }
  }
  rep.passed = true;
  rep.trials = cfg.trials;
  rep.failure_bound_log10 = detail::sz_failure_log10(degree_bound, cfg.prime, cfg.trials);
  return rep;
}

inline IdentityReport verify_identity_sz(std::string id, std::string claim,
                                         const PolyQ& lhs, const PolyQ& rhs,
                                         const SampleConfig& cfg = {}) {
  require_same_vars(lhs.vars(), rhs.vars());
  long long degree_bound =
      std::max<long long>(std::max(lhs.total_degree(), rhs.total_degree()), 0);
  PolyFp lp = reduce_mod_prime(lhs, cfg.prime);
  PolyFp rp = reduce_mod_prime(rhs, cfg.prime);
  return verify_identity_fn(std::move(id), std::move(claim), make_poly_eval_fn(lp),
                            make_poly_eval_fn(rp), lhs.vars()->size(), degree_bound, cfg);
}

namespace detail {

// c / expected == +-2^j for some integer j (including j = 0 with sign -1)?
inline std::optional<long> power_of_two_ratio(const Rat& c, const Rat& expected) {
  if (expected.is_zero() || c.is_zero()) return std::nullopt;
  Rat q = c / expected;
  mpz_class num = abs(q.raw().get_num());
  mpz_class den = q.raw().get_den();
  auto log2_exact = [](const mpz_class& z) -> std::optional<long> {
    if (z <= 0) return std::nullopt;
    std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    mpz_class probe = 1;
    probe <<= (bits - 1);
    if (probe != z) return std::nullopt;
    return static_cast<long>(bits - 1);
  };
  auto a = log2_exact(num);
  auto b = log2_exact(den);
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

}  // namespace detail

struct ProportionalityInput {
  std::string id;
  std::string claim;
  RatPointFn lhs_rat;
  RatPointFn rhs_rat;
  FpPointFn lhs_fp;
  FpPointFn rhs_fp;
  std::size_t arity = 0;
  long long degree_bound = 0;
  std::optional<Rat> expected_constant;
};

// Measures c with lhs = c * rhs: first over Q at small random integer points
// (the ratio must be the same at every point where rhs is nonzero), then
// confirms lhs = c * rhs mod p by Schwartz-Zippel sampling. If an expected
// constant is supplied and the measured one differs by a factor +-2^j, the
// report is flagged instead of failed; any other mismatch fails.
inline IdentityReport verify_proportionality(const ProportionalityInput& in,
                                             const SampleConfig& cfg = {}) {
  if (in.degree_bound >= static_cast<long long>(cfg.prime)) {
    throw Error("degree bound exceeds the sampling prime");
  }
  IdentityReport rep;
  rep.id = in.id;
  rep.claim = in.claim;
  rep.mode = "rational-sample";
  rep.prime = cfg.prime;
  rep.seed = cfg.seed;
  rep.degree_bound = in.degree_bound;

  std::optional<Rat> c;
  int successes = 0;
  const int budget = cfg.max_attempts;
  for (int t = 0; t < budget && successes < cfg.trials; ++t) {
    Stream rng(cfg.seed, "prop-q:" + in.id, static_cast<std::uint64_t>(t));
    std::vector<Rat> pt;
    pt.reserve(in.arity);
    for (std::size_t i = 0; i < in.arity; ++i) {
      pt.emplace_back(static_cast<long>(rng.int_in(-9, 9)));
    }
    Rat r = in.rhs_rat(pt);
    if (r.is_zero()) continue;
    Rat ratio = in.lhs_rat(pt) / r;
    if (!c) {
      c = ratio;
    } else if (!(*c == ratio)) {
      rep.passed = false;
      rep.notes.push_back("ratio is not constant across sample points");
      return rep;
    }
    ++successes;
  }
  if (!c) {
    rep.passed = false;
    rep.notes.push_back("rhs vanished at every sample point");
    return rep;
  }
  rep.measured_constant = c->str();
  rep.trials = successes;

  Fp cp = c->mod(cfg.prime);
  for (int t = 0; t < cfg.trials; ++t) {
    Stream rng(cfg.seed, "prop-p:" + in.id, static_cast<std::uint64_t>(t));
    std::vector<Fp> pt = random_fp_point(in.arity, cfg.prime, rng);
    Fp l = in.lhs_fp(pt);
    Fp r = in.rhs_fp(pt);
    if (!(l == cp * r)) {
      rep.passed = false;
      rep.notes.push_back("modular check disagreed at trial " + std::to_string(t));
      return rep;
    }
  }
  rep.failure_bound_log10 = detail::sz_failure_log10(in.degree_bound, cfg.prime, cfg.trials);

  rep.passed = true;
  if (in.expected_constant) {
    if (*c == *in.expected_constant) {
      rep.notes.push_back("measured constant matches the expected one");
    } else if (auto j = detail::power_of_two_ratio(*c, *in.expected_constant)) {
      rep.convention_flag = true;
      rep.notes.push_back("measured constant differs from the expected one by 2^" +
                          std::to_string(*j) + " up to sign (normalization convention)");
    } else {
      rep.passed = false;
      rep.notes.push_back("measured constant " + c->str() + " does not match expected " +
                          in.expected_constant->str());
    }
  }
  return rep;
}

// Evaluators for det H(f) = c * f^exponent, the shape of the classical
// proportionality results for determinants and pfaffians.
inline ProportionalityInput make_hessian_power_input(std::string id, std::string claim,
                                                     const PolyQ& f, unsigned exponent,
                                                     std::optional<Rat> expected,
                                                     const SampleConfig& cfg = {}) {
  auto deg = f.is_homogeneous();
  if (!deg || *deg < 2) throw Error("proportionality input needs a homogeneous form");
  ProportionalityInput in;
  in.id = std::move(id);
  in.claim = std::move(claim);
  Matrix<PolyQ> h = hessian_matrix(f);
  Matrix<PolyFp> hp = reduce_matrix_mod_prime(h, cfg.prime);
  PolyFp fp = reduce_mod_prime(f, cfg.prime);
  in.lhs_rat = make_det_eval_fn_rat(h);
  in.lhs_fp = make_det_eval_fn(hp);
  in.rhs_rat = [f, exponent](std::span<const Rat> pt) {
    return f.evaluate(pt).pow(exponent);
  };
  in.rhs_fp = [fp, exponent](std::span<const Fp> pt) {
    return fp.evaluate(pt).pow(exponent);
  };
  in.arity = f.vars()->size();
  in.degree_bound =
      std::max<long long>(static_cast<long long>(in.arity) * (*deg - 2),
                          static_cast<long long>(exponent) * *deg);
  in.expected_constant = std::move(expected);
  return in;
}

// All 2x2 minors of a rectangular grid of partial derivatives vanish; grid
// entries are variable indices into f's variable set.
inline IdentityReport check_gradient_grid_relations(
    std::string id, std::string claim, const PolyQ& f,
    const std::vector<std::vector<std::size_t>>& grid) {
  IdentityReport rep;
  rep.id = std::move(id);
  rep.claim = std::move(claim);
  rep.mode = "exact";
  if (grid.empty()) throw Error("empty gradient grid");
  const std::size_t rows = grid.size(), cols = grid[0].size();
  for (const auto& row : grid) {
    if (row.size() != cols) throw Error("ragged gradient grid");
  }
  std::vector<std::vector<PolyQ>> d(rows, std::vector<PolyQ>());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      d[i].push_back(f.partial_derivative(grid[i][j]));
    }
  }
  int checked = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = i + 1; k < rows; ++k) {
      for (std::size_t l = 0; l < cols; ++l) {
        for (std::size_t m = l + 1; m < cols; ++m) {
          PolyQ diff = d[i][l] * d[k][m] - d[i][m] * d[k][l];
          ++checked;
          if (!diff.is_zero()) {
            rep.passed = false;
            rep.notes.push_back("minor (" + std::to_string(i) + "," + std::to_string(k) +
                                ")x(" + std::to_string(l) + "," + std::to_string(m) +
                                ") does not vanish");
            return rep;
          }
        }
      }
    }
  }
  rep.passed = true;
  rep.notes.push_back(std::to_string(checked) + " minors vanish");
  return rep;
}

}  // namespace hesskit
