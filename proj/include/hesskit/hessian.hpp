#pragma once

// Hessian analysis of homogeneous polynomials: vanishing test for det H(f),
// generic rank of H(f), rank of H(f) modulo the ideal (f), the cone test, and
// the dimension bookkeeping that ties these numbers to the polar image and the
// dual variety of V(f).
//
// Ranks are certified at two levels. "Exact" results come from symbolic
// determinants and divisibility tests over Q. "Sampled" results come from
// evaluating over F_p at points drawn from seeded streams; they are lower
// bounds that are correct with overwhelming probability, and every report
// records which kind it is.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/matrix.hpp"
#include "hesskit/poly.hpp"
#include "hesskit/rng.hpp"
#include "hesskit/sampling.hpp"

namespace hesskit {

struct SampleConfig {
  std::uint64_t prime = kDefaultPrime;
  int trials = 20;        // evaluation points per probabilistic test
  std::uint64_t seed = 0;
  int sample_points = 100;  // smooth hypersurface points for sampled ranks
  int max_attempts = 400;   // point-sampling attempt budget
};

enum class Certificate { Exact, SchwartzZippel };
enum class RankMethod { Exact, Sampled };
enum class RankStrategy { Auto, Exact, Sample };
enum class ZeroTestMode { Auto, Exact, Probabilistic };

inline const char* to_string(Certificate c) {
  return c == Certificate::Exact ? "exact" : "schwartz-zippel";
}
inline const char* to_string(RankMethod m) {
  return m == RankMethod::Exact ? "exact" : "sampled";
}

template <class K>
Matrix<Polynomial<K>> hessian_matrix(const Polynomial<K>& f) {
  const std::size_t n = f.vars()->size();
  Matrix<Polynomial<K>> h(n, n, Polynomial<K>::zero(f.vars()));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial<K> fi = f.partial_derivative(i);
    for (std::size_t j = i; j < n; ++j) {
      Polynomial<K> fij = fi.partial_derivative(j);
      h.at(i, j) = fij;
      if (j != i) h.at(j, i) = std::move(fij);
    }
  }
  return h;
}

template <class K>
std::vector<Polynomial<K>> polar_gradient(const Polynomial<K>& f) {
  std::vector<Polynomial<K>> g;
  g.reserve(f.vars()->size());
  for (std::size_t i = 0; i < f.vars()->size(); ++i) {
    g.push_back(f.partial_derivative(i));
  }
  return g;
}

struct ZeroTestResult {
  bool is_zero = false;
  Certificate certificate = Certificate::Exact;
  int trials = 0;
  // log10 of the probability that a false "zero" verdict survived all trials;
  // -inf when the verdict is exact.
  double failure_bound_log10 = -std::numeric_limits<double>::infinity();
};

namespace detail {

inline long long det_degree_bound(const Matrix<PolyQ>& h) {
  // deg det <= n * max entry degree
  long long d = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      d = std::max(d, static_cast<long long>(h.at(i, j).total_degree()));
    }
  }
  return d * static_cast<long long>(h.rows());
}

inline double sz_failure_log10(long long degree_bound, std::uint64_t p, int trials) {
  if (degree_bound <= 0) return -std::numeric_limits<double>::infinity();
  return trials * (std::log10(static_cast<double>(degree_bound)) -
                   std::log10(static_cast<double>(p)));
}

}  // namespace detail

// Decides whether det H(f) is identically zero. Exact mode expands the
// symbolic determinant; probabilistic mode evaluates det H mod p at random
// points. A nonzero evaluation is an exact certificate of nonvanishing.
inline ZeroTestResult hessian_determinant_is_zero(const PolyQ& f,
                                                  const SampleConfig& cfg = {},
                                                  ZeroTestMode mode = ZeroTestMode::Auto) {
  Matrix<PolyQ> h = hessian_matrix(f);
  const std::size_t n = h.rows();
  if (mode == ZeroTestMode::Auto) {
    mode = n <= 6 ? ZeroTestMode::Exact : ZeroTestMode::Probabilistic;
  }
  ZeroTestResult res;
  if (mode == ZeroTestMode::Exact) {
    res.is_zero = determinant(h).is_zero();
    res.certificate = Certificate::Exact;
    return res;
  }
  const long long degree_bound = detail::det_degree_bound(h);
  if (degree_bound >= static_cast<long long>(cfg.prime)) {
    throw Error("degree bound exceeds the sampling prime");
  }
  Matrix<PolyFp> hp = reduce_matrix_mod_prime(h, cfg.prime);
  for (int t = 0; t < cfg.trials; ++t) {
    Stream rng(cfg.seed, "hess-zero", static_cast<std::uint64_t>(t));
    std::vector<Fp> pt = random_fp_point(n, cfg.prime, rng);
    if (!det_gauss(eval_matrix(hp, std::span<const Fp>(pt))).is_zero()) {
      res.is_zero = false;
      res.certificate = Certificate::Exact;  // a nonzero value is a witness
      res.trials = t + 1;
      return res;
    }
  }
  res.is_zero = true;
  res.certificate = Certificate::SchwartzZippel;
  res.trials = cfg.trials;
  res.failure_bound_log10 = detail::sz_failure_log10(degree_bound, cfg.prime, cfg.trials);
  return res;
}

// Rank of a polynomial matrix at a generic point: the maximum of the ranks of
// evaluations at random F_p points. Reported value is exact with overwhelming
// probability (it is always a lower bound for the true generic rank).
inline std::size_t generic_rank(const Matrix<PolyQ>& m, const SampleConfig& cfg = {}) {
  Matrix<PolyFp> mp = reduce_matrix_mod_prime(m, cfg.prime);
  std::size_t best = 0;
  const std::size_t full = std::min(m.rows(), m.cols());
  for (int t = 0; t < cfg.trials && best < full; ++t) {
    Stream rng(cfg.seed, "generic-rank", static_cast<std::uint64_t>(t));
    std::vector<Fp> pt = random_fp_point(matrix_vars(m)->size(), cfg.prime, rng);
    best = std::max(best, rank_gauss(eval_matrix(mp, std::span<const Fp>(pt))));
  }
  return best;
}

struct RankModResult {
  std::size_t rank = 0;
  RankMethod method = RankMethod::Exact;
  int points_used = 0;  // sampled mode only
};

namespace detail {

// Symmetric matrices: minor(R, C) == minor(C, R), so keep only R <= C.
inline bool is_symmetric(const Matrix<PolyQ>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m.at(i, j) == m.at(j, i))) return false;
    }
  }
  return true;
}

// True iff some k x k minor of m is not divisible by f.
inline bool level_has_nondivisible_minor(const Matrix<PolyQ>& m, const PolyQ& f,
                                         std::size_t k, bool symmetric) {
  if (k == 0) return true;  // the empty minor is 1
  std::vector<std::size_t> rows = first_combination(k);
  do {
    std::vector<std::size_t> cols = first_combination(k);
    do {
      if (symmetric &&
          std::lexicographical_compare(cols.begin(), cols.end(), rows.begin(), rows.end())) {
        continue;
      }
      PolyQ d = minor_det(m, rows, cols);
      if (d.is_zero()) continue;
      if (!divides(f, d)) return true;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return false;
}

inline int max_entry_degree(const Matrix<PolyQ>& m) {
  int d = -1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      d = std::max(d, m.at(i, j).total_degree());
    }
  }
  return d;
}

}  // namespace detail

inline constexpr std::size_t kExactRankModMaxSize = 8;
inline constexpr int kExactRankModMaxEntryDegree = 2;

// Largest k such that some k x k minor of m is nonzero modulo f, decided by
// exact divisibility tests over Q. The set of levels with a non-divisible
// minor is downward closed, so we start from the (sampled) generic rank and
// walk to the boundary; the answer does not depend on the starting guess.
inline RankModResult rank_mod_hypersurface_exact(const Matrix<PolyQ>& m, const PolyQ& f,
                                                 const SampleConfig& cfg = {}) {
  if (!m.is_square()) throw Error("matrix is not square");
  require_same_vars(m.at(0, 0).vars(), f.vars());
  if (f.is_zero()) throw Error("division by zero polynomial");
  const std::size_t n = m.rows();
  const bool symmetric = detail::is_symmetric(m);
  std::size_t k = std::min(generic_rank(m, cfg), n);
  if (k == 0) k = 1;
  if (detail::level_has_nondivisible_minor(m, f, k, symmetric)) {
    while (k < n && detail::level_has_nondivisible_minor(m, f, k + 1, symmetric)) ++k;
  } else {
    do {
      --k;
    } while (k > 0 && !detail::level_has_nondivisible_minor(m, f, k, symmetric));
  }
  return {k, RankMethod::Exact, 0};
}

// Largest evaluation rank of m over smooth F_p points of V(f). This is the
// rank of m modulo (f) with overwhelming probability. `prime` must be chosen
// so that V(f) has smooth F_p points.
inline RankModResult rank_mod_hypersurface_sampled(const Matrix<PolyQ>& m, const PolyQ& f,
                                                   const SampleConfig& cfg = {}) {
  require_same_vars(matrix_vars(m), f.vars());
  PolyFp fp = reduce_mod_prime(f, cfg.prime);
  Matrix<PolyFp> mp = reduce_matrix_mod_prime(m, cfg.prime);
  HypersurfaceSampler sampler(fp);
  std::size_t best = 0;
  const std::size_t full = std::min(m.rows(), m.cols());
  int used = 0;
  for (int t = 0; t < cfg.sample_points && best < full; ++t) {
    Stream rng(cfg.seed, "rank-mod-point", static_cast<std::uint64_t>(t));
    std::vector<Fp> pt = sampler.sample(rng, cfg.max_attempts);
    best = std::max(best, rank_gauss(eval_matrix(mp, std::span<const Fp>(pt))));
    ++used;
  }
  return {best, RankMethod::Sampled, used};
}

inline RankModResult rank_mod_hypersurface(const Matrix<PolyQ>& m, const PolyQ& f,
                                           RankStrategy strategy = RankStrategy::Auto,
                                           const SampleConfig& cfg = {}) {
  const bool exact_feasible = m.rows() <= kExactRankModMaxSize &&
                              detail::max_entry_degree(m) <= kExactRankModMaxEntryDegree;
  switch (strategy) {
    case RankStrategy::Exact:
      if (!exact_feasible) {
        throw Error(
            "exact minor search is limited to matrices of size at most 8 with entries of "
            "degree at most 2; use the sampled strategy");
      }
      return rank_mod_hypersurface_exact(m, f, cfg);
    case RankStrategy::Sample:
      return rank_mod_hypersurface_sampled(m, f, cfg);
    case RankStrategy::Auto:
    default:
      return exact_feasible ? rank_mod_hypersurface_exact(m, f, cfg)
                            : rank_mod_hypersurface_sampled(m, f, cfg);
  }
}

struct ConeResult {
  bool is_cone = false;
  // Each row is a rational vector c with sum_i c_i * df/dx_i = 0; after a
  // linear change of coordinates moving c to a basis vector, f loses that
  // variable.
  std::vector<std::vector<Rat>> kernel;
};

// V(f) is a cone iff the partial derivatives of f are linearly dependent.
inline ConeResult cone_test(const PolyQ& f) {
  const std::size_t n = f.vars()->size();
  std::vector<PolyQ> grad = polar_gradient(f);
  std::set<Exponents> monomials;
  for (const auto& g : grad) {
    for (const auto& [e, c] : g.terms()) monomials.insert(e);
  }
  ConeResult res;
  if (monomials.empty()) {  // constant f: every direction works
    res.is_cone = true;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rat> v(n, Rat(0));
      v[i] = Rat(1);
      res.kernel.push_back(std::move(v));
    }
    return res;
  }
  // rows: monomials, cols: variables; column j holds the coefficients of
  // df/dx_j, so the right kernel is the space of gradient relations.
  Matrix<Rat> coef(monomials.size(), n, Rat(0));
  std::size_t r = 0;
  for (const auto& e : monomials) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = grad[j].terms().find(e);
      if (it != grad[j].terms().end()) coef.at(r, j) = it->second;
    }
    ++r;
  }
  res.kernel = nullspace_basis(coef);
  res.is_cone = !res.kernel.empty();
  return res;
}

struct HessianProfile {
  std::size_t n_vars = 0;      // number of variables, i.e. N+1 for P^N
  int degree = 0;
  bool hess_is_zero = false;
  Certificate hess_certificate = Certificate::Exact;
  double hess_failure_bound_log10 = -std::numeric_limits<double>::infinity();
  std::size_t generic_rank = 0;
  std::size_t rank_mod_f = 0;
  RankMethod rank_mod_method = RankMethod::Exact;
  long long dim_polar_image = 0;  // generic_rank - 1
  long long dim_dual = 0;         // rank_mod_f - 2
  long long dual_codim_in_polar = 0;
  bool is_cone = false;
};

struct ProfileOptions {
  RankStrategy rank_strategy = RankStrategy::Auto;
  ZeroTestMode zero_mode = ZeroTestMode::Auto;
  // Prime for the rank-mod-f point sampling only; 0 means cfg.prime. Useful
  // when V(f) needs p = 1 mod 4 for smooth points (sums of squares).
  std::uint64_t rank_mod_prime = 0;
};

inline HessianProfile hessian_profile(const PolyQ& f, const SampleConfig& cfg = {},
                                      const ProfileOptions& opts = {}) {
  if (f.is_zero() || f.is_constant()) {
    throw Error("profile needs a nonconstant polynomial");
  }
  auto deg = f.is_homogeneous();
  if (!deg) throw Error("inhomogeneous input");
  const int d = *deg;
  if (d < 2) throw Error("profile needs degree at least 2");

  HessianProfile out;
  out.n_vars = f.vars()->size();
  out.degree = d;

  ZeroTestResult z = hessian_determinant_is_zero(f, cfg, opts.zero_mode);
  out.hess_is_zero = z.is_zero;
  out.hess_certificate = z.certificate;
  out.hess_failure_bound_log10 = z.failure_bound_log10;

  Matrix<PolyQ> h = hessian_matrix(f);
  out.generic_rank = generic_rank(h, cfg);

  SampleConfig rank_cfg = cfg;
  if (opts.rank_mod_prime != 0) rank_cfg.prime = opts.rank_mod_prime;
  RankModResult rm = rank_mod_hypersurface(h, f, opts.rank_strategy, rank_cfg);
  out.rank_mod_f = rm.rank;
  out.rank_mod_method = rm.method;

  out.dim_polar_image = static_cast<long long>(out.generic_rank) - 1;
  out.dim_dual = static_cast<long long>(out.rank_mod_f) - 2;
  out.dual_codim_in_polar = out.dim_polar_image - out.dim_dual;
  out.is_cone = cone_test(f).is_cone;
  return out;
}

}  // namespace hesskit
