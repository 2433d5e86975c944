#pragma once

// Random points on hypersurfaces over F_p: draw a random affine line, restrict
// f to it, extract the roots of the resulting univariate polynomial, and keep
// points where the gradient does not vanish (smooth points of V(f)). Also:
// random invertible rational matrices and linear changes of coordinates.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/fp_univariate.hpp"
#include "hesskit/matrix.hpp"
#include "hesskit/poly.hpp"
#include "hesskit/rng.hpp"

namespace hesskit {

inline std::vector<Fp> random_fp_point(std::size_t n, std::uint64_t p, Stream& rng) {
  std::vector<Fp> pt;
  pt.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pt.emplace_back(rng.below(p), p);
  return pt;
}

// f(P + x Q) as a univariate polynomial in x.
inline FpUni restrict_to_line(const PolyFp& f, std::span<const std::uint64_t> pbase,
                              std::span<const std::uint64_t> dir, std::uint64_t p) {
  const std::size_t n = f.vars()->size();
  if (pbase.size() != n || dir.size() != n) throw Error("point length mismatch");
  // memoized powers of (pbase_i + dir_i x)
  std::vector<std::vector<FpUni>> pows(n);
  auto power_of = [&](std::size_t i, int e) -> const FpUni& {
    auto& tab = pows[i];
    if (tab.empty()) tab.push_back(FpUni::of(p, {pbase[i], dir[i]}));
    while (static_cast<int>(tab.size()) < e) tab.push_back(uni_mul(tab.back(), tab[0]));
    return tab[static_cast<std::size_t>(e - 1)];
  };
  FpUni acc = FpUni::zero(p);
  for (const auto& [e, c] : f.terms()) {
    FpUni term = FpUni::of(p, {c.value()});
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i]) term = uni_mul(term, power_of(i, e[i]));
    }
    acc = uni_add(acc, term);
  }
  return acc;
}

class HypersurfaceSampler {
 public:
  explicit HypersurfaceSampler(PolyFp f) : f_(std::move(f)) {
    if (f_.is_zero() || f_.is_constant()) {
      throw Error("hypersurface sampling needs a nonconstant polynomial");
    }
    p_ = f_.exemplar().modulus();
    for (std::size_t i = 0; i < f_.vars()->size(); ++i) {
      grad_.push_back(f_.partial_derivative(i));
    }
  }

  std::uint64_t modulus() const { return p_; }

  // One smooth F_p point of V(f); throws after the attempt budget.
  std::vector<Fp> sample(Stream& rng, int max_attempts = 400) const {
    const std::size_t n = f_.vars()->size();
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
      std::vector<std::uint64_t> base(n), dir(n);
      bool dir_nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        base[i] = rng.below(p_);
        dir[i] = rng.below(p_);
        dir_nonzero = dir_nonzero || dir[i] != 0;
      }
      if (!dir_nonzero) continue;
      FpUni g = restrict_to_line(f_, base, dir, p_);
      std::vector<std::uint64_t> ts;
      if (g.is_zero()) {
        ts.push_back(rng.below(p_));  // the whole line lies on V(f)
      } else {
        ts = roots_in_fp(g, rng);
      }
      if (ts.empty()) continue;
      const std::size_t offset = ts.size() == 1 ? 0 : rng.below(ts.size());
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const std::uint64_t t = ts[(k + offset) % ts.size()];
        std::vector<Fp> pt;
        pt.reserve(n);
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i) {
          Fp x = Fp(base[i], p_) + Fp(dir[i], p_) * Fp(t, p_);
          all_zero = all_zero && x.is_zero();
          pt.push_back(x);
        }
        if (all_zero) continue;
        if (!f_.evaluate(pt).is_zero()) continue;
        bool smooth = false;
        for (const auto& gi : grad_) {
          if (!gi.evaluate(pt).is_zero()) {
            smooth = true;
            break;
          }
        }
        if (smooth) return pt;
      }
    }
    throw Error("no smooth point found on the hypersurface within the attempt budget");
  }

 private:
  PolyFp f_;
  std::vector<PolyFp> grad_;
  std::uint64_t p_ = 0;
};

inline std::vector<Fp> sample_point_on_hypersurface(const PolyFp& f, Stream& rng,
                                                    int max_attempts = 400) {
  return HypersurfaceSampler(f).sample(rng, max_attempts);
}

// Random invertible matrix with small integer entries (for coordinate changes).
inline Matrix<Rat> random_invertible_rat_matrix(std::size_t n, Stream& rng,
                                                long bound = 3) {
  for (int tries = 0; tries < 256; ++tries) {
    Matrix<Rat> m(n, n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) = Rat(static_cast<long>(rng.int_in(-bound, bound)));
      }
    }
    if (!det_gauss(m).is_zero()) return m;
  }
  throw Error("failed to draw an invertible matrix");
}

// Random unimodular matrix: a permutation composed with elementary shears
// (row_i += c * row_j). Substituting such a change keeps sparse polynomials
// manageable, unlike a dense random matrix.
inline Matrix<Rat> random_unimodular_change(std::size_t n, Stream& rng,
                                            std::size_t shears = 0) {
  if (n == 0) throw Error("empty matrix");
  if (shears == 0) shears = n;
  Matrix<Rat> m(n, n, Rat(0));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  for (std::size_t i = 0; i < n; ++i) m.at(i, perm[i]) = Rat(1);
  for (std::size_t k = 0; k < shears && n > 1; ++k) {
    std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    long c = rng.int_in(1, 3) * (rng.below(2) == 0 ? 1 : -1);
    for (std::size_t col = 0; col < n; ++col) {
      m.at(i, col) += Rat(c) * m.at(j, col);
    }
  }
  return m;
}

// f(A x): substitute x_i -> sum_j A[i][j] x_j.
inline PolyQ apply_linear_change(const PolyQ& f, const Matrix<Rat>& a) {
  const std::size_t n = f.vars()->size();
  if (a.rows() != n || a.cols() != n) throw Error("matrix shape mismatch");
  std::map<std::size_t, PolyQ> bindings;
  for (std::size_t i = 0; i < n; ++i) {
    PolyQ image = PolyQ::zero(f.vars());
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j).is_zero()) continue;
      image += PolyQ::variable(f.vars(), j, a.at(i, j));
    }
    bindings.emplace(i, std::move(image));
  }
  return f.substitute(bindings, f.vars());
}

}  // namespace hesskit
