#pragma once

// Dense univariate polynomials over F_p and root extraction. Roots in F_p
// are isolated by gcd with x^p - x (computed via modular exponentiation of
// x), then split into linear factors by randomized equal-degree splitting
// with (x + a)^((p-1)/2) - 1. Degrees here are tiny; p is large and odd.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/fp.hpp"
#include "hesskit/rng.hpp"

namespace hesskit {

struct FpUni {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> c;  // c[i] multiplies x^i; kept trimmed

  static FpUni zero(std::uint64_t p) { return FpUni{p, {}}; }
  static FpUni of(std::uint64_t p, std::vector<std::uint64_t> coeffs) {
    FpUni f{p, std::move(coeffs)};
    for (auto& x : f.c) x %= p;
    f.trim();
    return f;
  }

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  std::uint64_t eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = (mulmod_u64(acc, x, p) + c[i]) % p;
    }
    return acc;
  }
};

inline FpUni uni_add(const FpUni& a, const FpUni& b) {
  FpUni r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
  r.trim();
  return r;
}

inline FpUni uni_sub(const FpUni& a, const FpUni& b) {
  FpUni r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) {
    r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
  }
  r.trim();
  return r;
}

inline FpUni uni_mul(const FpUni& a, const FpUni& b) {
  if (a.is_zero() || b.is_zero()) return FpUni::zero(a.p);
  FpUni r{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] = (r.c[i + j] + mulmod_u64(a.c[i], b.c[j], a.p)) % a.p;
    }
  }
  r.trim();
  return r;
}

inline FpUni uni_scale(const FpUni& a, std::uint64_t s) {
  FpUni r = a;
  for (auto& x : r.c) x = mulmod_u64(x, s, a.p);
  r.trim();
  return r;
}

inline FpUni uni_rem(FpUni a, const FpUni& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  const std::uint64_t p = a.p;
  const std::uint64_t lc_inv = powmod_u64(b.c.back(), p - 2, p);
  while (!a.is_zero() && a.c.size() >= b.c.size()) {
    const std::size_t shift = a.c.size() - b.c.size();
    const std::uint64_t q = mulmod_u64(a.c.back(), lc_inv, p);
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      a.c[shift + i] = (a.c[shift + i] + p - mulmod_u64(q, b.c[i], p)) % p;
    }
    a.trim();
  }
  return a;
}

inline FpUni uni_monic(FpUni a) {
  if (a.is_zero()) return a;
  return uni_scale(a, powmod_u64(a.c.back(), a.p - 2, a.p));
}

inline FpUni uni_gcd(FpUni a, FpUni b) {
  while (!b.is_zero()) {
    FpUni r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(a);
}

// base^exp mod g
inline FpUni uni_powmod(FpUni base, std::uint64_t exp, const FpUni& g) {
  FpUni acc = FpUni::of(g.p, {1});
  base = uni_rem(std::move(base), g);
  while (exp) {
    if (exp & 1) acc = uni_rem(uni_mul(acc, base), g);
    base = uni_rem(uni_mul(base, base), g);
    exp >>= 1;
  }
  return acc;
}

namespace detail {

inline void split_linear(const FpUni& g, Stream& rng,
                         std::vector<std::uint64_t>& roots) {
  // g is monic, squarefree, and splits into distinct linear factors
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    // x + c0  ->  root -c0
    roots.push_back((g.p - g.c[0]) % g.p);
    return;
  }
  const std::uint64_t half = (g.p - 1) / 2;
  for (int tries = 0; tries < 128; ++tries) {
    std::uint64_t a = rng.below(g.p);
    FpUni shift = FpUni::of(g.p, {a, 1});  // x + a
    FpUni w = uni_sub(uni_powmod(shift, half, g), FpUni::of(g.p, {1}));
    FpUni d = uni_gcd(w, g);
    if (d.deg() > 0 && d.deg() < g.deg()) {
      FpUni rest = g;
      // rest = g / d  via repeated subtraction in uni_rem style
      // monic division: quotient of two monic polynomials
      {
        FpUni q = FpUni::zero(g.p);
        FpUni r = g;
        q.c.assign(static_cast<std::size_t>(g.deg() - d.deg()) + 1, 0);
        while (!r.is_zero() && r.c.size() >= d.c.size()) {
          const std::size_t shift_deg = r.c.size() - d.c.size();
          const std::uint64_t lead = r.c.back();
          q.c[shift_deg] = lead;
          for (std::size_t i = 0; i < d.c.size(); ++i) {
            r.c[shift_deg + i] =
                (r.c[shift_deg + i] + g.p - mulmod_u64(lead, d.c[i], g.p)) % g.p;
          }
          r.trim();
        }
        q.trim();
        rest = q;
      }
      split_linear(d, rng, roots);
      split_linear(rest, rng, roots);
      return;
    }
  }
  throw Error("equal-degree splitting failed to converge");
}

}  // namespace detail

// All roots of f in F_p (each distinct root once, sorted ascending).
inline std::vector<std::uint64_t> roots_in_fp(const FpUni& f, Stream& rng) {
  if (f.p < 3) throw Error("modulus must be an odd prime");
  if (f.is_zero()) throw Error("zero polynomial has every root");
  std::vector<std::uint64_t> roots;
  if (f.deg() == 0) return roots;
  FpUni g = uni_monic(f);
  // factor out x while the constant term vanishes
  bool zero_root = false;
  while (!g.c.empty() && g.c[0] == 0) {
    zero_root = true;
    g.c.erase(g.c.begin());
  }
  if (zero_root) roots.push_back(0);
  if (g.deg() >= 1) {
    FpUni x = FpUni::of(f.p, {0, 1});
    FpUni xp = uni_powmod(x, f.p, g);
    FpUni lin = uni_gcd(uni_sub(xp, x), g);
    detail::split_linear(lin, rng, roots);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hesskit
