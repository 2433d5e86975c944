#pragma once

// Sylvester resultants of binary forms. A binary form of degree d in (s, t)
// is sum_i c_i s^(d-i) t^i where the c_i may involve further variables. The
// Sylvester matrix lists the b shifted coefficient rows of f first, then the
// a rows of g, so Res(f, g) is homogeneous of degree b in f's coefficients
// and degree a in g's.

#include <cstddef>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/matrix.hpp"
#include "hesskit/poly.hpp"

namespace hesskit {

// Coefficients of a binary form of degree `deg` in the variables at s_idx,
// t_idx; entry i is the coefficient of s^(deg-i) t^i with those two
// exponents cleared. Requires every term to have joint (s,t)-degree `deg`.
template <class K>
std::vector<Polynomial<K>> binary_coefficients(const Polynomial<K>& f,
                                               std::size_t s_idx,
                                               std::size_t t_idx, int deg) {
  if (deg < 0) throw Error("negative degree");
  std::vector<Polynomial<K>> out(static_cast<std::size_t>(deg) + 1,
                                 Polynomial<K>::zero(f.vars()));
  for (const auto& [e, c] : f.terms()) {
    int ds = e.at(s_idx), dt = e.at(t_idx);
    if (ds + dt != deg) {
      throw Error("not a binary form of the declared degree");
    }
    Exponents rest = e;
    rest[s_idx] = 0;
    rest[t_idx] = 0;
    out[static_cast<std::size_t>(dt)].add_term(std::move(rest), c);
  }
  return out;
}

template <class K>
Matrix<Polynomial<K>> sylvester_matrix(const Polynomial<K>& f,
                                       const Polynomial<K>& g,
                                       std::size_t s_idx, std::size_t t_idx,
                                       int a, int b) {
  require_same_vars(f.vars(), g.vars());
  if (a < 1 || b < 1) throw Error("binary forms must have degree at least 1");
  auto cf = binary_coefficients(f, s_idx, t_idx, a);
  auto cg = binary_coefficients(g, s_idx, t_idx, b);
  const std::size_t n = static_cast<std::size_t>(a + b);
  Matrix<Polynomial<K>> m(n, n, Polynomial<K>::zero(f.vars()));
  for (std::size_t r = 0; r < static_cast<std::size_t>(b); ++r) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(a); ++i) {
      m.at(r, r + i) = cf[i];
    }
  }
  for (std::size_t r = 0; r < static_cast<std::size_t>(a); ++r) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(b); ++i) {
      m.at(static_cast<std::size_t>(b) + r, r + i) = cg[i];
    }
  }
  return m;
}

template <class K>
Polynomial<K> binary_resultant(const Polynomial<K>& f, const Polynomial<K>& g,
                               std::size_t s_idx, std::size_t t_idx, int a,
                               int b) {
  return determinant(sylvester_matrix(f, g, s_idx, t_idx, a, b));
}

// Discriminant of a binary form of degree d as Res(df/ds, df/dt); for the
// generic quadratic c0 s^2 + c1 s t + c2 t^2 this evaluates to 4 c0 c2 - c1^2,
// i.e. (-1) * (c1^2 - 4 c0 c2).
template <class K>
Polynomial<K> binary_discriminant(const Polynomial<K>& f, std::size_t s_idx,
                                  std::size_t t_idx, int d) {
  if (d < 2) throw Error("discriminant needs degree at least 2");
  Polynomial<K> fs = f.partial_derivative(s_idx);
  Polynomial<K> ft = f.partial_derivative(t_idx);
  return binary_resultant(fs, ft, s_idx, t_idx, d - 1, d - 1);
}

}  // namespace hesskit
