#pragma once

// Dense matrices over polynomials or field scalars.
//
// Polynomial determinants run fraction-free (Bareiss): pivot on the lowest
// row with a nonzero entry, and a fully zero pivot column short-circuits to
// determinant zero. Every intermediate division is exact; a cofactor
// expansion is kept both as an independent oracle and as a fallback.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/poly.hpp"

namespace hesskit {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, T fill)
      : rows_(rows), cols_(cols), data_(rows * cols, std::move(fill)) {}

  static Matrix from_rows(std::vector<std::vector<T>> rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
      if (r.size() != m.cols_) throw Error("ragged matrix rows");
      for (auto& x : r) m.data_.push_back(std::move(x));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const T& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return data_[i * cols_ + j];
  }
  T& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    return data_[i * cols_ + j];
  }

  Matrix submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Matrix m;
    m.rows_ = row_idx.size();
    m.cols_ = col_idx.size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (std::size_t i : row_idx) {
      for (std::size_t j : col_idx) m.data_.push_back(at(i, j));
    }
    return m;
  }

  Matrix transpose() const {
    Matrix m;
    m.rows_ = cols_;
    m.cols_ = rows_;
    m.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) m.data_.push_back(at(i, j));
    }
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    if (rows_ == 0 || o.cols_ == 0 || cols_ == 0) throw Error("empty matrix");
    Matrix m(rows_, o.cols_, at(0, 0) - at(0, 0));  // zero of the right kind
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < o.cols_; ++j) {
        T acc = at(i, 0) * o.at(0, j);
        for (std::size_t k = 1; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
        m.at(i, j) = std::move(acc);
      }
    }
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

template <class K>
VarSetPtr matrix_vars(const Matrix<Polynomial<K>>& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("empty matrix");
  const VarSetPtr& v = m.at(0, 0).vars();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      require_same_vars(v, m.at(i, j).vars());
    }
  }
  return v;
}

template <class K>
K unit_scalar(const Matrix<Polynomial<K>>& m);

template <class K>
Polynomial<K> determinant_bareiss(const Matrix<Polynomial<K>>& input) {
  if (!input.is_square()) throw Error("matrix is not square");
  VarSetPtr vars = matrix_vars(input);
  const std::size_t n = input.rows();
  if (n == 1) return input.at(0, 0);
  Matrix<Polynomial<K>> a = input;
  // previous pivot starts as the constant 1
  Polynomial<K> prev_pivot = Polynomial<K>::monomial(
      vars, Exponents(vars->size(), 0), unit_scalar(a));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!a.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) return Polynomial<K>::zero(vars);  // zero pivot column
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial<K> num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        auto q = num.exact_divide_by(prev_pivot);
        if (!q) throw Error("internal: fraction-free division failed");
        a.at(i, j) = std::move(*q);
      }
      a.at(i, k) = Polynomial<K>::zero(vars);
    }
    prev_pivot = a.at(k, k);
  }
  Polynomial<K> det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

// Unit coefficient matching the matrix entries (modulus-aware for F_p).
template <class K>
K unit_scalar(const Matrix<Polynomial<K>>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) {
        return scalar_from_int(1, m.at(i, j).exemplar());
      }
    }
  }
  return scalar_from_int(1, K{});
}

// Cofactor expansion with memoization on column subsets; independent of the
// fraction-free route, usable as an oracle for it.
template <class K>
Polynomial<K> determinant_cofactor(const Matrix<Polynomial<K>>& input) {
  if (!input.is_square()) throw Error("matrix is not square");
  VarSetPtr vars = matrix_vars(input);
  const std::size_t n = input.rows();
  if (n > 20) throw Error("cofactor expansion limited to 20x20");
  std::unordered_map<std::uint32_t, Polynomial<K>> memo;
  // det over rows [n-popcount(mask), n) and the columns in mask
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial<K> {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int count = __builtin_popcount(mask);
    const std::size_t row = n - static_cast<std::size_t>(count);
    Polynomial<K> acc = Polynomial<K>::zero(vars);
    int pos = 0;
    for (std::uint32_t m = mask; m; m &= m - 1, ++pos) {
      std::size_t col = static_cast<std::size_t>(__builtin_ctz(m));
      const Polynomial<K>& entry = input.at(row, col);
      if (entry.is_zero()) continue;
      Polynomial<K> sub = count == 1
                              ? Polynomial<K>::monomial(vars, Exponents(vars->size(), 0),
                                                        unit_scalar(input))
                              : self(self, mask & ~(1u << col));
      Polynomial<K> piece = entry * sub;
      acc = (pos % 2 == 0) ? acc + piece : acc - piece;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n == 32 ? ~0u : ((1u << n) - 1));
}

// Fraction-free first, cofactor fallback if an internal division ever failed.
template <class K>
Polynomial<K> determinant(const Matrix<Polynomial<K>>& input) {
  try {
    return determinant_bareiss(input);
  } catch (const Error&) {
    return determinant_cofactor(input);
  }
}

template <class K>
Polynomial<K> minor_det(const Matrix<Polynomial<K>>& m,
                        const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw Error("minor is not square");
  return determinant(m.submatrix(rows, cols));
}

// Lexicographic k-combinations of {0..n-1}; returns false when exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

struct MinorRef {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// All order-k minors (row set, column set) of an r x c matrix.
inline std::vector<MinorRef> minor_index_pairs(std::size_t r, std::size_t c,
                                               std::size_t k) {
  std::vector<MinorRef> out;
  if (k == 0 || k > r || k > c) return out;
  auto rc = first_combination(k);
  do {
    auto cc = first_combination(k);
    do {
      out.push_back({rc, cc});
    } while (next_combination(cc, c));
  } while (next_combination(rc, r));
  return out;
}

template <class K>
std::vector<std::pair<MinorRef, Polynomial<K>>> all_minors(
    const Matrix<Polynomial<K>>& m, std::size_t k) {
  std::vector<std::pair<MinorRef, Polynomial<K>>> out;
  for (auto& ref : minor_index_pairs(m.rows(), m.cols(), k)) {
    Polynomial<K> d = minor_det(m, ref.rows, ref.cols);
    out.emplace_back(std::move(ref), std::move(d));
  }
  return out;
}

// Adjugate via cofactors; stays valid when the determinant vanishes.
template <class K>
Matrix<Polynomial<K>> adjugate(const Matrix<Polynomial<K>>& m) {
  if (!m.is_square()) throw Error("matrix is not square");
  VarSetPtr vars = matrix_vars(m);
  const std::size_t n = m.rows();
  Matrix<Polynomial<K>> adj(n, n, Polynomial<K>::zero(vars));
  if (n == 1) {
    adj.at(0, 0) = Polynomial<K>::monomial(vars, Exponents(vars->size(), 0),
                                           unit_scalar(m));
    return adj;
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> ri, ci;
      for (std::size_t t : all) {
        if (t != i) ri.push_back(t);
      }
      for (std::size_t t : all) {
        if (t != j) ci.push_back(t);
      }
      Polynomial<K> cof = determinant(m.submatrix(ri, ci));
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

// Pfaffian of an even skew-symmetric matrix, expanded along the first row:
// Pf([[0,a],[-a,0]]) = a. Memoized on index subsets.
template <class K>
Polynomial<K> pfaffian(const Matrix<Polynomial<K>>& m) {
  if (!m.is_square()) throw Error("matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) throw Error("empty matrix");
  if (n % 2 != 0) throw Error("odd size");
  VarSetPtr vars = matrix_vars(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (m.at(i, j) != -m.at(j, i)) throw Error("matrix is not skew-symmetric");
    }
  }
  if (n > 24) throw Error("pfaffian expansion limited to 24x24");
  std::unordered_map<std::uint32_t, Polynomial<K>> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial<K> {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<std::size_t> idx;
    for (std::uint32_t t = mask; t; t &= t - 1) {
      idx.push_back(static_cast<std::size_t>(__builtin_ctz(t)));
    }
    Polynomial<K> acc = Polynomial<K>::zero(vars);
    if (idx.size() == 2) {
      acc = m.at(idx[0], idx[1]);
    } else {
      for (std::size_t t = 1; t < idx.size(); ++t) {
        const Polynomial<K>& entry = m.at(idx[0], idx[t]);
        if (entry.is_zero()) continue;
        std::uint32_t sub = mask & ~(1u << idx[0]) & ~(1u << idx[t]);
        Polynomial<K> piece = entry * self(self, sub);
        acc = (t % 2 == 1) ? acc + piece : acc - piece;
      }
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, n == 32 ? ~0u : ((1u << n) - 1));
}

// Jacobian of a list of polynomials: rows = maps, columns = variables.
template <class K>
Matrix<Polynomial<K>> jacobian(const std::vector<Polynomial<K>>& maps) {
  if (maps.empty()) throw Error("empty map list");
  VarSetPtr vars = maps[0].vars();
  for (const auto& f : maps) require_same_vars(vars, f.vars());
  Matrix<Polynomial<K>> j(maps.size(), vars->size(), Polynomial<K>::zero(vars));
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (std::size_t v = 0; v < vars->size(); ++v) {
      j.at(i, v) = maps[i].partial_derivative(v);
    }
  }
  return j;
}

// --- field-scalar routines (work for Fp and Rat entries) ---

template <class F>
std::size_t rank_gauss(Matrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0, rr = 0;
  for (std::size_t c = 0; c < cols && rr < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rr; i < rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != rr) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(rr, j), m.at(piv, j));
    }
    for (std::size_t i = rr + 1; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      F factor = m.at(i, c) / m.at(rr, c);
      for (std::size_t j = c; j < cols; ++j) {
        m.at(i, j) -= factor * m.at(rr, j);
      }
    }
    ++rr;
    ++rank;
  }
  return rank;
}

// Basis of the right kernel {x : m x = 0}, via reduced row echelon form.
template <class F>
std::vector<std::vector<F>> nullspace_basis(Matrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) throw Error("empty matrix");
  std::vector<std::size_t> pivot_col;
  std::size_t rr = 0;
  for (std::size_t c = 0; c < cols && rr < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = rr; i < rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != rr) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(rr, j), m.at(piv, j));
    }
    F inv = scalar_from_int(1, m.at(rr, c)) / m.at(rr, c);
    for (std::size_t j = c; j < cols; ++j) m.at(rr, j) = m.at(rr, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rr || m.at(i, c).is_zero()) continue;
      F factor = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= factor * m.at(rr, j);
    }
    pivot_col.push_back(c);
    ++rr;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(cols, scalar_from_int(0, m.at(0, 0)));
    v[c] = scalar_from_int(1, m.at(0, 0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[pivot_col[r]] = -m.at(r, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
F det_gauss(Matrix<F> m) {
  if (!m.is_square()) throw Error("matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) throw Error("empty matrix");
  F det = scalar_from_int(1, m.at(0, 0));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) return scalar_from_int(0, m.at(0, 0));
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m.at(c, j), m.at(piv, j));
      det = -det;
    }
    det = det * m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      F factor = m.at(i, c) / m.at(c, c);
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

template <class K>
Matrix<K> eval_matrix(const Matrix<Polynomial<K>>& m, std::span<const K> point) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("empty matrix");
  Matrix<K> out(m.rows(), m.cols(), scalar_from_int(0, point.empty() ? K{} : point[0]));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.at(i, j) = m.at(i, j).evaluate(point);
    }
  }
  return out;
}

inline Matrix<PolyFp> reduce_matrix_mod_prime(const Matrix<PolyQ>& m, std::uint64_t p) {
  Matrix<PolyFp> out(m.rows(), m.cols(), PolyFp());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out.at(i, j) = reduce_mod_prime(m.at(i, j), p);
    }
  }
  return out;
}

}  // namespace hesskit
