#pragma once

// Sparse multivariate polynomials over an exact field (Rat or Fp).
// Terms live in a std::map keyed by exponent vectors, compared
// lexicographically in variable order, so the representation is canonical:
// equal polynomials have identical term sequences. Values are immutable in
// spirit -- every operation returns a fresh polynomial -- and safe to share
// across threads.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/fp.hpp"
#include "hesskit/rational.hpp"
#include "hesskit/varset.hpp"

namespace hesskit {

using Exponents = std::vector<int>;

// Scalar construction from a small integer, with an exemplar supplying the
// modulus in the F_p case.
inline Rat scalar_from_int(long long v, const Rat&) { return Rat(static_cast<long>(v)); }
inline Fp scalar_from_int(long long v, const Fp& exemplar) {
  return Fp::from_int(v, exemplar.modulus());
}

template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Exponents, K>;

  Polynomial() = default;

  static Polynomial zero(VarSetPtr vars) {
    Polynomial p;
    p.vars_ = std::move(vars);
    return p;
  }

  static Polynomial constant(VarSetPtr vars, K value) {
    Polynomial p = zero(std::move(vars));
    if (!value.is_zero()) {
      p.terms_.emplace(Exponents(p.vars_->size(), 0), std::move(value));
    }
    return p;
  }

  static Polynomial variable(VarSetPtr vars, std::size_t index, K unit) {
    Polynomial p = zero(std::move(vars));
    if (index >= p.vars_->size()) throw Error("variable index out of range");
    Exponents e(p.vars_->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), std::move(unit));
    return p;
  }

  static Polynomial monomial(VarSetPtr vars, Exponents exps, K coef) {
    Polynomial p = zero(std::move(vars));
    if (exps.size() != p.vars_->size()) throw Error("exponent vector length mismatch");
    for (int e : exps) {
      if (e < 0) throw Error("negative exponent");
    }
    if (!coef.is_zero()) p.terms_.emplace(std::move(exps), std::move(coef));
    return p;
  }

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
  }

  // Constant value; only valid when is_constant() and nonzero or K == Rat.
  K constant_value() const {
    if (terms_.empty()) return K{};
    return terms_.begin()->second;
  }

  // Max total degree over terms; -1 for the zero polynomial.
  int total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
    return best;
  }

  int degree_in(std::size_t var) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, e.at(var));
    return best;
  }

  // Degree of every term summed over a subset of variables; nullopt if the
  // subset-degree is not uniform across terms.
  std::optional<int> uniform_degree_in(const std::vector<std::size_t>& subset) const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (std::size_t i : subset) d += e.at(i);
      if (!deg) {
        deg = d;
      } else if (*deg != d) {
        return std::nullopt;
      }
    }
    return deg ? deg : std::optional<int>(0);
  }

  // Homogeneity degree, or nullopt; the zero polynomial reports degree 0.
  std::optional<int> is_homogeneous() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
      int d = degree_of(e);
      if (!deg) {
        deg = d;
      } else if (*deg != d) {
        return std::nullopt;
      }
    }
    return deg ? deg : std::optional<int>(0);
  }

  const std::pair<const Exponents, K>& leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  Polynomial operator-() const {
    Polynomial r = zero(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_vars(vars_, o.vars_);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    require_same_vars(vars_, o.vars_);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_vars(vars_, o.vars_);
    Polynomial r = zero(vars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& large = terms_.size() <= o.terms_.size() ? o : *this;
    Exponents buf(vars_->size(), 0);
    for (const auto& [ea, ca] : small.terms_) {
      for (const auto& [eb, cb] : large.terms_) {
        for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = ea[i] + eb[i];
        auto it = r.terms_.lower_bound(buf);
        if (it != r.terms_.end() && it->first == buf) {
          it->second += ca * cb;
        } else {
          r.terms_.emplace_hint(it, buf, ca * cb);
        }
      }
    }
    r.strip_zeros();
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& s) const {
    Polynomial r = zero(vars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) {
      K v = c * s;
      if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
    }
    return r;
  }

  Polynomial pow(unsigned e) const {
    if (e == 0) {
      K unit = scalar_from_int(1, exemplar());
      return constant(vars_, unit);
    }
    // square-and-multiply on the binary expansion of e
    Polynomial result = zero(vars_);
    bool have = false;
    Polynomial base = *this;
    while (e) {
      if (e & 1) {
        result = have ? result * base : base;
        have = true;
      }
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  Polynomial partial_derivative(std::size_t var) const {
    if (var >= vars_->size()) throw Error("variable index out of range");
    Polynomial r = zero(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      K v = c * scalar_from_int(e[var], c);
      if (!v.is_zero()) r.terms_.emplace(std::move(d), std::move(v));
    }
    return r;
  }

  // Sum of v * d/dv over the given variable indices.
  Polynomial euler_sum(const std::vector<std::size_t>& subset) const {
    Polynomial r = zero(vars_);
    for (const auto& [e, c] : terms_) {
      long long weight = 0;
      for (std::size_t i : subset) weight += e.at(i);
      if (weight == 0) continue;
      K v = c * scalar_from_int(weight, c);
      if (!v.is_zero()) r.add_term(e, v);
    }
    return r;
  }

  // Full Euler identity sum(x_i d/dx_i) == deg * p; requires homogeneity.
  bool euler_check() const {
    auto deg = is_homogeneous();
    if (!deg) throw Error("inhomogeneous input");
    std::vector<std::size_t> all(vars_->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Polynomial lhs = euler_sum(all);
    Polynomial rhs = is_zero() ? zero(vars_)
                               : scaled(scalar_from_int(*deg, exemplar()));
    return lhs == rhs;
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() != vars_->size()) throw Error("point length mismatch");
    if (terms_.empty()) {
      return point.empty() ? K{} : scalar_from_int(0, point[0]);
    }
    // power table per variable up to its max exponent
    std::vector<std::vector<K>> pows(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
      int d = degree_in(i);
      auto& tab = pows[i];
      tab.reserve(static_cast<std::size_t>(d) + 1);
      tab.push_back(scalar_from_int(1, point[i]));
      for (int k = 1; k <= d; ++k) tab.push_back(tab.back() * point[i]);
    }
    K acc = scalar_from_int(0, point[0]);
    for (const auto& [e, c] : terms_) {
      K term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i]) term *= pows[i][static_cast<std::size_t>(e[i])];
      }
      acc += term;
    }
    return acc;
  }

  // Substitute images (over `target`) for the variables listed in `bindings`;
  // every unbound variable must exist in `target` under its own name.
  // Powers of each image are memoized.
  Polynomial substitute(const std::map<std::size_t, Polynomial>& bindings,
                        const VarSetPtr& target) const {
    std::vector<const Polynomial*> image(vars_->size(), nullptr);
    for (const auto& [idx, img] : bindings) {
      if (idx >= vars_->size()) throw Error("variable index out of range");
      require_same_vars(img.vars(), target);
      image[idx] = &img;
    }
    std::vector<Polynomial> identity_cache;
    identity_cache.reserve(vars_->size());
    std::vector<int> target_index(vars_->size(), -1);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (image[i]) continue;
      auto ti = target->index(vars_->name(i));
      if (!ti) {
        throw Error("variable '" + vars_->name(i) +
                    "' has no image and is missing from the target set");
      }
      target_index[i] = static_cast<int>(*ti);
    }
    // memoized powers: pows[i][k] = image_i^k (k >= 1)
    std::vector<std::vector<Polynomial>> pows(vars_->size());
    auto power_of = [&](std::size_t i, int k) -> const Polynomial& {
      auto& tab = pows[i];
      if (tab.empty()) {
        if (image[i]) {
          tab.push_back(*image[i]);
        } else {
          K unit = scalar_from_int(1, exemplar());
          tab.push_back(Polynomial::variable(
              target, static_cast<std::size_t>(target_index[i]), unit));
        }
      }
      while (static_cast<int>(tab.size()) < k) tab.push_back(tab.back() * tab[0]);
      return tab[static_cast<std::size_t>(k - 1)];
    };
    Polynomial acc = zero(target);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(target, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i]) term = term * power_of(i, e[i]);
      }
      acc += term;
    }
    return acc;
  }

  // Reindex onto another variable set: each variable maps to rename[name]
  // (or its own name when absent), which must exist in `target`.
  Polynomial reindexed(const VarSetPtr& target,
                       const std::map<std::string, std::string>& rename = {}) const {
    // resolved lazily so variables that never occur may be absent from target
    constexpr std::size_t kUnresolved = static_cast<std::size_t>(-1);
    std::vector<std::size_t> where(vars_->size(), kUnresolved);
    auto resolve = [&](std::size_t i) {
      if (where[i] != kUnresolved) return where[i];
      const std::string& n = vars_->name(i);
      auto it = rename.find(n);
      where[i] = target->index_or_throw(it == rename.end() ? n : it->second);
      return where[i];
    };
    Polynomial r = zero(target);
    for (const auto& [e, c] : terms_) {
      Exponents d(target->size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i]) {
          std::size_t w = resolve(i);
          if (d[w] != 0) throw Error("rename collapses two variables");
          d[w] = e[i];
        }
      }
      r.add_term(std::move(d), c);
    }
    r.strip_zeros();
    return r;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_vars(vars_, o.vars_)) return false;
    return terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Exact division: returns p / f when f divides *this, nullopt otherwise.
  std::optional<Polynomial> exact_divide_by(const Polynomial& f) const {
    require_same_vars(vars_, f.vars_);
    if (f.is_zero()) throw Error("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial quot = zero(vars_);
    const auto& [fe, fc] = f.leading_term();
    while (!rem.terms_.empty()) {
      const auto& [re, rc] = *rem.terms_.rbegin();
      Exponents qe(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) {
        int d = re[i] - fe[i];
        if (d < 0) return std::nullopt;  // remainder would be nonzero
        qe[i] = d;
      }
      K qc = divide_coef(rc, fc);
      Polynomial qterm = monomial(vars_, std::move(qe), qc);
      quot += qterm;
      rem -= qterm * f;
    }
    return quot;
  }

  // Normal-form remainder of *this under the single divisor f (lex order).
  Polynomial reduce_by(const Polynomial& f) const {
    require_same_vars(vars_, f.vars_);
    if (f.is_zero()) throw Error("division by zero polynomial");
    Polynomial rem = *this;
    Polynomial out = zero(vars_);
    const auto& [fe, fc] = f.leading_term();
    while (!rem.terms_.empty()) {
      auto it = std::prev(rem.terms_.end());
      const Exponents& re = it->first;
      bool divisible = true;
      for (std::size_t i = 0; i < re.size(); ++i) {
        if (re[i] < fe[i]) {
          divisible = false;
          break;
        }
      }
      if (!divisible) {
        out.add_term(re, it->second);
        rem.terms_.erase(it);
        continue;
      }
      Exponents qe(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) qe[i] = re[i] - fe[i];
      Polynomial qterm = monomial(vars_, std::move(qe), divide_coef(it->second, fc));
      rem -= qterm * f;
    }
    return out;
  }

  K exemplar() const {
    if (!terms_.empty()) return terms_.begin()->second;
    return K{};
  }

  void add_term(Exponents e, K c) {
    auto it = terms_.lower_bound(e);
    if (it != terms_.end() && it->first == e) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (!c.is_zero()) {
      terms_.emplace_hint(it, std::move(e), std::move(c));
    }
  }

 private:
  static int degree_of(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }

  static Rat divide_coef(const Rat& a, const Rat& b) { return a / b; }
  static Fp divide_coef(const Fp& a, const Fp& b) { return a / b; }

  void strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero()) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  VarSetPtr vars_;
  TermMap terms_;
};

using PolyQ = Polynomial<Rat>;
using PolyFp = Polynomial<Fp>;

inline bool divides(const PolyQ& f, const PolyQ& p) {
  return p.exact_divide_by(f).has_value();
}

// Coefficient-wise reduction to F_p. Throws "bad prime" if p is composite or
// divides a denominator.
inline PolyFp reduce_mod_prime(const PolyQ& poly, std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error("bad prime");
  PolyFp out = PolyFp::zero(poly.vars());
  for (const auto& [e, c] : poly.terms()) {
    Fp v = c.mod(p);
    if (!v.is_zero()) out.add_term(e, v);
  }
  return out;
}

}  // namespace hesskit
