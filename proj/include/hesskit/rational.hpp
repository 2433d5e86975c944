#pragma once

// Exact rational scalars on top of GMP. Values are always canonical
// (reduced, positive denominator). This is the only file that touches
// gmpxx directly.

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hesskit/error.hpp"
#include "hesskit/fp.hpp"

namespace hesskit {

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rat(long num, long den) {
    if (den == 0) throw Error("zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rat(const mpz_class& n) : v_(n) {}

  // Accepts "p" or "p/q" with optional leading '-'.
  static Rat from_string(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw Error("bad rational literal: " + text);
    if (v.get_den() == 0) throw Error("zero denominator");
    v.canonicalize();
    Rat r;
    r.v_ = v;
    return r;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator+(const Rat& o) const { return wrap(v_ + o.v_); }
  Rat operator-(const Rat& o) const { return wrap(v_ - o.v_); }
  Rat operator*(const Rat& o) const { return wrap(v_ * o.v_); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return wrap(v_ / o.v_);
  }
  Rat operator-() const { return wrap(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }

  Rat abs() const { return wrap(::abs(v_)); }

  Rat pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return wrap(mpq_class(num) / mpq_class(den));
  }

  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

  // Image in F_p; requires p prime and p not dividing the denominator.
  Fp mod(std::uint64_t p) const {
    if (!is_prime_u64(p)) throw Error("bad prime");
    std::uint64_t den = mpz_fdiv_ui(v_.get_den().get_mpz_t(), p);
    if (den == 0) throw Error("bad prime");
    std::uint64_t num = mpz_fdiv_ui(v_.get_num().get_mpz_t(), p);  // num mod p >= 0
    return Fp(num, p) / Fp(den, p);
  }

 private:
  static Rat wrap(const mpq_class& v) {
    Rat r;
    r.v_ = v;
    return r;
  }
  mpq_class v_;
};

}  // namespace hesskit
