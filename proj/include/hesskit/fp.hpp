#pragma once

// Prime-field scalars. Each value carries its modulus so mixed-field
// arithmetic is caught at run time instead of silently wrapping.
// Multiplication goes through unsigned __int128; moduli up to 2^62 are fine.

#include <cstdint>
#include <string>

#include "hesskit/error.hpp"

namespace hesskit {

// Default modulus for probabilistic checks: the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

// Largest prime = 1 (mod 4) below 2^61; used when sampling must land on
// loci that need -1 to be a square (Fermat-type pencils).
inline constexpr std::uint64_t kPrimeOneMod4 = 2305843009213693921ULL;

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = mulmod_u64(acc, base, p);
    base = mulmod_u64(base, base, p);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs with this base set.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t prime) : v_(value % prime), p_(prime) {}

  static Fp from_int(long long value, std::uint64_t prime) {
    if (value >= 0) return Fp(static_cast<std::uint64_t>(value) % prime, prime);
    std::uint64_t r = static_cast<std::uint64_t>(-(value + 1)) + 1;  // |value|
    r %= prime;
    return Fp(r == 0 ? 0 : prime - r, prime);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p_ || s < v_) s -= p_;
    return raw(s, p_);
  }
  Fp operator-(const Fp& o) const {
    check(o);
    return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    check(o);
    return raw(mulmod_u64(v_, o.v_, p_), p_);
  }
  Fp inv() const {
    if (v_ == 0) throw Error("division by zero in F_p");
    return raw(powmod_u64(v_, p_ - 2, p_), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp pow(std::uint64_t e) const { return raw(powmod_u64(v_, e, p_), p_); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  // Residue printed as a balanced integer when small, e.g. p-2 -> "-2".
  std::string str() const {
    if (p_ != 0 && v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
    return std::to_string(v_);
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  void check(const Fp& o) const {
    if (p_ != o.p_) throw Error("modulus mismatch");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace hesskit
