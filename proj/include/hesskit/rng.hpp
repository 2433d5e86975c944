#pragma once

// Deterministic randomness. Every randomized routine opens a Stream keyed by
// (seed, label, counter); streams are independent SplitMix64 chains, so
// results do not depend on evaluation order and equal seeds reproduce runs
// bit for bit.

#include <cstdint>
#include <string_view>

namespace hesskit {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Stream {
 public:
  Stream(std::uint64_t seed, std::string_view label, std::uint64_t counter) {
    state_ = seed;
    (void)splitmix64(state_);
    state_ ^= fnv1a64(label);
    (void)splitmix64(state_);
    state_ ^= counter * 0xd6e8feb86659fd93ULL;
    (void)splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, n) by rejection; unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~0ULL) / n);
    for (;;) {
      std::uint64_t x = next_u64();
      if (x < limit) return x % n;
    }
  }

  // Uniform integer in [lo, hi], inclusive.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace hesskit
