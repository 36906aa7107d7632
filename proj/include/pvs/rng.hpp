#pragma once

#include <cstdint>
#include <string_view>

namespace pvs {

// splitmix64: tiny, portable, and identical on every platform. The standard
// <random> distributions are implementation-defined, which would break the
// byte-identical-dossier guarantee, so all sampling goes through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) via rejection; n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

/// FNV-1a over the label, mixed with the run seed: every (seed, label) pair
/// owns an independent stream, so parallel and serial runs agree.
inline std::uint64_t stream_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x00000100000001b3ULL;
  }
  return h ^ (seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL);
}

inline Rng stream(std::uint64_t seed, std::string_view label) {
  return Rng(stream_seed(seed, label));
}

}  // namespace pvs
