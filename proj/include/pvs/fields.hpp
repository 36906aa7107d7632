#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pvs/rational.hpp"

namespace pvs {

/// Arithmetic modulo a small prime; every element carries its modulus so the
/// pencil code can stay generic over the base field.
struct Fp {
  std::uint32_t value = 0;
  std::uint32_t p = 2;

  Fp() = default;
  Fp(std::uint64_t v, std::uint32_t prime)
      : value(static_cast<std::uint32_t>(v % prime)), p(prime) {}

  static Fp from_int(std::int64_t v, std::uint32_t prime) {
    std::int64_t r = v % static_cast<std::int64_t>(prime);
    if (r < 0) r += prime;
    return Fp(static_cast<std::uint64_t>(r), prime);
  }

  bool operator==(const Fp&) const = default;
};

inline void require_same_field(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw std::invalid_argument("mixed prime fields");
}

inline Fp operator+(const Fp& a, const Fp& b) {
  require_same_field(a, b);
  return Fp(static_cast<std::uint64_t>(a.value) + b.value, a.p);
}

inline Fp operator-(const Fp& a, const Fp& b) {
  require_same_field(a, b);
  return Fp(static_cast<std::uint64_t>(a.value) + a.p - b.value, a.p);
}

inline Fp operator-(const Fp& a) {
  return Fp(static_cast<std::uint64_t>(a.p) - a.value, a.p);
}

inline Fp operator*(const Fp& a, const Fp& b) {
  require_same_field(a, b);
  return Fp(static_cast<std::uint64_t>(a.value) * b.value, a.p);
}

inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }

inline Fp inverse(const Fp& a) {
  if (a.value == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on (value, p).
  std::int64_t r0 = a.value, r1 = a.p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return Fp::from_int(s0, a.p);
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

// Uniform helpers so templates can work over both base fields.
inline Rat ring_zero(const Rat&) { return Rat(0); }
inline Rat ring_one(const Rat&) { return Rat(1); }
inline bool ring_is_zero(const Rat& a) { return a == 0; }
inline std::string ring_to_string(const Rat& a) { return rat_to_string(a); }

inline Fp ring_zero(const Fp& w) { return Fp(0, w.p); }
inline Fp ring_one(const Fp& w) { return Fp(1, w.p); }
inline bool ring_is_zero(const Fp& a) { return a.value == 0; }
inline std::string ring_to_string(const Fp& a) { return std::to_string(a.value); }

}  // namespace pvs
