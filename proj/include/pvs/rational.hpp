#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace pvs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parse "p", "-p" or "p/q" into an exact rational.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

/// Canonical exact form: "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

using RVector = std::vector<Rat>;

inline Rat dot(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RVector add(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RVector sub(const RVector& a, const RVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RVector scale(const Rat& c, const RVector& a) {
  RVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const RVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

/// A linear functional given by its coefficient vector.
struct LinearForm {
  RVector coefficients;

  Rat operator()(const RVector& v) const { return dot(coefficients, v); }
  bool is_zero() const { return pvs::is_zero(coefficients); }
};

}  // namespace pvs
