#include "pvs/pencils.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pvs {
namespace {

// ---------------------------------------------------------------------------
// Extension fields F_{p^m} for m in {1,2,3}, used to count distinct roots of
// low-degree forms when the characteristic is too small for discriminants.
// Elements are coefficient vectors modulo a monic polynomial of degree m that
// has no root in F_p (which implies irreducibility for m <= 3).

struct ExtField {
  std::uint32_t p = 2;
  std::size_t m = 1;
  std::vector<std::uint32_t> low;  // g(t) = t^m + sum low[i] t^i
};

using ExtElem = std::vector<std::uint32_t>;

ExtField make_ext(std::uint32_t p, std::size_t m) {
  ExtField K{p, m, std::vector<std::uint32_t>(m, 0)};
  if (m == 1) return K;
  while (true) {
    bool has_root = false;
    for (std::uint32_t z = 0; z < p && !has_root; ++z) {
      std::uint64_t acc = 0, zi = 1;
      for (std::size_t i = 0; i < m; ++i) {
        acc = (acc + static_cast<std::uint64_t>(K.low[i]) * zi) % p;
        zi = (zi * z) % p;
      }
      if ((acc + zi) % p == 0) has_root = true;  // zi == z^m here
    }
    if (!has_root) return K;
    std::size_t i = 0;
    while (i < m && ++K.low[i] == p) K.low[i++] = 0;
    if (i == m) throw std::logic_error("no irreducible polynomial found");
  }
}

ExtElem ext_mul(const ExtField& K, const ExtElem& a, const ExtElem& b) {
  std::vector<std::uint64_t> buf(2 * K.m - 1, 0);
  for (std::size_t i = 0; i < K.m; ++i)
    for (std::size_t j = 0; j < K.m; ++j)
      buf[i + j] = (buf[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % K.p;
  for (std::size_t i = 2 * K.m - 2; i >= K.m; --i) {
    const std::uint64_t c = buf[i];
    if (c == 0) continue;
    buf[i] = 0;
    // t^i = t^(i-m) * t^m = -t^(i-m) * (low-order part of g)
    for (std::size_t j = 0; j < K.m; ++j)
      buf[i - K.m + j] = (buf[i - K.m + j] + c * ((K.p - K.low[j]) % K.p)) % K.p;
  }
  ExtElem out(K.m);
  for (std::size_t i = 0; i < K.m; ++i) out[i] = static_cast<std::uint32_t>(buf[i]);
  return out;
}

bool ext_is_zero(const ExtElem& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

// Distinct roots of f in the projective line over F_{p^m}.
std::size_t projective_root_count(const BinaryForm<Fp>& f, std::size_t m) {
  const std::uint32_t p = f.coefficients.at(0).p;
  const ExtField K = make_ext(p, m);
  std::size_t count = 0;
  if (f.coefficients.front().value == 0) ++count;  // the point (1:0)
  ExtElem z(m, 0);
  while (true) {
    // Horner evaluation of f(z, 1).
    ExtElem acc(m, 0);
    acc[0] = f.coefficients.front().value;
    for (std::size_t t = 1; t < f.coefficients.size(); ++t) {
      acc = ext_mul(K, acc, z);
      acc[0] = (acc[0] + f.coefficients[t].value) % p;
    }
    if (ext_is_zero(acc)) ++count;
    std::size_t i = 0;
    while (i < m && ++z[i] == p) z[i++] = 0;
    if (i == m) break;
  }
  return count;
}

template <class F>
F discriminant(const BinaryForm<F>& f, const F& four, const F& eighteen,
               const F& twenty_seven) {
  const auto& c = f.coefficients;
  if (f.degree == 2) return c[1] * c[1] - four * c[0] * c[2];
  // degree 3, the standard normalization
  const F a = c[0], b = c[1], cc = c[2], d = c[3];
  return eighteen * a * b * cc * d - four * b * b * b * d + b * b * cc * cc -
         four * a * cc * cc * cc - twenty_seven * a * a * d * d;
}

std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  return out;
}

template <class F>
bool in_L0_impl(const MatrixPencil<F>& x) {
  const BinaryForm<F> f = f_x(x);
  if (!squarefree_form(f)) return false;
  if (x.case_id == CaseId::Case4_E7) return true;
  return rational_root_free(f);
}

nlohmann::ordered_json matrix_to_json(const Matrix<Rat>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& e : row) r.push_back(rat_to_string(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

nlohmann::ordered_json matrix_to_json(const Matrix<Fp>& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : m) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& e : row) r.push_back(e.value);
    rows.push_back(std::move(r));
  }
  return rows;
}

Rat rat_entry(const nlohmann::json& e) {
  if (e.is_string()) return rat_from_string(e.get<std::string>());
  if (e.is_number_integer()) return Rat(e.get<long long>());
  throw std::invalid_argument("pencil json: bad rational entry");
}

template <class F, class EntryFn>
Matrix<F> matrix_from_json(const nlohmann::json& rows, std::size_t n,
                           EntryFn entry) {
  if (!rows.is_array() || rows.size() != n)
    throw std::invalid_argument("pencil json: bad matrix shape");
  Matrix<F> m;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n)
      throw std::invalid_argument("pencil json: bad matrix shape");
    std::vector<F> r;
    for (const auto& e : row) r.push_back(entry(e));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

bool squarefree_form(const BinaryForm<Rat>& f) {
  if (ring_is_zero(f)) return false;
  if (f.degree < 2) return true;
  return discriminant(f, Rat(4), Rat(18), Rat(27)) != 0;
}

bool squarefree_form(const BinaryForm<Fp>& f) {
  if (ring_is_zero(f)) return false;
  if (f.degree < 2) return true;
  const std::uint32_t p = f.coefficients.at(0).p;
  const bool small_char =
      (f.degree == 2 && p == 2) || (f.degree == 3 && (p == 2 || p == 3));
  if (!small_char) {
    return !ring_is_zero(
        discriminant(f, Fp(4, p), Fp(18, p), Fp(27, p)));
  }
  // Small characteristic: count distinct roots directly.  A root of a form of
  // degree <= 3 lies in F_p, F_{p^2} or F_{p^3}; with N_m the number of
  // distinct projective roots over F_{p^m}, every root is counted exactly once
  // by N_2 + N_3 - N_1, so the form is squarefree iff that total equals the
  // degree.
  const std::size_t n1 = projective_root_count(f, 1);
  const std::size_t n2 = projective_root_count(f, 2);
  const std::size_t n3 = projective_root_count(f, 3);
  return n2 + n3 - n1 == static_cast<std::size_t>(f.degree);
}

bool rational_root_free(const BinaryForm<Rat>& f) {
  if (ring_is_zero(f)) return false;
  // Clear denominators to get integer coefficients.
  Int common = 1;
  for (const auto& c : f.coefficients)
    common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(c));
  std::vector<Int> a;
  Int content = 0;
  for (const auto& c : f.coefficients) {
    const Rat scaled = c * Rat(common);
    a.push_back(boost::multiprecision::numerator(scaled));
    content = boost::multiprecision::gcd(content, a.back());
  }
  for (auto& v : a) v /= content;
  const std::size_t d = a.size() - 1;
  if (a.front() == 0) return false;  // root at (1:0)
  if (a.back() == 0) return false;   // root at (0:1)
  // Any rational root r/s in lowest terms of the dehomogenization
  // P(t) = a0 t^d + ... + ad has r | ad and s | a0.
  for (const Int& r : divisors(a.back())) {
    for (const Int& s : divisors(a.front())) {
      if (boost::multiprecision::gcd(r, s) != 1) continue;
      for (int sign : {1, -1}) {
        const Rat t(sign * r, s);
        Rat acc = Rat(a[0]);
        for (std::size_t i = 1; i <= d; ++i) acc = acc * t + Rat(a[i]);
        if (acc == 0) return false;
      }
    }
  }
  return true;
}

bool rational_root_free(const BinaryForm<Fp>& f) {
  if (ring_is_zero(f)) return false;
  const std::uint32_t p = f.coefficients.at(0).p;
  if (f.coefficients.front().value == 0) return false;  // (1:0)
  for (std::uint32_t z = 0; z < p; ++z) {
    std::uint64_t acc = f.coefficients.front().value;
    for (std::size_t t = 1; t < f.coefficients.size(); ++t)
      acc = (acc * z + f.coefficients[t].value) % p;
    if (acc == 0) return false;
  }
  return true;
}

bool is_semistable(const MatrixPencil<Rat>& x) { return squarefree_form(f_x(x)); }
bool is_semistable(const MatrixPencil<Fp>& x) { return squarefree_form(f_x(x)); }

bool in_L0(const MatrixPencil<Rat>& x) { return in_L0_impl(x); }
bool in_L0(const MatrixPencil<Fp>& x) { return in_L0_impl(x); }

nlohmann::ordered_json pencil_to_json(const PencilVariant& x) {
  nlohmann::ordered_json j;
  if (std::holds_alternative<MatrixPencil<Rat>>(x)) {
    const auto& q = std::get<MatrixPencil<Rat>>(x);
    validate_pencil(q);
    j["case"] = case_number(q.case_id);
    j["field"] = "Q";
    j["x1"] = matrix_to_json(q.x1);
    j["x2"] = matrix_to_json(q.x2);
  } else {
    const auto& q = std::get<MatrixPencil<Fp>>(x);
    validate_pencil(q);
    j["case"] = case_number(q.case_id);
    j["field"] = "Fp:" + std::to_string(q.x1.at(0).at(0).p);
    j["x1"] = matrix_to_json(q.x1);
    j["x2"] = matrix_to_json(q.x2);
  }
  return j;
}

PencilVariant pencil_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("case") || !j.contains("field") ||
      !j.contains("x1") || !j.contains("x2"))
    throw std::invalid_argument("pencil json: missing keys");
  const CaseId id = case_from_number(j.at("case").get<int>());
  const std::size_t n = pencil_matrix_size(id);
  const std::string field = j.at("field").get<std::string>();
  if (field == "Q") {
    MatrixPencil<Rat> x{id,
                        matrix_from_json<Rat>(j.at("x1"), n, rat_entry),
                        matrix_from_json<Rat>(j.at("x2"), n, rat_entry)};
    validate_pencil(x);
    return x;
  }
  if (field.rfind("Fp:", 0) == 0) {
    const unsigned long p = std::stoul(field.substr(3));
    if (p < 2) throw std::invalid_argument("pencil json: bad modulus");
    auto entry = [p](const nlohmann::json& e) {
      if (!e.is_number_integer())
        throw std::invalid_argument("pencil json: bad field entry");
      return Fp::from_int(e.get<long long>(), static_cast<std::uint32_t>(p));
    };
    MatrixPencil<Fp> x{id, matrix_from_json<Fp>(j.at("x1"), n, entry),
                       matrix_from_json<Fp>(j.at("x2"), n, entry)};
    validate_pencil(x);
    return x;
  }
  throw std::invalid_argument("pencil json: unknown field tag");
}

}  // namespace pvs
