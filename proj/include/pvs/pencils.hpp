#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pvs/fields.hpp"
#include "pvs/weights.hpp"

namespace pvs {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Homogeneous binary form of fixed degree; coefficients[m] multiplies
/// v1^(degree-m) * v2^m.
template <class F>
struct BinaryForm {
  int degree = 0;
  std::vector<F> coefficients;

  bool operator==(const BinaryForm&) const = default;
};

/// A pair of n-by-n matrices (x1, x2) over a common field.  Cases 1 and 2 use
/// general matrices; cases 3 and 4 use alternating ones (zero diagonal,
/// entry (k,j) = -entry (j,k)), with the coordinates indexed by j > k.
template <class F>
struct MatrixPencil {
  CaseId case_id = CaseId::Case1_D4;
  Matrix<F> x1;
  Matrix<F> x2;

  bool operator==(const MatrixPencil&) const = default;
};

/// Elements of the symmetry group: one invertible matrix per factor of the
/// case shape.  The final factor is 2-by-2 and mixes x1 with x2.
template <class F>
struct GroupElement {
  CaseId case_id = CaseId::Case1_D4;
  std::vector<Matrix<F>> factors;
};

inline bool pencil_case_alternating(CaseId id) {
  return id == CaseId::Case3_D5 || id == CaseId::Case4_E7;
}

inline std::size_t pencil_matrix_size(CaseId id) {
  return shape_of(id).factors.front();
}

// ---------------------------------------------------------------------------
// Generic matrix helpers.

template <class F>
Matrix<F> zero_matrix(std::size_t n, const F& witness) {
  return Matrix<F>(n, std::vector<F>(n, ring_zero(witness)));
}

template <class F>
Matrix<F> identity_matrix(std::size_t n, const F& witness) {
  Matrix<F> m = zero_matrix(n, witness);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ring_one(witness);
  return m;
}

template <class F>
Matrix<F> mat_transpose(const Matrix<F>& m) {
  const std::size_t n = m.size();
  Matrix<F> out(n, std::vector<F>(n, m[0][0]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j][i] = m[i][j];
  return out;
}

template <class F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("matrix size mismatch");
  Matrix<F> out = zero_matrix(n, a[0][0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

template <class F>
Matrix<F> mat_add(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("matrix size mismatch");
  Matrix<F> out = a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] += b[i][j];
  return out;
}

template <class F>
Matrix<F> mat_scale(const F& c, const Matrix<F>& m) {
  Matrix<F> out = m;
  for (auto& row : out)
    for (auto& e : row) e = c * e;
  return out;
}

/// Exact determinant by Gaussian elimination with division; valid over any
/// field.  Serves both as the invertibility test for group elements and as an
/// oracle independent of the Pfaffian expansion.
template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) throw std::invalid_argument("determinant: empty matrix");
  F det = ring_one(m[0][0]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && ring_is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return ring_zero(det);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const F inv_pivot = ring_one(det) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (ring_is_zero(m[r][col])) continue;
      const F factor = m[r][col] * inv_pivot;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Binary form arithmetic (a graded commutative ring, enough for determinant
// and Pfaffian expansions with linear entries).

template <class F>
BinaryForm<F> operator+(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  if (a.degree != b.degree)
    throw std::invalid_argument("binary form degree mismatch");
  BinaryForm<F> out = a;
  for (std::size_t m = 0; m < out.coefficients.size(); ++m)
    out.coefficients[m] += b.coefficients[m];
  return out;
}

template <class F>
BinaryForm<F> operator-(const BinaryForm<F>& a) {
  BinaryForm<F> out = a;
  for (auto& c : out.coefficients) c = -c;
  return out;
}

template <class F>
BinaryForm<F> operator-(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  return a + (-b);
}

template <class F>
BinaryForm<F> operator*(const BinaryForm<F>& a, const BinaryForm<F>& b) {
  const F zero = ring_zero(a.coefficients.at(0));
  BinaryForm<F> out;
  out.degree = a.degree + b.degree;
  out.coefficients.assign(static_cast<std::size_t>(out.degree) + 1, zero);
  for (std::size_t i = 0; i < a.coefficients.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients.size(); ++j)
      out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  return out;
}

template <class F>
BinaryForm<F>& operator+=(BinaryForm<F>& a, const BinaryForm<F>& b) {
  return a = a + b;
}

template <class F>
BinaryForm<F>& operator*=(BinaryForm<F>& a, const BinaryForm<F>& b) {
  return a = a * b;
}

template <class F>
BinaryForm<F> ring_zero(const BinaryForm<F>& w) {
  BinaryForm<F> out = w;
  for (auto& c : out.coefficients) c = ring_zero(c);
  return out;
}

template <class F>
BinaryForm<F> ring_one(const BinaryForm<F>& w) {
  return BinaryForm<F>{0, {ring_one(w.coefficients.at(0))}};
}

template <class F>
bool ring_is_zero(const BinaryForm<F>& a) {
  for (const auto& c : a.coefficients)
    if (!ring_is_zero(c)) return false;
  return true;
}

template <class F>
F evaluate_form(const BinaryForm<F>& f, const F& v1, const F& v2) {
  F acc = ring_zero(v1);
  for (std::size_t m = 0; m < f.coefficients.size(); ++m) {
    F term = f.coefficients[m];
    for (int e = 0; e < f.degree - static_cast<int>(m); ++e) term *= v1;
    for (std::size_t e = 0; e < m; ++e) term *= v2;
    acc += term;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Pfaffian by expansion over perfect matchings (recursive along the first
// active row, which enumerates exactly the (n-1)!! matchings: 3 terms for
// n = 4 and 15 for n = 6).  Sign convention: the block-diagonal matrix with
// 2-by-2 blocks [[0,1],[-1,0]] has Pfaffian +1.
template <class T>
T pfaffian_on(const std::vector<std::vector<T>>& m,
              const std::vector<std::size_t>& idx, const T& one) {
  if (idx.empty()) return one;
  bool first_term = true;
  bool negative = false;
  T acc = one;
  for (std::size_t t = 1; t < idx.size(); ++t) {
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t u = 1; u < idx.size(); ++u)
      if (u != t) rest.push_back(idx[u]);
    T term = m[idx[0]][idx[t]] * pfaffian_on(m, rest, one);
    if (negative) term = -term;
    if (first_term) {
      acc = term;
      first_term = false;
    } else {
      acc += term;
    }
    negative = !negative;
  }
  return acc;
}

template <class T>
T pfaffian(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("pfaffian: size must be even and positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("pfaffian: not square");
    if (!ring_is_zero(m[i][i]))
      throw std::invalid_argument("pfaffian: nonzero diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (!ring_is_zero(m[i][j] + m[j][i]))
        throw std::invalid_argument("pfaffian: matrix not alternating");
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return pfaffian_on(m, idx, ring_one(m[0][1]));
}

// ---------------------------------------------------------------------------
// Pencil construction and coordinate access.

template <class F>
void validate_pencil(const MatrixPencil<F>& x) {
  const std::size_t n = pencil_matrix_size(x.case_id);
  for (const Matrix<F>* side : {&x.x1, &x.x2}) {
    if (side->size() != n) throw std::invalid_argument("pencil: wrong matrix size");
    for (const auto& row : *side)
      if (row.size() != n) throw std::invalid_argument("pencil: ragged matrix");
    if (pencil_case_alternating(x.case_id)) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!ring_is_zero((*side)[i][i]))
          throw std::invalid_argument("pencil: nonzero diagonal");
        for (std::size_t j = 0; j < i; ++j)
          if (!ring_is_zero((*side)[i][j] + (*side)[j][i]))
            throw std::invalid_argument("pencil: matrix not alternating");
      }
    }
  }
}

template <class F>
MatrixPencil<F> zero_pencil(CaseId id, const F& witness) {
  const std::size_t n = pencil_matrix_size(id);
  return MatrixPencil<F>{id, zero_matrix(n, witness), zero_matrix(n, witness)};
}

template <class F>
const F& get_coordinate(const MatrixPencil<F>& x, const CoordinateId& c) {
  if (!valid_coordinate(x.case_id, c))
    throw std::invalid_argument("pencil: bad coordinate");
  const Matrix<F>& side = (c.i == 1) ? x.x1 : x.x2;
  return side[c.j - 1][c.k - 1];
}

template <class F>
void set_coordinate(MatrixPencil<F>& x, const CoordinateId& c, const F& v) {
  if (!valid_coordinate(x.case_id, c))
    throw std::invalid_argument("pencil: bad coordinate");
  Matrix<F>& side = (c.i == 1) ? x.x1 : x.x2;
  side[c.j - 1][c.k - 1] = v;
  if (pencil_case_alternating(x.case_id)) side[c.k - 1][c.j - 1] = -v;
}

/// Builds a pencil from the values listed in the order of coordinates(id).
template <class F>
MatrixPencil<F> pencil_from_coordinates(CaseId id, const std::vector<F>& values) {
  const auto coords = coordinates(id);
  if (values.size() != coords.size())
    throw std::invalid_argument("pencil: coordinate count mismatch");
  MatrixPencil<F> x = zero_pencil(id, values.at(0));
  for (std::size_t m = 0; m < coords.size(); ++m)
    set_coordinate(x, coords[m], values[m]);
  return x;
}

// ---------------------------------------------------------------------------
// Group action.  Writing M_x(v) = v1*x1 + v2*x2, the action is
//   cases 1-2:  M_{g x}(v) = g1 * M_x(v g3) * (g2)^t
//   cases 3-4:  M_{g x}(v) = g1 * M_x(v g2) * (g1)^t
// which on the pair (x1, x2) mixes the sides by the rows of the final factor.

template <class F>
void validate_group_element(const GroupElement<F>& g) {
  const GroupShape shape = shape_of(g.case_id);
  if (g.factors.size() != shape.factors.size())
    throw std::invalid_argument("group element: wrong factor count");
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    const std::size_t n = shape.factors[f];
    if (g.factors[f].size() != n)
      throw std::invalid_argument("group element: wrong factor size");
    for (const auto& row : g.factors[f])
      if (row.size() != n)
        throw std::invalid_argument("group element: ragged factor");
    if (ring_is_zero(determinant(g.factors[f])))
      throw std::invalid_argument("group element: singular factor");
  }
}

template <class F>
GroupElement<F> identity_element(CaseId id, const F& witness) {
  GroupElement<F> g{id, {}};
  for (std::size_t n : shape_of(id).factors)
    g.factors.push_back(identity_matrix(n, witness));
  return g;
}

template <class F>
MatrixPencil<F> act(const GroupElement<F>& g, const MatrixPencil<F>& x) {
  if (g.case_id != x.case_id)
    throw std::invalid_argument("act: case mismatch");
  validate_group_element(g);
  validate_pencil(x);
  const Matrix<F>& mix = g.factors.back();
  const Matrix<F>& left = g.factors[0];
  const Matrix<F> right =
      mat_transpose(pencil_case_alternating(x.case_id) ? g.factors[0] : g.factors[1]);
  MatrixPencil<F> out = x;
  const Matrix<F>* sides[2] = {&x.x1, &x.x2};
  Matrix<F>* results[2] = {&out.x1, &out.x2};
  for (std::size_t i = 0; i < 2; ++i) {
    Matrix<F> mixed = mat_scale(mix[i][0], *sides[0]);
    mixed = mat_add(mixed, mat_scale(mix[i][1], *sides[1]));
    *results[i] = mat_mul(mat_mul(left, mixed), right);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The invariant binary form of a pencil: determinant of v1*x1 + v2*x2 for the
// square cases, Pfaffian for the alternating ones.

template <class F>
BinaryForm<F> f_x(const MatrixPencil<F>& x) {
  validate_pencil(x);
  const std::size_t n = pencil_matrix_size(x.case_id);
  const F zero = ring_zero(x.x1[0][0]);
  std::vector<std::vector<BinaryForm<F>>> linear(
      n, std::vector<BinaryForm<F>>(n, BinaryForm<F>{1, {zero, zero}}));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      linear[j][k].coefficients = {x.x1[j][k], x.x2[j][k]};
  if (pencil_case_alternating(x.case_id)) return pfaffian(linear);
  if (n == 2)
    return linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0];
  // n == 3: Leibniz expansion.
  return linear[0][0] * (linear[1][1] * linear[2][2] - linear[1][2] * linear[2][1]) -
         linear[0][1] * (linear[1][0] * linear[2][2] - linear[1][2] * linear[2][0]) +
         linear[0][2] * (linear[1][0] * linear[2][1] - linear[1][1] * linear[2][0]);
}

// ---------------------------------------------------------------------------
// Stability predicates (definitions in src/pencils.cpp, one overload per base
// field since the squarefree and rational-point tests differ).

bool squarefree_form(const BinaryForm<Rat>& f);
bool squarefree_form(const BinaryForm<Fp>& f);

bool rational_root_free(const BinaryForm<Rat>& f);
bool rational_root_free(const BinaryForm<Fp>& f);

bool is_semistable(const MatrixPencil<Rat>& x);
bool is_semistable(const MatrixPencil<Fp>& x);

bool in_L0(const MatrixPencil<Rat>& x);
bool in_L0(const MatrixPencil<Fp>& x);

// ---------------------------------------------------------------------------
// JSON serialization.  Shape:
//   {"case": 3, "field": "Q" | "Fp:5", "x1": [[...]], "x2": [[...]]}
// with rationals rendered as "p/q" strings and prime-field entries as plain
// integers in [0, p).

using PencilVariant = std::variant<MatrixPencil<Rat>, MatrixPencil<Fp>>;

nlohmann::ordered_json pencil_to_json(const PencilVariant& x);
PencilVariant pencil_from_json(const nlohmann::json& j);

}  // namespace pvs
