#include "pvs/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pvs {

namespace {

bool square_case(CaseId c) {
  return c == CaseId::Case1_D4 || c == CaseId::Case2_E6;
}

// e_idx - (1/n) * ones, the trace-zero form of a standard character (1-based).
RVector centered_basis(int n, int idx) {
  RVector v(static_cast<std::size_t>(n), Rat(-1, n));
  v[static_cast<std::size_t>(idx - 1)] += 1;
  return v;
}

void require_shape(const ExponentVector& d, const GroupShape& shape) {
  if (d.d_blocks.size() != shape.factors.size()) {
    throw std::invalid_argument("block count does not match the group shape");
  }
  for (std::size_t b = 0; b < d.d_blocks.size(); ++b) {
    if (d.d_blocks[b].size() !=
        static_cast<std::size_t>(shape.factors[b] - 1)) {
      throw std::invalid_argument("block length does not match the factor");
    }
  }
}

void require_same_layout(const ExponentVector& a, const ExponentVector& b) {
  if (a.d_blocks.size() != b.d_blocks.size()) {
    throw std::invalid_argument("mismatched block counts");
  }
  for (std::size_t i = 0; i < a.d_blocks.size(); ++i) {
    if (a.d_blocks[i].size() != b.d_blocks[i].size()) {
      throw std::invalid_argument("mismatched block sizes");
    }
  }
}

}  // namespace

int case_number(CaseId c) {
  switch (c) {
    case CaseId::Case1_D4:
      return 1;
    case CaseId::Case2_E6:
      return 2;
    case CaseId::Case3_D5:
      return 3;
    case CaseId::Case4_E7:
      return 4;
  }
  throw std::logic_error("bad case id");
}

CaseId case_from_number(int number) {
  switch (number) {
    case 1:
      return CaseId::Case1_D4;
    case 2:
      return CaseId::Case2_E6;
    case 3:
      return CaseId::Case3_D5;
    case 4:
      return CaseId::Case4_E7;
  }
  throw std::invalid_argument("case number must be 1..4");
}

std::string case_label(CaseId c) {
  return "case" + std::to_string(case_number(c));
}

GroupShape shape_of(CaseId c) {
  switch (c) {
    case CaseId::Case1_D4:
      return {{2, 2, 2}};
    case CaseId::Case2_E6:
      return {{3, 3, 2}};
    case CaseId::Case3_D5:
      return {{4, 2}};
    case CaseId::Case4_E7:
      return {{6, 2}};
  }
  throw std::logic_error("bad case id");
}

std::vector<CoordinateId> coordinates(CaseId c) {
  const GroupShape sh = shape_of(c);
  std::vector<CoordinateId> out;
  for (int i = 1; i <= 2; ++i) {
    if (square_case(c)) {
      for (int j = 1; j <= sh.factors[0]; ++j) {
        for (int k = 1; k <= sh.factors[1]; ++k) out.push_back({i, j, k});
      }
    } else {
      for (int j = 2; j <= sh.factors[0]; ++j) {
        for (int k = 1; k < j; ++k) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

bool valid_coordinate(CaseId c, const CoordinateId& id) {
  if (id.i != 1 && id.i != 2) return false;
  const GroupShape sh = shape_of(c);
  if (square_case(c)) {
    return id.j >= 1 && id.j <= sh.factors[0] && id.k >= 1 &&
           id.k <= sh.factors[1];
  }
  return id.k >= 1 && id.k < id.j && id.j <= sh.factors[0];
}

std::string coordinate_label(const CoordinateId& id) {
  return "(" + std::to_string(id.i) + "," + std::to_string(id.j) +
         std::to_string(id.k) + ")";
}

ExponentVector ev_add(const ExponentVector& a, const ExponentVector& b) {
  require_same_layout(a, b);
  ExponentVector out;
  out.d_blocks.reserve(a.d_blocks.size());
  for (std::size_t i = 0; i < a.d_blocks.size(); ++i) {
    out.d_blocks.push_back(add(a.d_blocks[i], b.d_blocks[i]));
  }
  if (a.lambda_exp || b.lambda_exp) {
    out.lambda_exp = a.lambda_exp.value_or(Rat(0)) + b.lambda_exp.value_or(Rat(0));
  }
  return out;
}

ExponentVector ev_sub(const ExponentVector& a, const ExponentVector& b) {
  return ev_add(a, ev_scale(Rat(-1), b));
}

ExponentVector ev_scale(const Rat& c, const ExponentVector& a) {
  ExponentVector out;
  out.d_blocks.reserve(a.d_blocks.size());
  for (const RVector& blk : a.d_blocks) out.d_blocks.push_back(scale(c, blk));
  if (a.lambda_exp) out.lambda_exp = c * *a.lambda_exp;
  return out;
}

ExponentVector ev_zero(CaseId c) {
  const GroupShape sh = shape_of(c);
  ExponentVector out;
  for (int n : sh.factors) {
    out.d_blocks.emplace_back(static_cast<std::size_t>(n - 1), Rat(0));
  }
  return out;
}

RVector ev_flat(const ExponentVector& v, bool with_lambda) {
  RVector out;
  for (const RVector& blk : v.d_blocks) {
    out.insert(out.end(), blk.begin(), blk.end());
  }
  if (with_lambda) out.push_back(v.lambda_exp.value_or(Rat(0)));
  return out;
}

std::string ev_to_string(const ExponentVector& v) {
  std::string s = "(";
  for (std::size_t b = 0; b < v.d_blocks.size(); ++b) {
    if (b) s += ",";
    const RVector& blk = v.d_blocks[b];
    if (blk.size() == 1) {
      s += rat_to_string(blk[0]);
    } else {
      s += "(";
      for (std::size_t i = 0; i < blk.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(blk[i]);
      }
      s += ")";
    }
  }
  s += ")";
  if (v.lambda_exp) s += " | lambda " + rat_to_string(*v.lambda_exp);
  return s;
}

std::vector<RVector> w_map(const ExponentVector& d, const GroupShape& shape) {
  require_shape(d, shape);
  std::vector<RVector> out;
  for (std::size_t b = 0; b < d.d_blocks.size(); ++b) {
    const RVector& c = d.d_blocks[b];
    const std::size_t n = static_cast<std::size_t>(shape.factors[b]);
    RVector y(n, Rat(0));
    for (std::size_t m = 0; m < n; ++m) {
      if (m < c.size()) y[m] += c[m];
      if (m >= 1) y[m] -= c[m - 1];
    }
    out.push_back(std::move(y));
  }
  return out;
}

ExponentVector w_inverse(const std::vector<RVector>& y) {
  ExponentVector out;
  for (const RVector& blk : y) {
    Rat total = 0;
    for (const Rat& v : blk) total += v;
    if (total != 0) {
      throw std::invalid_argument("block does not sum to zero");
    }
    RVector c;
    Rat acc = 0;
    for (std::size_t m = 0; m + 1 < blk.size(); ++m) {
      acc += blk[m];
      c.push_back(acc);
    }
    out.d_blocks.push_back(std::move(c));
  }
  return out;
}

const ExponentVector& WeightTable::at(const CoordinateId& id) const {
  auto it = entries.find(id);
  if (it == entries.end()) {
    throw std::invalid_argument("unknown coordinate " + coordinate_label(id));
  }
  return it->second.d;
}

ExponentVector derive_weight(CaseId c, const CoordinateId& id) {
  if (!valid_coordinate(c, id)) {
    throw std::invalid_argument("invalid coordinate " + coordinate_label(id));
  }
  const GroupShape sh = shape_of(c);
  std::vector<RVector> y;
  if (square_case(c)) {
    // x'_{i,jk} = t1_j t2_k t3_i x_{i,jk}
    y.push_back(centered_basis(sh.factors[0], id.j));
    y.push_back(centered_basis(sh.factors[1], id.k));
    y.push_back(centered_basis(sh.factors[2], id.i));
  } else {
    // x'_{i,jk} = t1_j t1_k t2_i x_{i,jk}
    const int n = sh.factors[0];
    RVector v(static_cast<std::size_t>(n), Rat(-2, n));
    v[static_cast<std::size_t>(id.j - 1)] += 1;
    v[static_cast<std::size_t>(id.k - 1)] += 1;
    y.push_back(std::move(v));
    y.push_back(centered_basis(2, id.i));
  }
  return w_inverse(y);
}

namespace {

ExponentVector make_ev(std::vector<RVector> blocks) {
  ExponentVector out;
  out.d_blocks = std::move(blocks);
  return out;
}

// Transcribed i = 1 rows of the reference tables, keyed by (j, k).
std::map<std::pair<int, int>, ExponentVector> transcribed_rows(CaseId c) {
  std::map<std::pair<int, int>, ExponentVector> t;
  const Rat h(1, 2);
  switch (c) {
    case CaseId::Case1_D4:
      t[{1, 1}] = make_ev({{h}, {h}, {h}});
      t[{1, 2}] = make_ev({{h}, {-h}, {h}});
      t[{2, 1}] = make_ev({{-h}, {h}, {h}});
      break;
    case CaseId::Case2_E6: {
      const RVector hi = {Rat(2, 3), Rat(1, 3)};
      const RVector mid = {Rat(-1, 3), Rat(1, 3)};
      const RVector lo = {Rat(-1, 3), Rat(-2, 3)};
      t[{1, 1}] = make_ev({hi, hi, {h}});
      t[{1, 2}] = make_ev({hi, mid, {h}});
      t[{1, 3}] = make_ev({hi, lo, {h}});
      t[{2, 1}] = make_ev({mid, hi, {h}});
      t[{2, 2}] = make_ev({mid, mid, {h}});
      t[{3, 1}] = make_ev({lo, hi, {h}});
      break;
    }
    case CaseId::Case3_D5:
      t[{2, 1}] = make_ev({{h, Rat(1), h}, {h}});
      t[{3, 1}] = make_ev({{h, Rat(0), h}, {h}});
      t[{4, 1}] = make_ev({{h, Rat(0), -h}, {h}});
      t[{3, 2}] = make_ev({{-h, Rat(0), h}, {h}});
      t[{4, 2}] = make_ev({{-h, Rat(0), -h}, {h}});
      t[{4, 3}] = make_ev({{-h, Rat(-1), -h}, {h}});
      break;
    case CaseId::Case4_E7: {
      auto r = [](int a, int b, int cc, int d, int e) {
        return RVector{Rat(a, 3), Rat(b, 3), Rat(cc, 3), Rat(d, 3), Rat(e, 3)};
      };
      t[{2, 1}] = make_ev({r(2, 4, 3, 2, 1), {h}});
      t[{3, 1}] = make_ev({r(2, 1, 3, 2, 1), {h}});
      t[{4, 1}] = make_ev({r(2, 1, 0, 2, 1), {h}});
      t[{5, 1}] = make_ev({r(2, 1, 0, -1, 1), {h}});
      t[{6, 1}] = make_ev({r(2, 1, 0, -1, -2), {h}});
      t[{3, 2}] = make_ev({r(-1, 1, 3, 2, 1), {h}});
      t[{4, 2}] = make_ev({r(-1, 1, 0, 2, 1), {h}});
      t[{5, 2}] = make_ev({r(-1, 1, 0, -1, 1), {h}});
      t[{6, 2}] = make_ev({r(-1, 1, 0, -1, -2), {h}});
      t[{4, 3}] = make_ev({r(-1, -2, 0, 2, 1), {h}});
      t[{5, 3}] = make_ev({r(-1, -2, 0, -1, 1), {h}});
      t[{6, 3}] = make_ev({r(-1, -2, 0, -1, -2), {h}});
      t[{5, 4}] = make_ev({r(-1, -2, -3, -1, 1), {h}});
      t[{6, 4}] = make_ev({r(-1, -2, -3, -1, -2), {h}});
      t[{6, 5}] = make_ev({r(-1, -2, -3, -4, -2), {h}});
      break;
    }
  }
  return t;
}

}  // namespace

WeightTable weight_table(CaseId c) {
  WeightTable table;
  table.case_id = c;
  const auto rows = transcribed_rows(c);
  for (const CoordinateId& id : coordinates(c)) {
    if (id.i != 1) continue;
    auto it = rows.find({id.j, id.k});
    if (it != rows.end()) {
      table.entries[id] = {it->second, false};
    } else {
      table.entries[id] = {derive_weight(c, id), true};
    }
  }
  // Stated rule for the other pencil slot: flip the final block's 1/2.
  for (const CoordinateId& id : coordinates(c)) {
    if (id.i != 2) continue;
    WeightEntry e = table.entries.at({1, id.j, id.k});
    e.d.d_blocks.back() = {Rat(-1, 2)};
    table.entries[id] = std::move(e);
  }
  return table;
}

std::vector<WeightDiscrepancy> compare_weight_tables(CaseId c) {
  std::vector<WeightDiscrepancy> out;
  const WeightTable table = weight_table(c);
  for (const auto& [id, entry] : table.entries) {
    const ExponentVector oracle = derive_weight(c, id);
    if (!(oracle == entry.d)) out.push_back({id, entry.d, oracle});
  }
  return out;
}

ExponentVector rho_d0(CaseId c) {
  switch (c) {
    case CaseId::Case3_D5:
      return make_ev({{Rat(-3), Rat(-4), Rat(-3)}, {Rat(-1)}});
    case CaseId::Case4_E7:
      return make_ev(
          {{Rat(-5), Rat(-8), Rat(-9), Rat(-8), Rat(-5)}, {Rat(-1)}});
    default:
      break;
  }
  // Square-matrix cases: -2 * (sum of positive roots), whose block entries
  // are -2(n + 1 - 2m), converted to d-coordinates.
  const GroupShape sh = shape_of(c);
  std::vector<RVector> y;
  for (int n : sh.factors) {
    RVector blk(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
      blk[static_cast<std::size_t>(m - 1)] = Rat(-2 * (n + 1 - 2 * m));
    }
    y.push_back(std::move(blk));
  }
  return w_inverse(y);
}

std::vector<RVector> weyl_act(
    const std::vector<std::vector<std::size_t>>& perms,
    const std::vector<RVector>& y) {
  if (perms.size() != y.size()) {
    throw std::invalid_argument("one permutation per block required");
  }
  std::vector<RVector> out;
  for (std::size_t b = 0; b < y.size(); ++b) {
    if (perms[b].size() != y[b].size()) {
      throw std::invalid_argument("permutation degree mismatch");
    }
    RVector blk(y[b].size());
    for (std::size_t m = 0; m < y[b].size(); ++m) blk[perms[b][m]] = y[b][m];
    out.push_back(std::move(blk));
  }
  return out;
}

std::vector<std::size_t> sorting_permutation(const RVector& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  std::vector<std::size_t> perm(v.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) perm[order[pos]] = pos;
  return perm;
}

CoordinateId relabel_coordinate(
    CaseId c, const std::vector<std::vector<std::size_t>>& perms,
    const CoordinateId& id) {
  const GroupShape sh = shape_of(c);
  if (perms.size() != sh.factors.size()) {
    throw std::invalid_argument("one permutation per factor required");
  }
  auto apply = [&](std::size_t factor, int index) {
    const auto& p = perms[factor];
    if (p.size() != static_cast<std::size_t>(sh.factors[factor])) {
      throw std::invalid_argument("permutation degree mismatch");
    }
    return static_cast<int>(p[static_cast<std::size_t>(index - 1)]) + 1;
  };
  if (square_case(c)) {
    return {apply(2, id.i), apply(0, id.j), apply(1, id.k)};
  }
  const int a = apply(0, id.j);
  const int b = apply(0, id.k);
  return {apply(1, id.i), std::max(a, b), std::min(a, b)};
}

ExponentVector weight_sum(
    const WeightTable& table,
    const std::vector<std::pair<CoordinateId, Rat>>& combo) {
  ExponentVector acc = ev_zero(table.case_id);
  for (const auto& [id, coeff] : combo) {
    acc = ev_add(acc, ev_scale(coeff, table.at(id)));
  }
  return acc;
}

}  // namespace pvs
