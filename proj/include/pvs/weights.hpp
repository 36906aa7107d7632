#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvs/rational.hpp"

namespace pvs {

/// The four built-in spaces: pairs of 2x2 matrices under GL2^3, pairs of 3x3
/// matrices under GL3^2 x GL2, and pairs of alternating 4x4 / 6x6 matrices
/// under GL4 x GL2 / GL6 x GL2 (types D4, E6, D5, E7).
enum class CaseId { Case1_D4, Case2_E6, Case3_D5, Case4_E7 };

inline constexpr CaseId kAllCases[] = {CaseId::Case1_D4, CaseId::Case2_E6,
                                       CaseId::Case3_D5, CaseId::Case4_E7};

int case_number(CaseId c);            // 1..4
CaseId case_from_number(int number);  // inverse of the above
std::string case_label(CaseId c);     // "case1".."case4"

/// Sizes (n_1, ..., n_f) of the general linear factors.
struct GroupShape {
  std::vector<int> factors;

  std::size_t d_dimension() const {
    std::size_t d = 0;
    for (int n : factors) d += static_cast<std::size_t>(n - 1);
    return d;
  }
};

GroupShape shape_of(CaseId c);

/// Coordinate x_{i,jk}: i picks the pencil member, (j,k) the matrix entry.
/// The alternating cases store the strictly lower triangle, j > k.
struct CoordinateId {
  int i = 1;
  int j = 1;
  int k = 1;

  auto operator<=>(const CoordinateId&) const = default;
};

std::vector<CoordinateId> coordinates(CaseId c);
bool valid_coordinate(CaseId c, const CoordinateId& id);
std::string coordinate_label(const CoordinateId& id);  // "(1,21)"

/// A character in per-factor d-coordinates (block i has length n_i - 1),
/// optionally carrying a scale-variable exponent used by the convergence
/// bookkeeping. An absent lambda_exp combines as zero and stays absent when
/// every operand lacks it.
struct ExponentVector {
  std::vector<RVector> d_blocks;
  std::optional<Rat> lambda_exp;

  bool operator==(const ExponentVector&) const = default;
};

ExponentVector ev_add(const ExponentVector& a, const ExponentVector& b);
ExponentVector ev_sub(const ExponentVector& a, const ExponentVector& b);
ExponentVector ev_scale(const Rat& c, const ExponentVector& a);
ExponentVector ev_zero(CaseId c);

/// Concatenated d-blocks; with_lambda appends lambda_exp (absent -> 0).
RVector ev_flat(const ExponentVector& v, bool with_lambda = false);

std::string ev_to_string(const ExponentVector& v);

/// d-coordinates -> per-factor trace-zero characters:
/// block entries y_1 = c_1, y_m = c_m - c_{m-1}, y_n = -c_{n-1}.
std::vector<RVector> w_map(const ExponentVector& d, const GroupShape& shape);

/// Inverse: partial sums of each trace-zero block.
ExponentVector w_inverse(const std::vector<RVector>& y);

/// One table entry; derived_fill marks coordinates the transcribed source
/// table omits, which are filled in from derive_weight instead.
struct WeightEntry {
  ExponentVector d;
  bool derived_fill = false;
};

struct WeightTable {
  CaseId case_id = CaseId::Case1_D4;
  std::map<CoordinateId, WeightEntry> entries;

  const ExponentVector& at(const CoordinateId& id) const;
};

/// The reference table: transcribed values for the coordinates the source
/// table lists, the stated "flip the final 1/2" rule for i = 2, and
/// derive_weight fills for the rest.
WeightTable weight_table(CaseId c);

/// Independent oracle: reads the weight off the torus action on x_{i,jk}
/// symbolically and converts to d-coordinates.
ExponentVector derive_weight(CaseId c, const CoordinateId& id);

struct WeightDiscrepancy {
  CoordinateId coordinate;
  ExponentVector tabulated;
  ExponentVector derived;
};

/// Every disagreement between the reference table and the oracle. Expected
/// empty; never patched silently.
std::vector<WeightDiscrepancy> compare_weight_tables(CaseId c);

/// d-coordinates of the Haar-measure exponent. The square-matrix cases use
/// -2*rho from the positive-root product; the alternating cases consume the
/// half-normalized constants that all downstream exponent bookkeeping is
/// written against.
ExponentVector rho_d0(CaseId c);

/// Entry permutation per block: output[perm[m]] = input[m].
std::vector<RVector> weyl_act(const std::vector<std::vector<std::size_t>>& perms,
                              const std::vector<RVector>& y);

/// Permutation sorting v into weakly decreasing order (stable).
std::vector<std::size_t> sorting_permutation(const RVector& v);

/// Index relabeling induced by per-factor permutations (0-based perms over
/// 1-based indices); alternating cases re-sort the pair to keep j > k.
CoordinateId relabel_coordinate(CaseId c,
                                const std::vector<std::vector<std::size_t>>& perms,
                                const CoordinateId& id);

/// Exact linear combination of table entries.
ExponentVector weight_sum(const WeightTable& table,
                          const std::vector<std::pair<CoordinateId, Rat>>& combo);

}  // namespace pvs
