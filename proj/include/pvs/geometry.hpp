#pragma once

#include <cstddef>
#include <vector>

#include "pvs/rational.hpp"

namespace pvs {

// Reduce to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RVector>& matrix);

std::size_t rank(std::vector<RVector> matrix);

// Basis of the right kernel { x : M x = 0 }.
std::vector<RVector> kernel(std::vector<RVector> matrix);

/// Outcome of the origin-in-interior test for conv(points).
/// Exactly one of the two certificates is populated:
///  - interior: strictly positive coefficients, summing to one, whose
///    weighted point sum is the zero vector (and the points span the space);
///  - otherwise: a nonzero separator l with <l, v> <= 0 for every point v,
///    which places all points in a closed half-space.
struct PositiveCombination {
  bool interior = false;
  RVector coefficients;
  RVector separator;
};

PositiveCombination positive_combination(const std::vector<RVector>& points);

bool contains_origin_interior(const std::vector<RVector>& points);

// Independent re-check of either certificate branch.
bool check_positive_combination(const std::vector<RVector>& points,
                                const PositiveCombination& claim);

/// Best achievable lower bound on the entries of a convex combination:
/// margin = max over weights >= 0 summing to one of min_i (sum_p w_p v_p)_i.
/// strict is margin > 0, i.e. some convex combination is entrywise positive.
struct ConeWitness {
  bool strict = false;
  Rat margin;
  RVector weights;
};

ConeWitness strict_cone_feasible(const std::vector<RVector>& points);

// Validates a strict witness: weights in the simplex and the combination
// entrywise at least the (positive) margin.
bool check_cone_witness(const std::vector<RVector>& points,
                        const ConeWitness& claim);

/// Nonnegative coefficients (c1, c2, c3), of minimal total sum, expressing
/// (a, b) as c1*(-1/3,-2/3) + c2*(-1/3,1/3) + c3*(2/3,1/3).
/// Throws when no nonnegative combination exists.
RVector solve_plane_combination(const Rat& a, const Rat& b);

}  // namespace pvs
