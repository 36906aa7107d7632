#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pvs/strata.hpp"

namespace pvs {

// ---------------------------------------------------------------------------
// Exponent calculus for the alternating cases.  Convergence of the zeta
// integrals reduces to sign conditions on exponent vectors: each stratum of
// the semistable set contributes a bound of the form
//
//   (scale)^(-sum N_q) * sup(1, scale^(lambda)) * t^(base - sum N_q dir_q)
//
// and the integral converges once some nonnegative N makes every entry of the
// exponent negative while a ray of directions pushes the scale exponent down
// without limit.  Everything here is exact rational arithmetic.

/// A subset of the index set I_0 = all coordinate labels of a case.
struct IndexSet {
  CaseId case_id = CaseId::Case3_D5;
  std::vector<CoordinateId> members;  // strictly increasing, no duplicates

  bool operator==(const IndexSet&) const = default;
};

IndexSet full_index_set(CaseId c);  // alternating cases only
IndexSet index_set_minus(CaseId c, const std::vector<CoordinateId>& removed);

/// Logarithmic torus point: tau pairs with the flattened d-coordinates (all
/// entries >= 0 in the test region), ell is the log of the scale variable.
struct TorusLogPoint {
  RVector tau;
  Rat ell;
};

/// log of prod_{(i,j,k) in I} sup(1, scale^-1 t^-gamma_{i,jk}):
/// sum of max(0, -ell - <d_{i,jk}, tau>).
Rat log_h(const IndexSet& I, const TorusLogPoint& p);

/// Coordinatewise sum of the negative entries of the member weights; the
/// lambda component records -#I (the worst-case scale power).
ExponentVector negative_envelope(const IndexSet& I);

/// Measure exponent plus the envelope bound: rho_d0 - negative_envelope,
/// keeping lambda_exp = -#I.  This is the base exponent a stratum's
/// certificate has to drive negative.
ExponentVector residual_exponent(const IndexSet& I);

struct HLemmaReport {
  std::uint64_t trials = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
};

/// Randomized verification of the h-function laws: monotonicity in the index
/// set, additivity over disjoint unions, equality with the exhaustive
/// subset maximum, and the envelope upper bound
/// log_h <= max(0, -#I * ell) + <-envelope, tau> on tau >= 0.
HLemmaReport verify_h_lemmas(CaseId c, std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Identity manifest: the displayed weight combinations the convergence
// argument relies on, re-evaluated exactly against the weight table.

struct IdentityCheck {
  std::string label;
  CaseId case_id = CaseId::Case1_D4;
  std::vector<std::pair<CoordinateId, Rat>> combo;
  ExponentVector expected;  // exact recomputed value the check asserts
  // Present when the transcription source disagrees with the exact
  // recomputation; kept so reports can show both values.
  std::optional<ExponentVector> transcribed;
  bool holds = false;
};

std::vector<IdentityCheck> check_identities(CaseId c);
nlohmann::ordered_json identity_to_json(const IdentityCheck& check);

// ---------------------------------------------------------------------------
// Convergence certificates.

/// One certificate direction: a nonnegative combination of coordinate
/// weights.  exponent carries the combination's value with lambda_exp set to
/// the sum of the combination coefficients (the scale-decay units bought per
/// unit of this direction).  A weakened direction stores an entrywise lower
/// bound of the exact combination instead (dropping positive entries), which
/// is sound: certifying with the smaller vector certifies the original.
struct DirectionSpec {
  std::string label;
  std::vector<std::pair<CoordinateId, Rat>> combo;
  ExponentVector exponent;
  bool weakened = false;
};

/// How an item's base exponent is built:
///  - Residual: residual_exponent of I_0 minus the item's removed set;
///  - BoxP / BoxQ: the two parametric families over the (a, b) box, certified
///    at its four vertices (the base is affine in (a, b) and the feasible
///    region is convex, so vertex certificates cover the whole box).
enum class BaseForm { Residual, BoxP, BoxQ };

/// The parametric family bases: fixed part plus a- and b-linear parts.
ExponentVector family_base(BaseForm form, const Rat& a, const Rat& b);
const std::vector<std::pair<Rat, Rat>>& box_vertices();  // 4 corners

/// Declarative per-stratum item: base recipe, forced-nonzero directions, the
/// documented ray, coordinate dominations used to reduce to these directions,
/// and the stated threshold where the source pins one.
struct StratumItem {
  StratumId stratum;
  BaseForm base_form = BaseForm::Residual;
  std::vector<CoordinateId> removed;
  std::vector<DirectionSpec> directions;
  RVector ray;
  // (stronger, weaker): replacing the stronger coordinate's weight by the
  // weaker one is sound iff d_stronger - d_weaker >= 0 entrywise.
  std::vector<std::pair<CoordinateId, CoordinateId>> dominations;
  std::optional<Rat> pinned_threshold;
};

const std::vector<StratumItem>& stratum_manifest(CaseId c);
nlohmann::ordered_json stratum_manifest_json(CaseId c);

/// Exact strict feasibility: nonnegative coefficients with
/// base - sum coeff*dir entrywise negative (flattened d-part, trailing block,
/// and lambda row all included).  margin is the best achievable gap (capped
/// at 1).  When no such coefficients exist the separator certifies it:
/// sep >= 0, sep != 0, sep.dir_q <= 0 for all q, sep.base >= 0.
struct CertificateSearch {
  bool feasible = false;
  RVector coefficients;
  Rat margin;
  RVector separator;
};

CertificateSearch find_certificate(const ExponentVector& base,
                                   const std::vector<ExponentVector>& directions);

/// Exact infimum of N with base - N*dir entrywise negative, for an entrywise
/// nonnegative direction; nullopt if some direction entry is negative or a
/// zero entry faces a nonnegative base entry.
std::optional<Rat> single_direction_threshold(const ExponentVector& base,
                                              const ExponentVector& direction);

/// One certified corner: the (a, b) vertex (zero for Residual items), the
/// evaluated base, and LP-found coefficients with their strictness margin.
struct CornerCertificate {
  Rat a;
  Rat b;
  ExponentVector base;
  RVector coefficients;
  Rat margin;
};

struct ConvergenceCertificate {
  StratumId stratum;
  BaseForm base_form = BaseForm::Residual;
  std::vector<CoordinateId> removed;  // Residual items: I = I_0 minus these
  std::vector<DirectionSpec> directions;
  RVector ray;
  std::vector<CornerCertificate> corners;  // 1 (Residual) or 4 (Box forms)
  std::optional<Rat> threshold;            // exact, single-direction items
  std::optional<Rat> documented_threshold;
  std::vector<std::pair<CoordinateId, CoordinateId>> dominations;
  // For box items: which of the two family forms certifies with these
  // directions.  Both are computed; items needing the tighter form have
  // p_form_feasible == false.
  std::optional<bool> p_form_feasible;
  std::optional<bool> q_form_feasible;
};

/// Assemble and prove one item's certificate; throws std::runtime_error
/// naming the stratum if any corner has no certificate, and std::logic_error
/// if manifest data fails its internal validation (direction values,
/// dominations, pinned thresholds).
ConvergenceCertificate certify_stratum(const StratumItem& item);

/// All items of a case, searched in parallel, in manifest order.
std::vector<ConvergenceCertificate> stratum_certificates(CaseId c);

/// Full from-scratch re-validation of every claim a certificate makes.
bool check_certificate(const ConvergenceCertificate& cert);

nlohmann::ordered_json certificate_to_json(const ConvergenceCertificate& cert);

nlohmann::ordered_json ev_to_json(const ExponentVector& v);

}  // namespace pvs
