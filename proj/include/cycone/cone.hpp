#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycone/bundle.hpp"
#include "cycone/chow.hpp"
#include "cycone/cohom.hpp"
#include "cycone/cyinv.hpp"
#include "cycone/quad.hpp"

namespace cycone {

struct Witness {
  std::string test;
  Rational value;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Positivity of -K_Z. Invariants: ample implies nef; nef with (-K_Z)^4 > 0
/// implies big.
struct MinusKStatus {
  Tri nef = Tri::Unknown;
  Tri ample = Tri::Unknown;
  Tri big = Tri::Unknown;
  Tri h0_gt_1 = Tri::Unknown;
  std::vector<Witness> witnesses;

  Tri big_and_nef() const;
  friend bool operator==(const MinusKStatus&, const MinusKStatus&) = default;
};

MinusKStatus minusK_status(const BundleSpec& spec);

/// rho(X) with the -K_Z status computed here.
RhoResult rho_of_X(const BundleSpec& spec);

/// Ray normalization for the boundary root: D = O_X(3) - k pi^*h (OZ3) or
/// D = O_X(1) - k pi^*h (OZ1, k scaled by 1/3).
enum class Normalization { OZ3, OZ1 };

struct BoundaryRoot {
  /// The smaller root of D^3 = 0 on the ray; the boundary candidate.
  std::optional<QuadValue> k;
  /// The larger root.
  std::optional<QuadValue> k_plus;
  bool exists = false;
  Normalization normalization = Normalization::OZ3;
  friend bool operator==(const BoundaryRoot&, const BoundaryRoot&) = default;
};

BoundaryRoot boundary_root(const ChernPair& c, Normalization norm);

/// D^3 on X for D = O_X(3) - k pi^*h, with the intersection numbers taken
/// from the Chow ring and k exact.
QuadValue cube_on_ray(const ChernPair& c, const QuadValue& k);

enum class Verdict { Rational, Unknown };

struct TrailEntry {
  std::string tag;
  std::string detail;
  friend bool operator==(const TrailEntry&, const TrailEntry&) = default;
};

struct VerdictResult {
  Verdict verdict = Verdict::Unknown;
  /// Every criterion that certifies rationality, in decision order; the first
  /// one decides.
  std::vector<TrailEntry> trail;
  /// Set when the verdict rests on the boundary-root argument alone.
  bool conditional = false;
  std::vector<std::string> warnings;
  friend bool operator==(const VerdictResult&, const VerdictResult&) = default;
};

VerdictResult rationality_verdict(const BundleSpec& spec);

struct BoundaryValue {
  std::string ray;
  QuadValue value;
  friend bool operator==(const BoundaryValue&, const BoundaryValue&) = default;
};

/// D.c2(X) along the boundary rays of the nef cone.
struct C2Positivity {
  std::vector<BoundaryValue> values;
  QuadValue min_value;
  /// 18 + 2 gamma + 12 sqrt(9/4 - gamma), present when gamma <= 2.
  std::optional<QuadValue> closed_bound;
  std::int64_t hray_value = 36;
  bool positive = false;
  /// gamma >= -27, required for rho(X) = 2.
  bool gamma_consistent = true;
  friend bool operator==(const C2Positivity&, const C2Positivity&) = default;
};

C2Positivity c2_positivity(const ChernPair& c);

/// Splitting types of E on a line that survive the positivity constraints for
/// a given c1; empty outside [-1, 4].
std::vector<SplittingType> allowed_splitting_types(std::int64_t c1);

struct RestrictionCase {
  enum class Kind { Equality, ExceptionalCandidate, NotDetermined };
  Kind kind = Kind::NotDetermined;
  /// "ample", "not_nef", "not_big", "mu_empty", "exceptional_surface" or
  /// "insufficient_data".
  std::string reason;
  std::optional<GSurfaceClass> g_surface;
  friend bool operator==(const RestrictionCase&, const RestrictionCase&) = default;
};

RestrictionCase classify_cone_restriction(const BundleSpec& spec);

std::string_view to_string(Verdict v);
std::string_view to_string(RestrictionCase::Kind k);

/// Aggregate of the cone analysis.
struct ConeReport {
  BoundaryRoot root_oz3;
  BoundaryRoot root_oz1;
  Verdict verdict = Verdict::Unknown;
  std::vector<TrailEntry> trail;
  bool verdict_conditional = false;
  C2Positivity c2;
  RestrictionCase restriction;
  Tri w_contains_boundary = Tri::Unknown;
  std::vector<std::string> warnings;
  friend bool operator==(const ConeReport&, const ConeReport&) = default;
};

ConeReport cone_report(const BundleSpec& spec);

}  // namespace cycone
