#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycone/bundle.hpp"
#include "cycone/cohom.hpp"
#include "cycone/cone.hpp"
#include "cycone/cyinv.hpp"

namespace cycone {

using Json = nlohmann::ordered_json;

/// Echo of the analysed input, enough to rebuild the BundleSpec.
struct SpecEcho {
  std::string kind;  // "split", "named" or "chern"
  std::string description;
  std::optional<SplittingType> split;
  std::optional<std::string> named;
  std::optional<ChernPair> chern;
  std::optional<SplittingType> type;
  std::int64_t twist = 0;
  Tri assume_nef = Tri::Unknown;
  Tri assume_ample = Tri::Unknown;
  friend bool operator==(const SpecEcho&, const SpecEcho&) = default;
};

SpecEcho echo_spec(const BundleSpec& spec);

/// Everything the library knows about one bundle, with hypothesis tags on
/// every conditional value.
struct AnalysisReport {
  SpecEcho spec;
  ChernPair chern;
  std::optional<SplittingType> splitting_type;
  bool uniform = false;
  std::int64_t gamma = 0;
  std::int64_t c3 = 0;
  /// Absent when rho(X) is known to differ from 2.
  std::optional<std::int64_t> h12;
  /// "rho_established", "assumes rho(X) = 2" or "not_applicable".
  std::string h12_status;
  XProducts xprod;
  RhoResult rho;
  MinusKStatus minus_k;
  H0MinusK h0_minus_k;
  ConeReport cone;
  SectionBounds section_bounds;
  GSurfaceClass g_surface;
  std::vector<std::string> warnings;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs every module on the spec. Throws InvariantViolation when two routes
/// to the same number disagree.
AnalysisReport analyze(const BundleSpec& spec);

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);
void to_json(Json& j, const QuadValue& q);
void from_json(const Json& j, QuadValue& q);
void to_json(Json& j, const AnalysisReport& r);
void from_json(const Json& j, AnalysisReport& r);

/// Two-column key/value listing of the headline numbers.
std::string to_tsv(const AnalysisReport& r);

}  // namespace cycone
