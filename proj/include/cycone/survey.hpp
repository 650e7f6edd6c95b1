#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycone/bundle.hpp"
#include "cycone/cone.hpp"
#include "cycone/report.hpp"

namespace cycone {

/// One split bundle O(e1) + O(e2) + O(e3) of a census.
struct SurveyRow {
  SplittingType e{};
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t gamma = 0;
  Tri nef = Tri::Unknown;
  Tri ample = Tri::Unknown;
  Tri big = Tri::Unknown;
  std::optional<std::int64_t> rho;
  Verdict verdict = Verdict::Unknown;
  /// The type appears in the allowed splitting-type table for its c1.
  bool tab_admissible = false;
  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

/// Conjunction of row predicates: "c1=N", "nef", "ample", "big", "tab".
struct SurveyFilter {
  std::optional<std::int64_t> c1;
  bool nef = false;
  bool ample = false;
  bool big = false;
  bool tab = false;

  /// Parses a comma-separated list; throws std::invalid_argument.
  static SurveyFilter parse(const std::string& text);
  bool accepts(const SurveyRow& row) const;
};

inline constexpr std::int64_t kMaxSurveySpan = 12;

SurveyRow survey_row(const SplittingType& e);

/// All e1 <= e2 <= e3 in [emin, emax], sorted lexicographically, evaluated on
/// `workers` threads. Throws std::invalid_argument when emin > emax or the
/// span exceeds kMaxSurveySpan.
std::vector<SurveyRow> run_survey(std::int64_t emin, std::int64_t emax, const SurveyFilter& filter,
                                  unsigned workers = 1);

/// Worker count from CYCONE_WORKERS, else the hardware concurrency.
unsigned default_workers();

inline constexpr const char* kSurveyTsvHeader = "e1\te2\te3\tc1\tc2\tgamma\tnef\tample\tbig\trho\tverdict\ttab_admissible";

std::string to_tsv_line(const SurveyRow& row);
Json to_json_row(const SurveyRow& row);

}  // namespace cycone
