#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cycone/chow.hpp"
#include "cycone/rational.hpp"

namespace cycone {

struct CheckResult {
  std::string name;
  bool ok = false;
  /// First failing case, or a short summary when ok.
  std::string detail;
};

/// Formulas the self-test compares against the engine. Replacing one with a
/// wrong formula must make the matching check fail.
struct SelftestHooks {
  std::function<std::int64_t(const ChernPair&)> gram_det;
  std::function<Rational(const ChernPair&)> c3_closed;

  static SelftestHooks defaults();
  /// "gram" or "c3"; throws std::invalid_argument otherwise.
  static SelftestHooks tampered(std::string_view what);
};

std::vector<CheckResult> run_selftest(const SelftestHooks& hooks = SelftestHooks::defaults());

}  // namespace cycone
