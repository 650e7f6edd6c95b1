#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycone/bundle.hpp"
#include "cycone/chow.hpp"
#include "cycone/rational.hpp"

namespace cycone {

/// Thrown when two independent computations of the same invariant disagree.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::int64_t gamma(const ChernPair& c) { return c.gamma(); }

/// Intersection numbers on X, O_X(1) = xi|X:
/// xi^3, xi^2.H, xi.F, xi.c2(X), H.c2(X) and c3(X).
struct XProducts {
  Rational o1_cubed;
  Rational o1_sq_h;
  Rational o1_f;
  Rational o1_c2;
  Rational h_c2;
  Rational c3;

  friend bool operator==(const XProducts&, const XProducts&) = default;
};

XProducts xprod_closed_form(const ChernPair& c);
/// Same six numbers through the Chow ring of Z (restriction = multiply by -K_Z).
XProducts xprod_via_chow(const ChernPair& c);

struct CYInvariants {
  std::int64_t gamma = 0;
  std::int64_t c3 = 0;
  /// h^{1,2}(X) = 3 gamma + 83, only meaningful when rho(X) = 2.
  std::optional<std::int64_t> h12;
  XProducts xprod;
  friend bool operator==(const CYInvariants&, const CYInvariants&) = default;
};

/// Both routes, compared; throws InvariantViolation if they disagree.
/// h12 is filled in when rho_is_two.
CYInvariants xprod_table(const ChernPair& c, bool rho_is_two = true);

/// chi(m D|X) for D = alpha xi + beta H:  m^3 D^3 / 6 + m D.c2(X) / 12.
Rational chi_on_X(const ChernPair& c, std::int64_t alpha, std::int64_t beta, std::int64_t m);

/// Bounds on sections of O_X(1) - pi^*h and N_{X|Z}. The first two values
/// assume O_X(1) ample and -K_Z nef.
struct SectionBounds {
  Rational lb_minus_h;        // gamma/3 + c1^2/6 + c1/2
  Rational h0_o1_chi;         // chi(O_X(1))
  std::int64_t normal_bound;  // 5 gamma + 91
  bool c1_ge_minus1 = true;
  /// lb_minus_h > 0, which forces c1 >= 1 under the hypotheses.
  bool lb_positive = false;
  /// False when lb_minus_h > 0 but c1 < 1, i.e. the hypotheses cannot hold.
  bool consistent = true;
  std::vector<std::string> hypotheses;
  friend bool operator==(const SectionBounds&, const SectionBounds&) = default;
};

SectionBounds section_bounds(const ChernPair& c);

struct RhoResult {
  std::optional<std::int64_t> rho;
  /// "end_cohomology", "splitting_type", "requires_big_nef" or "undetermined".
  std::string reason;
  friend bool operator==(const RhoResult&, const RhoResult&) = default;
};

/// rho(X) = 2 + h^2(End E) when -K_Z is big and nef; the splitting-type
/// criterion is used when End E is not evaluable.
RhoResult rho_of_X(const BundleSpec& spec, Tri big_and_nef);

/// Splitting type shifted so that c1 lies in {1, 2, 3}.
SplittingType normalize_type(const SplittingType& e);

}  // namespace cycone
