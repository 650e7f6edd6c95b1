#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycone/bundle.hpp"
#include "cycone/rational.hpp"
#include "cycone/sheaf.hpp"

namespace cycone {

/// Dimensions h^0, h^1, h^2 of a sheaf on P^2 and its Euler characteristic.
struct CohomologyTable {
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
  std::int64_t h2 = 0;
  std::int64_t chi = 0;

  CohomologyTable& operator+=(const CohomologyTable& o);
  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// Raised when an expression needs representation theory the engine lacks
/// (symmetric powers or End of non-split bundles outside the supported
/// plethysm). Names the offending node.
class UnsupportedExpression : public std::runtime_error {
 public:
  explicit UnsupportedExpression(const std::string& node)
      : std::runtime_error("unsupported sheaf expression: " + node), node_(node) {}
  const std::string& node() const { return node_; }

 private:
  std::string node_;
};

/// h^0(O(k)) = C(k+2, 2) for k >= 0.
std::int64_t h0_line(std::int64_t k);
CohomologyTable cohom_line(std::int64_t k);

/// Cohomology of S^a(T_P2) (x) O(b) from the symmetric power of the Euler
/// sequence, 0 -> O(a+b-1)^C(a+1,2) -> O(a+b)^C(a+2,2) -> S^a T(b) -> 0.
CohomologyTable cohom_symT(std::int64_t a, std::int64_t b);

/// Summand of a normalized expression: O(b) when power == 0, else S^power T(b).
struct SheafAtom {
  std::int64_t power = 0;
  std::int64_t twist = 0;
  friend auto operator<=>(const SheafAtom&, const SheafAtom&) = default;
};

/// Expands an expression into a sorted list of atoms.
/// Throws UnsupportedExpression for non-evaluable nodes.
std::vector<SheafAtom> normalize(const SheafExpr& e);

CohomologyTable cohom_expr(const SheafExpr& e);

/// Chern character (rank, ch_1, ch_2) on P^2, coefficients of 1, h, h^2.
struct ChernCharacter {
  Rational rank;
  Rational ch1;
  Rational ch2;

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
};

/// Chern-root bookkeeping; works for every expression, evaluable or not.
ChernCharacter chern_character(const SheafExpr& e);

/// Hirzebruch-Riemann-Roch on P^2: chi = ch2 + 3/2 ch1 + rank.
std::int64_t chi_rr(const SheafExpr& e);

/// h^0(-K_Z) = h^0(S^3 E (x) O(3 - c1)) or the gamma-based criterion.
struct H0MinusK {
  std::optional<std::int64_t> value;
  Tri gt1 = Tri::Unknown;
  /// "exact" (computed), "gamma_ge_minus_18" (criterion) or "undecided".
  std::string reason;
  friend bool operator==(const H0MinusK&, const H0MinusK&) = default;
};

H0MinusK h0_minus_K(const BundleSpec& spec);

}  // namespace cycone
