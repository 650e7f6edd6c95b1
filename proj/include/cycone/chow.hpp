#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cycone/rational.hpp"

namespace cycone {

/// Numerical Chern data of a rank-3 bundle E on P^2: c1 = c_1(E).h, c2 = c_2(E).
struct ChernPair {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  /// Chern data of E (x) O(t).
  ChernPair twisted(std::int64_t t) const { return {c1 + 3 * t, c2 + 2 * t * c1 + 3 * t * t}; }
  /// c1^2 - 3 c2, invariant under twisting.
  std::int64_t gamma() const { return c1 * c1 - 3 * c2; }

  friend bool operator==(const ChernPair&, const ChernPair&) = default;
};

/// A class in the Chow ring of Z = P(E) over P^2, written in the basis
/// xi^i H^j with 0 <= i, j <= 2 (xi = c_1(O_Z(1)), H = pullback of the line
/// class, F = H^2 the fibre). Stored reduced: no xi^3 or H^3 monomials, so
/// the coefficient of xi^2 H^2 is the degree of the class.
class ChowClass {
 public:
  ChowClass() = default;

  static ChowClass one() { return monomial(0, 0); }
  static ChowClass xi() { return monomial(1, 0); }
  static ChowClass h() { return monomial(0, 1); }
  static ChowClass fiber() { return monomial(0, 2); }
  static ChowClass point() { return monomial(2, 2); }
  /// Basis monomial; requires i, j in [0, 2].
  static ChowClass monomial(int i, int j, const Rational& coef = 1);
  /// alpha*xi + beta*H.
  static ChowClass divisor(const Rational& alpha, const Rational& beta);

  const Rational& coef(int i, int j) const { return c_.at(i).at(j); }
  void set(int i, int j, Rational v) { c_.at(i).at(j) = std::move(v); }

  /// Homogeneous component of the given degree (0..4).
  ChowClass part(int degree) const;
  bool is_zero() const;
  /// True if all nonzero terms have the given degree (the zero class counts).
  bool is_homogeneous(int degree) const;
  /// Integral over Z: the coefficient of the point class xi^2 H^2.
  const Rational& integral() const { return c_[2][2]; }
  bool is_integral() const;

  ChowClass& operator+=(const ChowClass& o);
  ChowClass& operator-=(const ChowClass& o);
  ChowClass& operator*=(const Rational& s);
  ChowClass operator-() const;

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const Rational& s) { return a *= s; }
  friend ChowClass operator*(const Rational& s, ChowClass a) { return a *= s; }
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  std::string str() const;

 private:
  std::array<std::array<Rational, 3>, 3> c_{};
};

/// xi^i H^j rewritten with xi^3 = c1 xi^2 H - c2 xi H^2 and H^3 = 0.
ChowClass reduce_monomial(int i, int j, const ChernPair& c);

/// Graded product in the Chow ring, fully reduced.
ChowClass mul(const ChowClass& x, const ChowClass& y, const ChernPair& c);
ChowClass power(const ChowClass& x, int k, const ChernPair& c);

/// Intersection number of four degree-1 classes. Throws std::invalid_argument
/// if a factor is not purely of degree 1.
Rational intersect4(std::span<const ChowClass, 4> factors, const ChernPair& c);

/// -K_Z = 3 xi + (3 - c1) H.
ChowClass anticanonical(const ChernPair& c);

/// Total Chern class of T_Z from c(p^*T_P2) * c(p^*E^dual (x) O_Z(1)).
ChowClass total_chern_tangent_Z(const ChernPair& c);
/// Homogeneous pieces c_0(T_Z) .. c_4(T_Z).
std::array<ChowClass, 5> chern_tangent_Z(const ChernPair& c);

/// Chern classes of the anticanonical hypersurface X, kept as classes on Z:
/// c(T_X) = c(T_Z) / c(N) with N = -K_Z|X. c_k(X) pairs with classes on X
/// after multiplying by -K_Z.
ChowClass c2_of_X(const ChernPair& c);
ChowClass c3_of_X(const ChernPair& c);

/// Integral over X of a class on Z: integral of (cls . -K_Z).
Rational integrate_on_X(const ChowClass& cls, const ChernPair& c);

/// Pairing matrix of the H^4 basis (F, xi H, xi^2).
struct GramMatrix {
  std::array<std::array<std::int64_t, 3>, 3> entries{};
  std::int64_t det = 0;
  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

GramMatrix gram_matrix(const ChernPair& c);

/// Class of an exceptional surface G, [mu G] = g_xi2 xi^2 + g_xiH xi H + g_F F,
/// with the multipliers mu still compatible with integrality.
struct GSurfaceClass {
  std::int64_t g_xi2 = 0;
  std::int64_t g_xiH = 0;
  std::int64_t g_F = 0;
  std::int64_t gcd = 0;
  std::set<std::int64_t> mu_candidates;
  /// True when the fibre-degree bound G.F <= 1 was applied (c1 = 2 branch).
  bool fibre_bound_applied = false;

  ChowClass as_class() const;
  /// [mu G] / mu.
  ChowClass reduced(std::int64_t mu) const;
  friend bool operator==(const GSurfaceClass&, const GSurfaceClass&) = default;
};

GSurfaceClass g_surface_class(const ChernPair& c);

}  // namespace cycone
