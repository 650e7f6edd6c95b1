#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "cycone/rational.hpp"

namespace cycone {

/// Exact real number a + b*sqrt(n) with rational a, b and squarefree n.
///
/// Canonical form: b == 0 implies n == 0; b != 0 implies n >= 2 squarefree.
/// Arithmetic mixing two different radicands throws std::domain_error; the
/// values this library produces never need sums of distinct radicals.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit by intent
  /// Canonicalizes: square factors of n move into b. Throws on n < 0.
  QuadValue(Rational a, Rational b, std::int64_t n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t n() const { return n_; }

  bool is_rational() const { return b_.is_zero(); }
  int sign() const;
  double to_double() const;

  QuadValue operator-() const { return QuadValue(-a_, -b_, n_); }
  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o);
  QuadValue& operator*=(const QuadValue& o);
  QuadValue& operator/=(const Rational& r);

  friend QuadValue operator+(QuadValue x, const QuadValue& y) { return x += y; }
  friend QuadValue operator-(QuadValue x, const QuadValue& y) { return x -= y; }
  friend QuadValue operator*(QuadValue x, const QuadValue& y) { return x *= y; }
  friend QuadValue operator/(QuadValue x, const Rational& r) { return x /= r; }

  friend bool operator==(const QuadValue& x, const QuadValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.n_ == y.n_;
  }

  /// Exact sign of x - y. Throws on incompatible radicands.
  friend int compare(const QuadValue& x, const QuadValue& y) { return (x - y).sign(); }

  /// Human-readable form, e.g. "9/2 - 3/2*sqrt(5)".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadValue& q) { return os << q.str(); }

  bool is_canonical() const;

 private:
  std::int64_t common_radicand(const QuadValue& o) const;

  Rational a_{0};
  Rational b_{0};
  std::int64_t n_ = 0;
};

/// Exact square root of a nonnegative rational as s*sqrt(n).
/// Throws std::domain_error for q < 0.
QuadValue sqrt_to_quad(const Rational& q);

inline bool quad_is_rational(const QuadValue& v) { return v.is_rational(); }

/// Splits m > 0 into (s, r) with m = s^2 * r and r squarefree (trial division).
std::pair<mpz_class, std::int64_t> squarefree_split(const mpz_class& m);

}  // namespace cycone
