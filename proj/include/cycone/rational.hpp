#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cycone {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Backed by GMP; every constructor and arithmetic result is kept canonical,
/// so two Rationals compare equal exactly when their (num, den) pairs match.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) : v_(to_mpz(n)) {}  // NOLINT: implicit by intent

  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class v);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad text and
  /// std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  /// Throws std::domain_error if not an integer or out of int64 range.
  std::int64_t to_int() const;
  double to_double() const { return v_.get_d(); }

  /// Always "p/q", also for integers ("567/1").
  std::string str() const;
  /// "p" for integers, "p/q" otherwise.
  std::string pretty() const;

  Rational abs() const;
  Rational operator-() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

  /// True when the stored value is already in lowest terms with den > 0.
  bool is_canonical() const;

 private:
  template <std::integral T>
  static mpz_class to_mpz(T n) {
    if constexpr (std::is_signed_v<T>) {
      static_assert(sizeof(T) <= sizeof(long));
      return mpz_class(static_cast<long>(n));
    } else {
      static_assert(sizeof(T) <= sizeof(unsigned long));
      return mpz_class(static_cast<unsigned long>(n));
    }
  }

  mpq_class v_{0};
};

/// Operations of the rational kernel, as a tagged dispatcher.
enum class RatOp { Add, Sub, Mul, Div };

Rational rat_arith(const Rational& x, const Rational& y, RatOp op);
std::strong_ordering rat_cmp(const Rational& x, const Rational& y);

}  // namespace cycone
