#include "cycone/quad.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cycone {

namespace {

// Radicands beyond this are rejected; trial division would be pointless there.
const mpz_class kMaxRadicand = mpz_class(1) << 62;

}  // namespace

std::pair<mpz_class, std::int64_t> squarefree_split(const mpz_class& m) {
  if (m <= 0) throw std::domain_error("squarefree_split: nonpositive input");
  if (m >= kMaxRadicand) throw std::domain_error("squarefree_split: radicand too large");
  std::uint64_t rest = m.get_ui();
  std::uint64_t square_root = 1;
  std::uint64_t free_part = 1;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    unsigned count = 0;
    while (rest % d == 0) {
      rest /= d;
      ++count;
    }
    for (unsigned k = 0; k < count / 2; ++k) square_root *= d;
    if (count % 2 == 1) free_part *= d;
  }
  free_part *= rest;
  return {mpz_class(static_cast<unsigned long>(square_root)), static_cast<std::int64_t>(free_part)};
}

QuadValue::QuadValue(Rational a, Rational b, std::int64_t n) : a_(std::move(a)), b_(std::move(b)), n_(n) {
  if (n_ < 0) throw std::domain_error("quad: negative radicand");
  if (b_.is_zero() || n_ == 0) {
    b_ = 0;
    n_ = 0;
    return;
  }
  auto [s, r] = squarefree_split(mpz_class(static_cast<long>(n_)));
  b_ *= Rational(mpq_class(s));
  if (r == 1) {
    a_ += b_;
    b_ = 0;
    n_ = 0;
  } else {
    n_ = r;
  }
}

std::int64_t QuadValue::common_radicand(const QuadValue& o) const {
  if (is_rational()) return o.n_;
  if (o.is_rational() || o.n_ == n_) return n_;
  throw std::domain_error("quad: mixed radicands sqrt(" + std::to_string(n_) + ") and sqrt(" +
                          std::to_string(o.n_) + ")");
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  const auto n = common_radicand(o);
  *this = QuadValue(a_ + o.a_, b_ + o.b_, n);
  return *this;
}

QuadValue& QuadValue::operator-=(const QuadValue& o) {
  const auto n = common_radicand(o);
  *this = QuadValue(a_ - o.a_, b_ - o.b_, n);
  return *this;
}

QuadValue& QuadValue::operator*=(const QuadValue& o) {
  const auto n = common_radicand(o);
  const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(n);
  const Rational b = a_ * o.b_ + b_ * o.a_;
  *this = QuadValue(a, b, n);
  return *this;
}

QuadValue& QuadValue::operator/=(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("quad: division by zero");
  a_ /= r;
  b_ /= r;
  return *this;
}

int QuadValue::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa >= 0 && sb > 0) return 1;
  if (sa <= 0 && sb < 0) return -1;
  // Opposite signs: compare a^2 against b^2 n.
  const Rational a2 = a_ * a_;
  const Rational b2n = b_ * b_ * Rational(n_);
  const int c = a2 == b2n ? 0 : (a2 > b2n ? 1 : -1);
  return sa > 0 ? c : -c;
}

double QuadValue::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(n_));
}

std::string QuadValue::str() const {
  if (is_rational()) return a_.pretty();
  std::string out;
  if (!a_.is_zero()) out = a_.pretty() + (b_.sign() < 0 ? " - " : " + ");
  else if (b_.sign() < 0) out = "-";
  const Rational mag = b_.abs();
  if (mag != Rational(1)) out += mag.pretty() + "*";
  out += "sqrt(" + std::to_string(n_) + ")";
  return out;
}

bool QuadValue::is_canonical() const {
  if (!a_.is_canonical() || !b_.is_canonical()) return false;
  if (b_.is_zero()) return n_ == 0;
  if (n_ < 2) return false;
  return squarefree_split(mpz_class(static_cast<long>(n_))).first == 1;
}

QuadValue sqrt_to_quad(const Rational& q) {
  if (q.sign() < 0) throw std::domain_error("sqrt_to_quad: negative argument " + q.str());
  if (q.is_zero()) return QuadValue{};
  // sqrt(p/r) = sqrt(p*r) / r
  const mpz_class pr = q.num() * q.den();
  auto [s, n] = squarefree_split(pr);
  const Rational coeff = Rational(mpq_class(s, q.den()));
  return QuadValue(0, coeff, n);
}

}  // namespace cycone
