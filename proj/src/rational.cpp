#include "cycone/rational.hpp"

#include <limits>
#include <stdexcept>

namespace cycone {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  v_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::domain_error("rational: zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
  };

  const auto slash = text.find('/');
  const std::string_view num_txt = text.substr(0, slash);
  const std::string_view den_txt =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num_txt) || !is_int(den_txt) || den_txt[0] == '-')
    throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  mpz_class n = to_mpz(num_txt);
  mpz_class d = to_mpz(den_txt);
  if (d == 0) throw std::domain_error("rational: zero denominator");
  return Rational(mpq_class(n, d));
}

std::int64_t Rational::to_int() const {
  if (!is_integer()) throw std::domain_error("rational: " + str() + " is not an integer");
  if (!num().fits_slong_p()) throw std::domain_error("rational: " + str() + " exceeds int64");
  return num().get_si();
}

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

std::string Rational::pretty() const {
  return is_integer() ? num().get_str() : str();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

bool Rational::is_canonical() const {
  if (den() <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return g == 1 || (num() == 0 && den() == 1);
}

Rational rat_arith(const Rational& x, const Rational& y, RatOp op) {
  switch (op) {
    case RatOp::Add: return x + y;
    case RatOp::Sub: return x - y;
    case RatOp::Mul: return x * y;
    case RatOp::Div: return x / y;
  }
  throw std::logic_error("rat_arith: unknown op");
}

std::strong_ordering rat_cmp(const Rational& x, const Rational& y) { return x <=> y; }

}  // namespace cycone
