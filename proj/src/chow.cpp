#include "cycone/chow.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycone {

ChowClass ChowClass::monomial(int i, int j, const Rational& coef) {
  if (i < 0 || i > 2 || j < 0 || j > 2) throw std::out_of_range("ChowClass::monomial: exponent out of basis");
  ChowClass out;
  out.c_[i][j] = coef;
  return out;
}

ChowClass ChowClass::divisor(const Rational& alpha, const Rational& beta) {
  ChowClass out;
  out.c_[1][0] = alpha;
  out.c_[0][1] = beta;
  return out;
}

ChowClass ChowClass::part(int degree) const {
  ChowClass out;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (i + j == degree) out.c_[i][j] = c_[i][j];
  return out;
}

bool ChowClass::is_zero() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

bool ChowClass::is_homogeneous(int degree) const {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      if (i + j != degree && !c_[i][j].is_zero()) return false;
  return true;
}

bool ChowClass::is_integral() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      if (!v.is_integer()) return false;
  return true;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) c_[i][j] += o.c_[i][j];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) c_[i][j] -= o.c_[i][j];
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& s) {
  for (auto& row : c_)
    for (auto& v : row) v *= s;
  return *this;
}

ChowClass ChowClass::operator-() const {
  ChowClass out = *this;
  out *= Rational(-1);
  return out;
}

std::string ChowClass::str() const {
  static const char* names[3][3] = {{"1", "H", "F"}, {"xi", "xi*H", "xi*F"}, {"xi^2", "xi^2*H", "xi^2*F"}};
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= 4; ++d)
    for (int i = 2; i >= 0; --i) {
      const int j = d - i;
      if (j < 0 || j > 2 || c_[i][j].is_zero()) continue;
      const Rational& v = c_[i][j];
      if (!first) os << (v.sign() < 0 ? " - " : " + ");
      else if (v.sign() < 0) os << "-";
      const Rational mag = v.abs();
      if (i + j == 0) os << mag;
      else if (mag == Rational(1)) os << names[i][j];
      else os << mag << "*" << names[i][j];
      first = false;
    }
  return first ? "0" : os.str();
}

ChowClass reduce_monomial(int i, int j, const ChernPair& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("reduce_monomial: negative exponent");
  if (j >= 3 || i + j > 4) return {};
  if (i <= 2) return ChowClass::monomial(i, j);
  // xi^i H^j = xi^(i-3) H^j (c1 xi^2 H - c2 xi H^2)
  ChowClass out = reduce_monomial(i - 1, j + 1, c) * Rational(c.c1);
  out -= reduce_monomial(i - 2, j + 2, c) * Rational(c.c2);
  return out;
}

ChowClass mul(const ChowClass& x, const ChowClass& y, const ChernPair& c) {
  ChowClass out;
  for (int i1 = 0; i1 <= 2; ++i1)
    for (int j1 = 0; j1 <= 2; ++j1) {
      const Rational& a = x.coef(i1, j1);
      if (a.is_zero()) continue;
      for (int i2 = 0; i2 <= 2; ++i2)
        for (int j2 = 0; j2 <= 2; ++j2) {
          const Rational& b = y.coef(i2, j2);
          if (b.is_zero()) continue;
          out += reduce_monomial(i1 + i2, j1 + j2, c) * (a * b);
        }
    }
  return out;
}

ChowClass power(const ChowClass& x, int k, const ChernPair& c) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  ChowClass out = ChowClass::one();
  for (int i = 0; i < k; ++i) out = mul(out, x, c);
  return out;
}

Rational intersect4(std::span<const ChowClass, 4> factors, const ChernPair& c) {
  ChowClass prod = ChowClass::one();
  for (const auto& f : factors) {
    if (!f.is_homogeneous(1)) throw std::invalid_argument("intersect4: factor is not a divisor class");
    prod = mul(prod, f, c);
  }
  return prod.integral();
}

ChowClass anticanonical(const ChernPair& c) { return ChowClass::divisor(3, 3 - c.c1); }

ChowClass total_chern_tangent_Z(const ChernPair& c) {
  const ChowClass one = ChowClass::one();
  const ChowClass h = ChowClass::h();
  const ChowClass one_plus_xi = one + ChowClass::xi();

  // c(T_P2) = (1 + H)^3
  const ChowClass base = power(one + h, 3, c);
  // c(E^dual (x) L) = sum_k c_k(E^dual) (1 + xi)^(3 - k), with c_1(E^dual) = -c1 H,
  // c_2(E^dual) = c2 H^2 and c_3 vanishing on P^2.
  ChowClass rel = power(one_plus_xi, 3, c);
  rel -= mul(h * Rational(c.c1), power(one_plus_xi, 2, c), c);
  rel += mul(ChowClass::fiber() * Rational(c.c2), one_plus_xi, c);
  return mul(base, rel, c);
}

std::array<ChowClass, 5> chern_tangent_Z(const ChernPair& c) {
  const ChowClass total = total_chern_tangent_Z(c);
  std::array<ChowClass, 5> out;
  for (int d = 0; d <= 4; ++d) out[d] = total.part(d);
  return out;
}

namespace {

// c(T_X) restricted from Z: c(T_Z) * (1 + N)^(-1), N = c_1(T_Z).
ChowClass total_chern_X(const ChernPair& c) {
  const ChowClass n = anticanonical(c);
  ChowClass inverse = ChowClass::one();
  ChowClass term = ChowClass::one();
  for (int k = 1; k <= 4; ++k) {
    term = mul(term, -n, c);
    inverse += term;
  }
  return mul(total_chern_tangent_Z(c), inverse, c);
}

}  // namespace

ChowClass c2_of_X(const ChernPair& c) { return total_chern_X(c).part(2); }

ChowClass c3_of_X(const ChernPair& c) { return total_chern_X(c).part(3); }

Rational integrate_on_X(const ChowClass& cls, const ChernPair& c) {
  return mul(cls, anticanonical(c), c).integral();
}

GramMatrix gram_matrix(const ChernPair& c) {
  const std::array<ChowClass, 3> basis = {ChowClass::fiber(), ChowClass::monomial(1, 1), ChowClass::monomial(2, 0)};
  GramMatrix g;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) g.entries[r][s] = mul(basis[r], basis[s], c).integral().to_int();
  const auto& m = g.entries;
  g.det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return g;
}

ChowClass GSurfaceClass::as_class() const {
  ChowClass out = ChowClass::monomial(2, 0, g_xi2);
  out += ChowClass::monomial(1, 1, g_xiH);
  out += ChowClass::monomial(0, 2, g_F);
  return out;
}

ChowClass GSurfaceClass::reduced(std::int64_t mu) const {
  if (mu <= 0) throw std::invalid_argument("GSurfaceClass::reduced: mu must be positive");
  return as_class() * Rational(1, mu);
}

GSurfaceClass g_surface_class(const ChernPair& c) {
  GSurfaceClass g;
  g.g_xi2 = 9;
  g.g_xiH = -(6 * c.c1 + 9);
  g.g_F = 9 * c.c2 + 3 * c.c1 + 9 - 2 * c.c1 * c.c1;
  g.gcd = std::gcd(std::gcd(g.g_xi2, g.g_xiH), g.g_F);
  // mu must divide every coefficient (the basis is unimodular) and G.F = 9/mu
  // must be a positive integer.
  for (std::int64_t mu = 1; mu <= 9; ++mu)
    if (g.gcd % mu == 0 && 9 % mu == 0) g.mu_candidates.insert(mu);
  if (c.c1 == 2) {
    // G lies in the intersection of two members of |O_Z(1)|, so G.F <= 1.
    g.fibre_bound_applied = true;
    std::erase_if(g.mu_candidates, [](std::int64_t mu) { return 9 / mu > 1; });
  }
  return g;
}

}  // namespace cycone
