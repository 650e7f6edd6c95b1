#include <doctest.h>

#include <array>
#include <stdexcept>

#include "cycone/bundle.hpp"
#include "cycone/chow.hpp"

using namespace cycone;

namespace {

// Complete homogeneous symmetric polynomial h_k of the splitting exponents;
// for split E the Segre-type integrals are xi^(2+k) H^(2-k) = h_k(e).
std::int64_t complete_h(const SplittingType& e, int k) {
  std::int64_t total = 0;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; i + j <= k; ++j) {
      const int l = k - i - j;
      std::int64_t term = 1;
      for (int t = 0; t < i; ++t) term *= e[0];
      for (int t = 0; t < j; ++t) term *= e[1];
      for (int t = 0; t < l; ++t) term *= e[2];
      total += term;
    }
  return total;
}

ChowClass monomial_power(int i, int j, const ChernPair& c) {
  return mul(power(ChowClass::xi(), i, c), power(ChowClass::h(), j, c), c);
}

}  // namespace

TEST_SUITE("chow") {
  TEST_CASE("split-bundle integrals equal complete homogeneous polynomials") {
    for (int a = -3; a <= 3; ++a)
      for (int b = a; b <= 3; ++b)
        for (int d = b; d <= 3; ++d) {
          const SplittingType e{a, b, d};
          const ChernPair c = chern_of_split(e);
          for (int k = 0; k <= 2; ++k)
            CHECK(monomial_power(2 + k, 2 - k, c).integral() == complete_h(e, k));
          CHECK(monomial_power(1, 3, c).is_zero());
          CHECK(monomial_power(5, 0, c).integral() == 0);  // degree 5 vanishes
        }
  }

  TEST_CASE("tangent bundle of Z against the relative Euler sequence") {
    for (int a = -2; a <= 2; ++a)
      for (int b = a; b <= 2; ++b)
        for (int d = b; d <= 2; ++d) {
          const SplittingType e{a, b, d};
          const ChernPair c = chern_of_split(e);
          const ChowClass one = ChowClass::one();
          const ChowClass h = ChowClass::h();
          ChowClass oracle = power(one + h, 3, c);
          for (auto ei : e) oracle = mul(oracle, one + ChowClass::xi() - h * Rational(ei), c);
          CHECK(total_chern_tangent_Z(c) == oracle);
        }
  }

  TEST_CASE("Euler number of Z is 9 and c1(Z) is the anticanonical class") {
    for (std::int64_t c1 = -6; c1 <= 6; ++c1)
      for (std::int64_t c2 = -10; c2 <= 10; ++c2) {
        const ChernPair c{c1, c2};
        const auto cs = chern_tangent_Z(c);
        CHECK(cs[4].integral() == 9);
        CHECK(cs[1] == anticanonical(c));
        for (int k = 0; k <= 4; ++k) CHECK(cs[k].is_homogeneous(k));
      }
  }

  TEST_CASE("bicubic in P2 x P2") {
    const ChernPair c{0, 0};
    CHECK(integrate_on_X(c3_of_X(c), c) == -162);
    CHECK(integrate_on_X(mul(ChowClass::h(), c2_of_X(c), c), c) == 36);
    CHECK(integrate_on_X(mul(ChowClass::xi(), c2_of_X(c), c), c) == 36);
    // c1(X) = 0: c(T_X) has no degree-1 part
    CHECK(c2_of_X(c).is_homogeneous(2));
  }

  TEST_CASE("multiplication is associative and commutative") {
    const ChernPair c{4, 7};
    const ChowClass x = ChowClass::divisor(2, -1) + ChowClass::one();
    const ChowClass y = ChowClass::monomial(1, 1, 3) + ChowClass::divisor(-1, 5);
    const ChowClass z = ChowClass::monomial(2, 0, -2) + ChowClass::h();
    CHECK(mul(mul(x, y, c), z, c) == mul(x, mul(y, z, c), c));
    CHECK(mul(x, y, c) == mul(y, x, c));
  }

  TEST_CASE("intersect4 needs divisors") {
    const ChernPair c{3, 2};
    const ChowClass k = anticanonical(c);
    CHECK(intersect4(std::array<ChowClass, 4>{k, k, k, k}, c) == 567);
    const ChowClass bad = ChowClass::one();
    CHECK_THROWS_AS(intersect4(std::array<ChowClass, 4>{k, k, k, bad}, c), std::invalid_argument);
  }

  TEST_CASE("(-K_Z)^4 = 27 gamma + 486") {
    for (std::int64_t c1 = -6; c1 <= 6; ++c1)
      for (std::int64_t c2 = -10; c2 <= 10; ++c2) {
        const ChernPair c{c1, c2};
        const ChowClass k = anticanonical(c);
        CHECK(intersect4(std::array<ChowClass, 4>{k, k, k, k}, c) == 27 * c.gamma() + 486);
      }
  }

  TEST_CASE("Gram matrix is symmetric and unimodular") {
    for (std::int64_t c1 = -6; c1 <= 6; ++c1)
      for (std::int64_t c2 = -10; c2 <= 10; ++c2) {
        const GramMatrix g = gram_matrix({c1, c2});
        CHECK(g.det == -1);
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s) CHECK(g.entries[r][s] == g.entries[s][r]);
      }
  }

  TEST_CASE("exceptional surface class") {
    const GSurfaceClass g = g_surface_class({3, 2});
    CHECK(g.g_xi2 == 9);
    CHECK(g.g_xiH == -27);
    CHECK(g.g_F == 18);
    CHECK(g.mu_candidates == std::set<std::int64_t>{1, 3, 9});
    CHECK_FALSE(g.fibre_bound_applied);
    const ChernPair c{3, 2};
    const ChowClass xi = ChowClass::xi(), h = ChowClass::h();
    CHECK(g.reduced(9) == mul(xi - h, xi - h * Rational(2), c));
    CHECK_THROWS_AS((void)g.reduced(0), std::invalid_argument);

    for (std::int64_t c2 = -10; c2 <= 10; ++c2) {
      const GSurfaceClass two = g_surface_class({2, c2});
      CHECK(two.gcd == 1);
      CHECK(two.fibre_bound_applied);
      CHECK(two.mu_candidates.empty());
    }
  }

  TEST_CASE("twisting preserves gamma") {
    for (std::int64_t t = -3; t <= 3; ++t) CHECK(ChernPair{3, 6}.twisted(t).gamma() == -9);
    CHECK(ChernPair{3, 2}.twisted(1) == ChernPair{6, 11});
  }
}
