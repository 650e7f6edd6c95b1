#include <doctest.h>

#include <algorithm>
#include <array>

#include "cycone/bundle.hpp"
#include "cycone/cohom.hpp"
#include "cycone/sheaf.hpp"

using namespace cycone;

namespace {

// Borel-Weil-Bott on P^2 = quotients C^3 -> Q of rank 2 with Q = T(-1) and
// det Q = O(1): S^a T(b) = S_(2a+b, a+b) Q. Returns (h0, h1, h2).
std::array<std::int64_t, 3> bwb(std::int64_t a, std::int64_t b) {
  std::array<std::int64_t, 3> alpha{2 * a + b + 2, a + b + 1, 0};
  std::array<std::int64_t, 3> out{0, 0, 0};
  if (alpha[0] == alpha[1] || alpha[0] == alpha[2] || alpha[1] == alpha[2]) return out;
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inversions += alpha[i] < alpha[j];
  std::sort(alpha.begin(), alpha.end(), std::greater<>());
  const std::int64_t l1 = alpha[0] - 2, l2 = alpha[1] - 1, l3 = alpha[2];
  out[inversions] = (l1 - l2 + 1) * (l2 - l3 + 1) * (l1 - l3 + 2) / 2;
  return out;
}

std::int64_t h0_sum_of_lines(const std::vector<std::int64_t>& degrees) {
  std::int64_t total = 0;
  for (auto d : degrees) total += d < 0 ? 0 : (d + 1) * (d + 2) / 2;
  return total;
}

}  // namespace

TEST_SUITE("cohom") {
  TEST_CASE("line bundles") {
    CHECK(cohom_line(0) == CohomologyTable{1, 0, 0, 1});
    CHECK(cohom_line(-3) == CohomologyTable{0, 0, 1, 1});
    CHECK(cohom_line(-1) == CohomologyTable{0, 0, 0, 0});
    CHECK(cohom_line(2).h0 == 6);
    CHECK(cohom_line(-4).h2 == 3);
    CHECK(cohom_line(-5).h2 == 6);
  }

  TEST_CASE("Euler resolution agrees with Borel-Weil-Bott") {
    for (std::int64_t a = 0; a <= 7; ++a)
      for (std::int64_t b = -25; b <= 12; ++b) {
        const CohomologyTable t = cohom_symT(a, b);
        const auto o = bwb(a, b);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(t.h0 == o[0]);
        CHECK(t.h1 == o[1]);
        CHECK(t.h2 == o[2]);
        CHECK(t.chi == t.h0 - t.h1 + t.h2);
        CHECK(chi_rr(SheafExpr::sym_tangent(a, b)) == t.chi);
      }
  }

  TEST_CASE("known values") {
    CHECK(cohom_symT(1, 0).h0 == 8);
    CHECK(cohom_symT(1, -3).h1 == 1);  // Omega
    CHECK(cohom_symT(4, -5).h0 == 0);
    CHECK(cohom_symT(2, -3).h2 == 0);
  }

  TEST_CASE("normalize rules") {
    CHECK(normalize(parse_sheaf("end(O(0)+O(1))")) ==
          std::vector<SheafAtom>{{0, -1}, {0, 0}, {0, 0}, {0, 1}});
    CHECK(normalize(parse_sheaf("dual(SymT(2,1))")) == std::vector<SheafAtom>{{2, -7}});
    CHECK(normalize(parse_sheaf("sym(SymT(1,-1),3)")) == std::vector<SheafAtom>{{3, -3}});
    CHECK(normalize(parse_sheaf("sym(SymT(2,1),2)")) == std::vector<SheafAtom>{{0, 8}, {4, 2}});
    CHECK(normalize(parse_sheaf("sym(O(1),0)")) == std::vector<SheafAtom>{{0, 0}});
    CHECK(normalize(parse_sheaf("sym(O(0)+O(1),2)")) == std::vector<SheafAtom>{{0, 0}, {0, 1}, {0, 2}});
    CHECK_THROWS_AS(normalize(parse_sheaf("end(SymT(1,0))")), UnsupportedExpression);
    CHECK_THROWS_AS(normalize(parse_sheaf("sym(SymT(1,0)+O(0),2)")), UnsupportedExpression);
    CHECK_THROWS_AS(normalize(parse_sheaf("sym(SymT(2,0),3)")), UnsupportedExpression);
    CHECK_THROWS_AS(normalize(parse_sheaf("sym(O(0)+O(1)+O(2)+O(3)+O(4)+O(5)+O(6)+O(7),40)")),
                    UnsupportedExpression);
  }

  TEST_CASE("unsupported nodes are named") {
    try {
      cohom_expr(parse_sheaf("O(1)+end(SymT(1,0))"));
      FAIL("expected UnsupportedExpression");
    } catch (const UnsupportedExpression& e) {
      CHECK(e.node() == "end(SymT(1,0))");
    }
  }

  TEST_CASE("S^2 S^2 splitting has matching Chern character") {
    for (std::int64_t c = -5; c <= 5; ++c) {
      const SheafExpr formal = SheafExpr::sym(SheafExpr::sym_tangent(2, c), 2);
      const SheafExpr split = SheafExpr::sum({SheafExpr::sym_tangent(4, 2 * c), SheafExpr::line(2 * c + 6)});
      CHECK(chern_character(formal) == chern_character(split));
    }
    CHECK(cohom_expr(parse_sheaf("twist(sym(SymT(2,-2),2),-1)")).h0 == 3);
  }

  TEST_CASE("Riemann-Roch equals the alternating sum on evaluable expressions") {
    for (const char* text : {"end(O(-2)+O(1)+O(3))", "twist(sym(O(0)+O(1)+O(2),3),0)", "SymT(3,-4)+dual(SymT(2,1))",
                             "twist(SymT(5,-8),2)", "sym(SymT(1,-2),4)"}) {
      const SheafExpr e = parse_sheaf(text);
      const CohomologyTable t = cohom_expr(e);
      CHECK(chi_rr(e) == t.h0 - t.h1 + t.h2);
      CHECK(t.chi == t.h0 - t.h1 + t.h2);
    }
  }

  TEST_CASE("h0(-K_Z) for split bundles by exponent enumeration") {
    for (std::int64_t a = -2; a <= 3; ++a)
      for (std::int64_t b = a; b <= 3; ++b)
        for (std::int64_t d = b; d <= 3; ++d) {
          std::vector<std::int64_t> degrees;
          const std::int64_t t = 3 - (a + b + d);
          for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 3; ++j) degrees.push_back(i * a + j * b + (3 - i - j) * d + t);
          const H0MinusK h = h0_minus_K(BundleSpec::split(a, b, d));
          CHECK(h.reason == "exact");
          CHECK(h.value == h0_sum_of_lines(degrees));
        }
    CHECK(h0_minus_K(BundleSpec::split(0, 1, 2)).value == 115);
  }

  TEST_CASE("h0(-K_Z) for catalog bundles") {
    // S^3(T (+) O) = S^3 T + S^2 T + T + O
    CHECK(h0_minus_K(BundleSpec::named("TP2+O")).value == bwb(3, 0)[0] + bwb(2, 0)[0] + 8 + 1);
    CHECK(h0_minus_K(BundleSpec::named("S2TP2(-1)")).value == bwb(6, -6)[0] + bwb(2, 0)[0]);
    // twisting E leaves Z and -K_Z unchanged
    CHECK(h0_minus_K(BundleSpec::named("TP2+O").twist(2)).value == h0_minus_K(BundleSpec::named("TP2+O")).value);
    CHECK(h0_minus_K(BundleSpec::split(0, 1, 2).twist(-3)).value == 115);
  }

  TEST_CASE("h0(-K_Z) criterion for Chern-only specs") {
    const H0MinusK yes = h0_minus_K(BundleSpec::chern_only({3, 9}));  // gamma = -18
    CHECK(yes.gt1 == Tri::True);
    CHECK(yes.reason == "gamma_ge_minus_18");
    CHECK_FALSE(yes.value);
    const H0MinusK no = h0_minus_K(BundleSpec::chern_only({3, 10}));  // gamma = -21
    CHECK(no.gt1 == Tri::Unknown);
    CHECK(no.reason == "undecided");
  }

  TEST_CASE("restricted Euler sequence for T_P3 on a plane") {
    const SheafExpr e = parse_sheaf("SymT(1,0)+O(1)");
    for (std::int64_t k = -4; k <= 6; ++k) {
      // 0 -> O(k) -> O(k+1)^4 -> E(k) -> 0 and h1(O(k)) = 0
      CHECK(cohom_expr(SheafExpr::twist(e, k)).h0 == 4 * h0_line(k + 1) - h0_line(k));
    }
  }
}
