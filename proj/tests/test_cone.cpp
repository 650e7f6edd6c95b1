#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cycone/cone.hpp"

using namespace cycone;

namespace {

// D^3 on X for D = O_X(3) - k pi^*h in floating point, from the pairings.
double cube_double(const ChernPair& c, double k) {
  const XProducts x = xprod_closed_form(c);
  return 27 * x.o1_cubed.to_double() - 27 * k * x.o1_sq_h.to_double() + 9 * k * k * x.o1_f.to_double();
}

}  // namespace

TEST_SUITE("cone") {
  TEST_CASE("-K_Z positivity for split bundles") {
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = a; b <= 3; ++b)
        for (std::int64_t d = b; d <= 3; ++d) {
          const BundleSpec spec = BundleSpec::split(a, b, d);
          const MinusKStatus s = minusK_status(spec);
          // -K_Z on the section curves P(O(e_i)) over a line; fibre lines give 3
          std::int64_t worst = 3;
          for (auto e : {a, b, d}) worst = std::min(worst, 3 * e + 3 - (a + b + d));
          CHECK(s.nef == to_tri(worst >= 0));
          CHECK(s.ample == to_tri(worst > 0));
          if (s.ample == Tri::True) CHECK(s.nef == Tri::True);
          if (s.nef == Tri::True) CHECK(s.big == to_tri(27 * spec.chern().gamma() + 486 > 0));
          else CHECK(s.big == Tri::Unknown);
          CHECK(s.h0_gt_1 != Tri::Unknown);
        }
  }

  TEST_CASE("-K_Z positivity for Chern-only specs uses the assumptions") {
    CHECK(minusK_status(BundleSpec::chern_only({3, 2})).nef == Tri::Unknown);
    auto spec = BundleSpec::chern_only({3, 9});  // gamma = -18, (-K_Z)^4 = 0
    spec.assume_minus_k(Tri::True, Tri::False);
    const MinusKStatus s = minusK_status(spec);
    CHECK(s.nef == Tri::True);
    CHECK(s.big == Tri::False);
    auto amp = BundleSpec::chern_only({3, 2});
    amp.assume_minus_k(Tri::Unknown, Tri::True);
    CHECK(minusK_status(amp).nef == Tri::True);
    CHECK_THROWS_AS(amp.assume_minus_k(Tri::False, Tri::True), std::invalid_argument);
  }

  TEST_CASE("boundary root at gamma = -9") {
    const ChernPair c{3, 6};
    const BoundaryRoot r3 = boundary_root(c, Normalization::OZ3);
    REQUIRE(r3.exists);
    CHECK(*r3.k == QuadValue(Rational(9, 2), Rational(-3, 2), 5));
    CHECK(*r3.k_plus == QuadValue(Rational(9, 2), Rational(3, 2), 5));
    CHECK(cube_on_ray(c, *r3.k).sign() == 0);
    CHECK(cube_on_ray(c, *r3.k_plus).sign() == 0);
    CHECK_FALSE(quad_is_rational(*r3.k));
    const BoundaryRoot r1 = boundary_root(c, Normalization::OZ1);
    CHECK(*r1.k * QuadValue(Rational(3)) == *r3.k);
    CHECK(r1.normalization == Normalization::OZ1);
  }

  TEST_CASE("boundary root existence and rationality") {
    for (std::int64_t c1 = -4; c1 <= 6; ++c1)
      for (std::int64_t c2 = -10; c2 <= 30; ++c2) {
        const ChernPair c{c1, c2};
        const std::int64_t g = c.gamma();
        const BoundaryRoot r = boundary_root(c, Normalization::OZ3);
        CHECK(r.exists == (4 * g <= 9));
        if (!r.exists) continue;
        CHECK(std::abs(cube_double(c, r.k->to_double())) < 1e-6);
        const auto s = static_cast<std::int64_t>(std::llround(std::sqrt(9.0 - 4 * g)));
        CHECK(quad_is_rational(*r.k) == (s * s == 9 - 4 * g));
        CHECK(compare(*r.k, *r.k_plus) <= 0);
      }
  }

  TEST_CASE("rationality verdict") {
    const VerdictResult v = rationality_verdict(BundleSpec::split(0, 1, 2));
    CHECK(v.verdict == Verdict::Rational);
    REQUIRE(v.trail.size() == 3);
    CHECK(v.trail[0].tag == "h0_minus_k_gt_1");
    CHECK(v.trail[1].tag == "gamma_ge_minus_18");
    CHECK(v.trail[2].tag == "boundary_root_absent");
    CHECK_FALSE(v.conditional);

    const VerdictResult g18 = rationality_verdict(BundleSpec::chern_only({3, 9}));
    CHECK(g18.verdict == Verdict::Rational);
    CHECK(g18.trail.front().tag == "gamma_ge_minus_18");

    const VerdictResult open = rationality_verdict(BundleSpec::chern_only({1, 7}));  // gamma = -20
    CHECK(open.verdict == Verdict::Unknown);
    CHECK(open.trail.empty());

    // gamma = -54: rational root, but outside the range allowed by rho(X) = 2
    const VerdictResult far = rationality_verdict(BundleSpec::chern_only({0, 18}));
    CHECK(far.verdict == Verdict::Rational);
    CHECK(far.conditional);
    CHECK(far.trail.front().tag == "boundary_root_rational");
    CHECK_FALSE(far.warnings.empty());

    const VerdictResult rho4 = rationality_verdict(BundleSpec::split(0, 0, 3));
    REQUIRE(rho4.warnings.size() == 1);
    CHECK(rho4.warnings[0].find("rho(X) = 4") != std::string::npos);
  }

  TEST_CASE("c2 positivity") {
    for (std::int64_t c1 = -3; c1 <= 3; ++c1)
      for (std::int64_t c2 = -12; c2 <= 12; ++c2) {
        const ChernPair c{c1, c2};
        const std::int64_t g = c.gamma();
        const C2Positivity p = c2_positivity(c);
        CHECK(p.hray_value == 36);
        CHECK(p.gamma_consistent == (g >= -27));
        if (4 * g <= 9) {
          REQUIRE(p.closed_bound);
          CHECK(p.values.front().value == *p.closed_bound);
          const double bound = 18 + 2 * g + 12 * std::sqrt(2.25 - g);
          CHECK(p.closed_bound->to_double() == doctest::Approx(bound));
        } else {
          CHECK_FALSE(p.closed_bound);
          CHECK(p.values.front().value == QuadValue(Rational(6 * g + 216)));
        }
        if (g >= -27) CHECK(p.positive);
      }
    // the boundary value first vanishes at gamma = -54
    CHECK(c2_positivity({0, 18}).min_value.sign() == 0);
    CHECK(c2_positivity({0, 17}).min_value.sign() > 0);
  }

  TEST_CASE("allowed splitting types") {
    CHECK(allowed_splitting_types(-1) == std::vector<SplittingType>{{-1, -1, 1}, {-1, 0, 0}});
    CHECK(allowed_splitting_types(0) == std::vector<SplittingType>{{-1, 0, 1}, {0, 0, 0}});
    CHECK(allowed_splitting_types(1) == std::vector<SplittingType>{{0, 0, 1}});
    CHECK(allowed_splitting_types(2) == std::vector<SplittingType>{{0, 0, 2}, {0, 1, 1}});
    CHECK(allowed_splitting_types(3) == std::vector<SplittingType>{{0, 1, 2}, {1, 1, 1}});
    CHECK(allowed_splitting_types(4) == std::vector<SplittingType>{{1, 1, 2}});
    CHECK(allowed_splitting_types(-2).empty());
    CHECK(allowed_splitting_types(5).empty());
  }

  TEST_CASE("exceptional-surface classification") {
    const RestrictionCase ex = classify_cone_restriction(BundleSpec::split(0, 1, 2));
    CHECK(ex.kind == RestrictionCase::Kind::ExceptionalCandidate);
    CHECK(ex.reason == "exceptional_surface");
    REQUIRE(ex.g_surface);
    CHECK(classify_cone_restriction(BundleSpec::split(0, 0, 0)).reason == "ample");
    CHECK(classify_cone_restriction(BundleSpec::split(-1, 0, 2)).reason == "not_nef");
    CHECK(classify_cone_restriction(BundleSpec::chern_only({3, 2})).kind == RestrictionCase::Kind::NotDetermined);

    auto flat = BundleSpec::chern_only({3, 9});
    flat.assume_minus_k(Tri::True, Tri::False);
    CHECK(classify_cone_restriction(flat).reason == "not_big");

    auto two = BundleSpec::chern_only({2, 1});
    two.assume_minus_k(Tri::True, Tri::False);
    const RestrictionCase k2 = classify_cone_restriction(two);
    CHECK(k2.kind == RestrictionCase::Kind::Equality);
    CHECK(k2.reason == "mu_empty");
    CHECK(k2.g_surface->fibre_bound_applied);
  }

  TEST_CASE("cone report") {
    const ConeReport r = cone_report(BundleSpec::named("S2TP2(-1)"));
    CHECK(r.root_oz3.exists);
    CHECK(r.verdict == Verdict::Rational);  // gamma = -9 >= -18
    CHECK(r.w_contains_boundary == Tri::Unknown);
    CHECK(cone_report(BundleSpec::split(0, 1, 2)).w_contains_boundary == Tri::False);
    CHECK(to_string(Verdict::Unknown) == "unknown");
    CHECK(to_string(RestrictionCase::Kind::ExceptionalCandidate) == "exceptional_candidate");
  }
}
