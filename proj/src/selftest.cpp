#include "cycone/selftest.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cycone/bundle.hpp"
#include "cycone/cohom.hpp"
#include "cycone/cone.hpp"
#include "cycone/cyinv.hpp"
#include "cycone/quad.hpp"
#include "cycone/sheaf.hpp"

namespace cycone {

namespace {

// Grid of Chern data used by the closed-form comparisons.
constexpr std::int64_t kC1Max = 6;
constexpr std::int64_t kC2Max = 10;

std::string pair_str(const ChernPair& c) {
  return "(" + std::to_string(c.c1) + "," + std::to_string(c.c2) + ")";
}

std::string type_str(const SplittingType& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
}

template <class F>
CheckResult over_grid(std::string name, F&& check) {
  for (std::int64_t c1 = -kC1Max; c1 <= kC1Max; ++c1)
    for (std::int64_t c2 = -kC2Max; c2 <= kC2Max; ++c2) {
      const ChernPair c{c1, c2};
      if (std::string why = check(c); !why.empty()) return {std::move(name), false, pair_str(c) + ": " + why};
    }
  return {std::move(name), true, "grid |c1| <= 6, |c2| <= 10"};
}

template <class F>
CheckResult over_split(std::string name, std::int64_t lo, std::int64_t hi, F&& check) {
  int count = 0;
  for (std::int64_t a = lo; a <= hi; ++a)
    for (std::int64_t b = a; b <= hi; ++b)
      for (std::int64_t c = b; c <= hi; ++c) {
        const SplittingType e{a, b, c};
        if (std::string why = check(e); !why.empty()) return {std::move(name), false, type_str(e) + ": " + why};
        ++count;
      }
  return {std::move(name), true, std::to_string(count) + " split types"};
}

CheckResult check_split_012() {
  const BundleSpec spec = BundleSpec::split(0, 1, 2);
  const ChernPair c = spec.chern();
  const ChowClass k = anticanonical(c);
  const Rational top = intersect4(std::array<ChowClass, 4>{k, k, k, k}, c);
  if (top != 567) return {"split-012-regression", false, "(-K_Z)^4 = " + top.pretty()};
  const MinusKStatus mk = minusK_status(spec);
  if (mk.nef != Tri::True || mk.ample != Tri::False || mk.big != Tri::True)
    return {"split-012-regression", false, "-K_Z should be nef, big, not ample"};
  const RestrictionCase kc = classify_cone_restriction(spec);
  if (kc.kind != RestrictionCase::Kind::ExceptionalCandidate || !kc.g_surface)
    return {"split-012-regression", false, "expected an exceptional candidate"};
  const ChowClass xi = ChowClass::xi();
  const ChowClass h = ChowClass::h();
  const ChowClass oracle = mul(xi - h, xi - h * Rational(2), c);
  if (kc.g_surface->reduced(9) != oracle)
    return {"split-012-regression", false, "G = " + kc.g_surface->reduced(9).str() + ", expected " + oracle.str()};
  return {"split-012-regression", true, "(-K_Z)^4 = 567, G = (xi - H)(xi - 2H)"};
}

CheckResult check_split_003() {
  const BundleSpec spec = BundleSpec::split(0, 0, 3);
  const ChernPair c = spec.chern();
  const ChowClass k = anticanonical(c);
  const Rational top = intersect4(std::array<ChowClass, 4>{k, k, k, k}, c);
  if (top != 729) return {"split-003-rho4", false, "(-K_Z)^4 = " + top.pretty()};
  const std::int64_t h2 = cohom_expr(*spec.end_expr()).h2;
  if (h2 != 2) return {"split-003-rho4", false, "h2(End E) = " + std::to_string(h2)};
  const RhoResult rho = rho_of_X(spec);
  if (rho.rho != 4) return {"split-003-rho4", false, "rho(X) not 4"};
  return {"split-003-rho4", true, "(-K_Z)^4 = 729, h2(End E) = 2, rho(X) = 4"};
}

CheckResult check_uniform_gamma() {
  const std::vector<std::pair<BundleSpec, std::int64_t>> cases{{BundleSpec::split(0, 1, 2), 3},
                                                              {BundleSpec::named("TP2+O"), 0},
                                                              {BundleSpec::named("TP2(-1)+O(2)"), 0},
                                                              {BundleSpec::named("S2TP2(-1)"), -9}};
  for (const auto& [spec, expected] : cases) {
    if (spec.splitting_type() != SplittingType{0, 1, 2})
      return {"uniform-gamma-catalog", false, spec.describe() + ": splitting type is not (0,1,2)"};
    if (spec.chern().gamma() != expected)
      return {"uniform-gamma-catalog", false, spec.describe() + ": gamma = " + std::to_string(spec.chern().gamma())};
  }
  return {"uniform-gamma-catalog", true, "gamma = 3, 0, 0, -9"};
}

CheckResult check_xprod() {
  return over_grid("xprod-closed-forms", [&](const ChernPair& c) -> std::string {
    XProducts closed = xprod_closed_form(c);
    const XProducts engine = xprod_via_chow(c);
    closed.c3 = engine.c3;  // checked separately
    return closed == engine ? "" : "closed forms differ from the Chow ring";
  });
}

CheckResult check_c3(const SelftestHooks& hooks) {
  return over_grid("xprod-c3-closed-form", [&](const ChernPair& c) -> std::string {
    const Rational engine = integrate_on_X(c3_of_X(c), c);
    const Rational closed = hooks.c3_closed(c);
    return engine == closed ? "" : "c3(X) = " + engine.pretty() + " but closed form gives " + closed.pretty();
  });
}

CheckResult check_gram(const SelftestHooks& hooks) {
  return over_grid("gram-unimodular", [&](const ChernPair& c) -> std::string {
    const std::int64_t d = hooks.gram_det(c);
    return d == -1 ? "" : "det = " + std::to_string(d);
  });
}

CheckResult check_chi_end() {
  return over_split("chi-end-split", -4, 4, [](const SplittingType& e) -> std::string {
    const BundleSpec spec = BundleSpec::split(e[0], e[1], e[2]);
    const SheafExpr end = *spec.end_expr();
    const CohomologyTable t = cohom_expr(end);
    const std::int64_t expected = 2 * spec.chern().gamma() + 9;
    if (t.h0 - t.h1 + t.h2 != expected) return "alternating sum " + std::to_string(t.h0 - t.h1 + t.h2);
    if (chi_rr(end) != expected) return "Riemann-Roch gives " + std::to_string(chi_rr(end));
    return "";
  });
}

CheckResult check_table() {
  const std::vector<SplittingType> expected{{-1, -1, 1}, {-1, 0, 0}, {-1, 0, 1}, {0, 0, 0}, {0, 0, 1},
                                            {0, 0, 2},   {0, 1, 1},  {0, 1, 2},  {1, 1, 1}, {1, 1, 2}};
  std::vector<SplittingType> got;
  for (std::int64_t c1 = -3; c1 <= 7; ++c1) {
    const auto row = allowed_splitting_types(c1);
    if ((c1 < -1 || c1 > 4) && !row.empty())
      return {"splitting-type-table", false, "c1 = " + std::to_string(c1) + " should have no types"};
    got.insert(got.end(), row.begin(), row.end());
  }
  if (got != expected) return {"splitting-type-table", false, "table differs"};
  return {"splitting-type-table", true, "10 types over c1 in [-1, 4]"};
}

CheckResult check_rr_on_x() {
  for (std::int64_t c2 = -kC2Max; c2 <= kC2Max; ++c2) {
    const ChernPair two{2, c2};
    const Rational g2(two.gamma());
    if (chi_on_X(two, 1, 0, 1) != g2 / 3 + Rational(20, 3))
      return {"riemann-roch-on-X", false, "c1 = 2: " + pair_str(two)};
    const ChernPair three{3, c2};
    if (chi_on_X(three, 1, 0, 1) != Rational(three.gamma()) / 3 + 9)
      return {"riemann-roch-on-X", false, "c1 = 3: " + pair_str(three)};
    const ChernPair neg{-1, c2};
    const Rational g(neg.gamma());
    for (std::int64_t m = -3; m <= 3; ++m) {
      const Rational mm(m);
      const Rational cubic = (Rational(9, 2) * g - 9) * mm * mm * mm + (g / 2 + 6) * mm;
      if (chi_on_X(neg, 3, 0, m) != cubic) return {"riemann-roch-on-X", false, "c1 = -1: " + pair_str(neg)};
    }
  }
  return {"riemann-roch-on-X", true, "c1 in {2, 3, -1}"};
}

CheckResult check_plethysm() {
  const SheafExpr s2e = parse_sheaf("twist(sym(SymT(2,-2),2),-1)");
  const std::int64_t h0 = cohom_expr(s2e).h0;
  if (h0 != 3) return {"plethysm-s2s2", false, "h0(S^2 E(-1)) = " + std::to_string(h0)};
  if (cohom_symT(4, -5).h0 != 0) return {"plethysm-s2s2", false, "h0(S^4 T(-5)) != 0"};
  const SheafExpr s2 = parse_sheaf("sym(SymT(2,-2),2)");
  if (chern_character(s2) != chern_character(parse_sheaf("SymT(4,-4)+O(2)")))
    return {"plethysm-s2s2", false, "Chern characters differ"};
  return {"plethysm-s2s2", true, "h0(S^2 E(-1)) = 3"};
}

CheckResult check_boundary_root() {
  const ChernPair m9{3, 6};  // gamma = -9
  const BoundaryRoot r = boundary_root(m9, Normalization::OZ3);
  const QuadValue expected(Rational(9, 2), Rational(-3, 2), 5);
  if (!r.exists || *r.k != expected) return {"boundary-root-exact", false, "k for gamma = -9, c1 = 3"};
  if (cube_on_ray(m9, *r.k).sign() != 0)
    return {"boundary-root-exact", false, "D^3 != 0 at the root"};
  if (quad_is_rational(*r.k)) return {"boundary-root-exact", false, "k reported rational"};
  for (std::int64_t c1 = -kC1Max; c1 <= kC1Max; ++c1)
    for (std::int64_t c2 = -kC2Max; c2 <= 40; ++c2) {
      const ChernPair cp{c1, c2};
      const std::int64_t g = cp.gamma();
      if (g < -27 || g > 2) continue;
      const BoundaryRoot b = boundary_root(cp, Normalization::OZ3);
      std::int64_t s = 0;
      while (s * s < 9 - 4 * g) ++s;
      const bool square = s * s == 9 - 4 * g;
      if (!b.exists || quad_is_rational(*b.k) != square)
        return {"boundary-root-exact", false, pair_str(cp) + ": rationality differs from 9 - 4 gamma square test"};
      if (cube_on_ray(cp, *b.k).sign() != 0 || cube_on_ray(cp, *b.k_plus).sign() != 0)
        return {"boundary-root-exact", false, pair_str(cp) + ": D^3 != 0"};
    }
  return {"boundary-root-exact", true, "k = 9/2 - 3/2*sqrt(5) at gamma = -9"};
}

CheckResult check_c2_positivity() {
  for (std::int64_t g = -27; g <= 27; ++g) {
    if (g <= 2) {
      const QuadValue bound =
          QuadValue(Rational(18 + 2 * g)) + sqrt_to_quad(Rational(9, 4) - Rational(g)) * QuadValue(Rational(12));
      if (bound.sign() <= 0) return {"c2-positivity-sweep", false, "closed bound <= 0 at gamma = " + std::to_string(g)};
    }
    // gamma = c1^2 - 3 c2 is never 2 mod 3.
    const std::int64_t r = ((g % 3) + 3) % 3;
    if (r == 2) continue;
    for (std::int64_t c1 : {r == 0 ? 0 : 1, r == 0 ? 3 : 2, r == 0 ? -3 : 4}) {
      const ChernPair c{c1, (c1 * c1 - g) / 3};
      const C2Positivity p = c2_positivity(c);
      if (!p.positive) return {"c2-positivity-sweep", false, pair_str(c) + ": min = " + p.min_value.str()};
      if (p.hray_value != 36) return {"c2-positivity-sweep", false, pair_str(c) + ": pi^*h.c2 != 36"};
      if (p.closed_bound && p.values.front().value != *p.closed_bound)
        return {"c2-positivity-sweep", false, pair_str(c) + ": boundary value differs from closed bound"};
    }
  }
  return {"c2-positivity-sweep", true, "gamma in [-27, 27]"};
}

CheckResult check_nef_gamma() {
  return over_split("nef-implies-gamma-ge-minus-18", -4, 4, [](const SplittingType& e) -> std::string {
    const BundleSpec spec = BundleSpec::split(e[0], e[1], e[2]);
    if (minusK_status(spec).nef != Tri::True) return "";
    if (spec.chern().gamma() < -18) return "nef with gamma = " + std::to_string(spec.chern().gamma());
    if (rationality_verdict(spec).verdict != Verdict::Rational) return "nef but verdict not rational";
    return "";
  });
}

CheckResult check_mu_empty() {
  for (std::int64_t c2 = -kC2Max; c2 <= kC2Max; ++c2) {
    const ChernPair c{2, c2};
    if (!g_surface_class(c).mu_candidates.empty()) return {"mu-empty-c1-2", false, pair_str(c)};
    BundleSpec spec = BundleSpec::chern_only(c);
    spec.assume_minus_k(Tri::True, Tri::False);
    const RestrictionCase k = classify_cone_restriction(spec);
    if (k.kind != RestrictionCase::Kind::Equality) return {"mu-empty-c1-2", false, pair_str(c) + ": not equality"};
  }
  return {"mu-empty-c1-2", true, "c1 = 2, |c2| <= 10"};
}

CheckResult check_catalog() {
  for (const auto& e : catalog()) {
    const auto ch_end = chern_character(parse_sheaf(e.end_expr));
    const auto ch_s3 = chern_character(parse_sheaf(e.s3_expr));
    if (ch_end != chern_character(parse_sheaf(e.formal_end)))
      return {"catalog-chern-character", false, e.id + ": End(E) expansion"};
    if (ch_s3 != chern_character(parse_sheaf(e.formal_s3)))
      return {"catalog-chern-character", false, e.id + ": S^3 E expansion"};
    const auto ch = chern_character(parse_sheaf(e.bundle_expr));
    // c1 = ch1, c2 = ch1^2 / 2 - ch2
    if (ch.rank != 3 || ch.ch1 != e.chern.c1 || ch.ch1 * ch.ch1 / 2 - ch.ch2 != e.chern.c2)
      return {"catalog-chern-character", false, e.id + ": Chern pair"};
  }
  // Restricted Euler sequence 0 -> O(k) -> O(k+1)^4 -> E(k) -> 0 for E = T_P3|P2.
  const auto tp3 = parse_sheaf("SymT(1,0)+O(1)");
  for (std::int64_t k = -1; k <= 5; ++k) {
    const std::int64_t via_expr = cohom_expr(SheafExpr::twist(tp3, k)).h0;
    if (via_expr != 4 * h0_line(k + 1) - h0_line(k))
      return {"catalog-chern-character", false, "TP3restP2: h0(E(" + std::to_string(k) + "))"};
  }
  return {"catalog-chern-character", true, std::to_string(catalog().size()) + " entries"};
}

}  // namespace

SelftestHooks SelftestHooks::defaults() {
  SelftestHooks h;
  h.gram_det = [](const ChernPair& c) { return gram_matrix(c).det; };
  h.c3_closed = [](const ChernPair& c) { return xprod_closed_form(c).c3; };
  return h;
}

SelftestHooks SelftestHooks::tampered(std::string_view what) {
  SelftestHooks h = defaults();
  if (what == "gram") {
    h.gram_det = [](const ChernPair& c) { return -gram_matrix(c).det; };
  } else if (what == "c3") {
    h.c3_closed = [](const ChernPair& c) { return Rational(-6 * c.gamma() - 160); };
  } else {
    throw std::invalid_argument("unknown tamper target '" + std::string(what) + "' (expected gram or c3)");
  }
  return h;
}

std::vector<CheckResult> run_selftest(const SelftestHooks& hooks) {
  return {check_split_012(),    check_split_003(),    check_uniform_gamma(), check_xprod(),
          check_c3(hooks),      check_gram(hooks),    check_chi_end(),       check_table(),
          check_rr_on_x(),      check_plethysm(),     check_boundary_root(), check_c2_positivity(),
          check_nef_gamma(),    check_mu_empty(),     check_catalog()};
}

}  // namespace cycone
