#include "cycone/cyinv.hpp"

#include "cycone/cohom.hpp"

namespace cycone {

XProducts xprod_closed_form(const ChernPair& c) {
  const std::int64_t g = c.gamma();
  XProducts x;
  x.o1_cubed = g + c.c1 * c.c1 + 3 * c.c1;
  x.o1_sq_h = 2 * c.c1 + 3;
  x.o1_f = 3;
  x.o1_c2 = 36 + 12 * c.c1 + 2 * g;
  x.h_c2 = 36;
  x.c3 = -6 * g - 162;
  return x;
}

XProducts xprod_via_chow(const ChernPair& c) {
  const ChowClass xi = ChowClass::xi();
  const ChowClass h = ChowClass::h();
  const ChowClass c2x = c2_of_X(c);
  XProducts x;
  x.o1_cubed = integrate_on_X(power(xi, 3, c), c);
  x.o1_sq_h = integrate_on_X(mul(power(xi, 2, c), h, c), c);
  x.o1_f = integrate_on_X(mul(xi, ChowClass::fiber(), c), c);
  x.o1_c2 = integrate_on_X(mul(xi, c2x, c), c);
  x.h_c2 = integrate_on_X(mul(h, c2x, c), c);
  x.c3 = integrate_on_X(c3_of_X(c), c);
  return x;
}

CYInvariants xprod_table(const ChernPair& c, bool rho_is_two) {
  const XProducts closed = xprod_closed_form(c);
  const XProducts engine = xprod_via_chow(c);
  if (!(closed == engine))
    throw InvariantViolation("X intersection numbers: closed forms and Chow ring disagree for c = (" +
                             std::to_string(c.c1) + "," + std::to_string(c.c2) + ")");
  CYInvariants inv;
  inv.gamma = c.gamma();
  inv.c3 = engine.c3.to_int();
  inv.xprod = engine;
  if (rho_is_two) inv.h12 = 3 * inv.gamma + 83;
  return inv;
}

Rational chi_on_X(const ChernPair& c, std::int64_t alpha, std::int64_t beta, std::int64_t m) {
  const ChowClass d = ChowClass::divisor(alpha, beta);
  const Rational cube = integrate_on_X(power(d, 3, c), c);
  const Rational dc2 = integrate_on_X(mul(d, c2_of_X(c), c), c);
  const Rational mm(m);
  return mm * mm * mm * cube / Rational(6) + mm * dc2 / Rational(12);
}

SectionBounds section_bounds(const ChernPair& c) {
  SectionBounds s;
  const Rational g(c.gamma());
  const Rational c1(c.c1);
  s.lb_minus_h = g / Rational(3) + c1 * c1 / Rational(6) + c1 / Rational(2);
  s.h0_o1_chi = chi_on_X(c, 1, 0, 1);
  s.normal_bound = 5 * c.gamma() + 91;
  s.c1_ge_minus1 = c.c1 >= -1;
  s.lb_positive = s.lb_minus_h.sign() > 0;
  s.consistent = s.c1_ge_minus1 && (!s.lb_positive || c.c1 >= 1);
  s.hypotheses = {"assumes O_X(1) ample", "assumes -K_Z nef", "assumes rho(X) = 2"};
  return s;
}

SplittingType normalize_type(const SplittingType& e) {
  const std::int64_t c1 = e[0] + e[1] + e[2];
  // smallest t with c1 + 3t >= 1
  std::int64_t t = (1 - c1) >= 0 ? (1 - c1 + 2) / 3 : -((c1 - 1) / 3);
  return {e[0] + t, e[1] + t, e[2] + t};
}

RhoResult rho_of_X(const BundleSpec& spec, Tri big_and_nef) {
  if (big_and_nef != Tri::True) return {std::nullopt, "requires_big_nef"};
  if (auto end = spec.end_expr()) {
    try {
      return {2 + cohom_expr(*end).h2, "end_cohomology"};
    } catch (const UnsupportedExpression&) {
      // fall back to the splitting type
    }
  }
  if (auto type = spec.splitting_type()) {
    const SplittingType n = normalize_type(*type);
    if (n != SplittingType{0, 0, 3}) return {2, "splitting_type"};
  }
  return {std::nullopt, "undetermined"};
}

}  // namespace cycone
