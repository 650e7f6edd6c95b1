#include "cycone/cone.hpp"

#include <algorithm>

namespace cycone {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

QuadValue to_quad(const Rational& r) { return QuadValue(r); }

}  // namespace

Tri MinusKStatus::big_and_nef() const {
  if (nef == Tri::True && big == Tri::True) return Tri::True;
  if (nef == Tri::False || big == Tri::False) return Tri::False;
  return Tri::Unknown;
}

MinusKStatus minusK_status(const BundleSpec& spec) {
  MinusKStatus st;
  const ChernPair c = spec.chern();
  const auto type = spec.splitting_type();

  if (spec.uniform() && type) {
    // -K_Z restricted to the section P(O(e1)) over a line
    const std::int64_t s = 3 * (*type)[0] + 3 - c.c1;
    st.nef = to_tri(s >= 0);
    st.ample = to_tri(s > 0);
    st.witnesses.push_back({"minus_k_on_line_section", s});
  } else {
    st.nef = spec.assumed_nef();
    st.ample = spec.assumed_ample();
    if (st.ample == Tri::True) st.nef = Tri::True;
    if (st.nef == Tri::False) st.ample = Tri::False;
  }

  const ChowClass k = anticanonical(c);
  const std::array<ChowClass, 4> factors{k, k, k, k};
  const Rational top = intersect4(factors, c);
  st.witnesses.push_back({"minus_k_fourth_power", top});
  if (st.nef == Tri::True) st.big = to_tri(top.sign() > 0);

  const H0MinusK h0 = h0_minus_K(spec);
  st.h0_gt_1 = h0.gt1;
  if (h0.value) st.witnesses.push_back({"h0_minus_k", *h0.value});
  return st;
}

RhoResult rho_of_X(const BundleSpec& spec) { return rho_of_X(spec, minusK_status(spec).big_and_nef()); }

BoundaryRoot boundary_root(const ChernPair& c, Normalization norm) {
  BoundaryRoot r;
  r.normalization = norm;
  const Rational disc = Rational(9, 4) - Rational(c.gamma());
  if (disc.sign() < 0) return r;
  const QuadValue s = sqrt_to_quad(disc);
  const QuadValue center = to_quad(Rational(c.c1) + Rational(3, 2));
  QuadValue lo = center - s;
  QuadValue hi = center + s;
  if (norm == Normalization::OZ1) {
    lo /= Rational(3);
    hi /= Rational(3);
  }
  r.k = lo;
  r.k_plus = hi;
  r.exists = true;
  return r;
}

QuadValue cube_on_ray(const ChernPair& c, const QuadValue& k) {
  const ChowClass xi = ChowClass::xi();
  const ChowClass h = ChowClass::h();
  const Rational xxx = integrate_on_X(power(xi, 3, c), c);
  const Rational xxh = integrate_on_X(mul(power(xi, 2, c), h, c), c);
  const Rational xhh = integrate_on_X(mul(xi, power(h, 2, c), c), c);
  const Rational hhh = integrate_on_X(power(h, 3, c), c);
  // (3 xi - k H)^3 = 27 xi^3 - 27 k xi^2 H + 9 k^2 xi H^2 - k^3 H^3
  const QuadValue k2 = k * k;
  const QuadValue k3 = k2 * k;
  return to_quad(Rational(27) * xxx) - k * to_quad(Rational(27) * xxh) + k2 * to_quad(Rational(9) * xhh) -
         k3 * to_quad(hhh);
}

VerdictResult rationality_verdict(const BundleSpec& spec) {
  VerdictResult out;
  const ChernPair c = spec.chern();
  const std::int64_t g = c.gamma();
  const MinusKStatus mk = minusK_status(spec);

  const RhoResult rho = rho_of_X(spec, mk.big_and_nef());
  if (rho.rho && *rho.rho != 2)
    out.warnings.push_back("rho(X) = " + std::to_string(*rho.rho) + " contradicts the standing assumption rho(X) = 2");
  if (g < -27) out.warnings.push_back("gamma < -27 is incompatible with rho(X) = 2");
  if (g == -27) out.warnings.push_back("gamma = -27 is the boundary of validity: c3(X) = 0");

  const H0MinusK h0 = h0_minus_K(spec);
  if (h0.value && *h0.value > 1)
    out.trail.push_back({"h0_minus_k_gt_1", "h0(-K_Z) = " + std::to_string(*h0.value) + " > 1"});
  if (g >= -18)
    out.trail.push_back({"gamma_ge_minus_18", "gamma = " + std::to_string(g) + " >= -18, c3(X) = " +
                                                  std::to_string(-6 * g - 162) + " <= -54"});
  const BoundaryRoot root = boundary_root(c, Normalization::OZ3);
  if (!root.exists)
    out.trail.push_back({"boundary_root_absent", "9/4 - gamma < 0: the second boundary ray lies off D^3 = 0"});
  else if (root.k->is_rational())
    out.trail.push_back({"boundary_root_rational", "k = " + root.k->str() + " is rational"});

  if (!out.trail.empty()) {
    out.verdict = Verdict::Rational;
    const auto& first = out.trail.front().tag;
    out.conditional = first == "boundary_root_absent" || first == "boundary_root_rational";
  }
  return out;
}

C2Positivity c2_positivity(const ChernPair& c) {
  C2Positivity out;
  const std::int64_t g = c.gamma();
  out.gamma_consistent = g >= -27;

  const ChowClass c2x = c2_of_X(c);
  const Rational xi_c2 = integrate_on_X(mul(ChowClass::xi(), c2x, c), c);
  const Rational h_c2 = integrate_on_X(mul(ChowClass::h(), c2x, c), c);
  out.hray_value = h_c2.to_int();

  const BoundaryRoot root = boundary_root(c, Normalization::OZ1);
  if (root.exists) {
    const QuadValue value = to_quad(xi_c2) - *root.k * to_quad(h_c2);
    out.values.push_back({"O_X(1) - k*pi^*h", value});
    out.closed_bound =
        to_quad(Rational(18 + 2 * g)) + sqrt_to_quad(Rational(9, 4) - Rational(g)) * to_quad(Rational(12));
  } else {
    const Rational k_c2 = integrate_on_X(mul(anticanonical(c), c2x, c), c);
    out.values.push_back({"-K_Z|X", to_quad(k_c2)});
  }
  out.values.push_back({"pi^*h", to_quad(h_c2)});

  out.min_value = out.values.front().value;
  for (const auto& v : out.values)
    if (compare(v.value, out.min_value) < 0) out.min_value = v.value;
  out.positive = out.min_value.sign() > 0;
  return out;
}

std::vector<SplittingType> allowed_splitting_types(std::int64_t c1) {
  std::vector<SplittingType> out;
  if (c1 < -1 || c1 > 4) return out;
  const std::int64_t a_min = ceil_div(c1 - 3, 3);  // ceil(c1/3 - 1)
  for (std::int64_t a = a_min; 3 * a <= c1; ++a)
    for (std::int64_t b = a; 2 * b <= c1 - a; ++b) {
      const std::int64_t cc = c1 - a - b;
      if (3 * b + 3 - c1 > 0) out.push_back({a, b, cc});
    }
  return out;
}

RestrictionCase classify_cone_restriction(const BundleSpec& spec) {
  const MinusKStatus mk = minusK_status(spec);
  RestrictionCase out;
  if (mk.ample == Tri::True) {
    out.kind = RestrictionCase::Kind::Equality;
    out.reason = "ample";
  } else if (mk.nef == Tri::False) {
    out.kind = RestrictionCase::Kind::Equality;
    out.reason = "not_nef";
  } else if (mk.nef == Tri::True && mk.ample == Tri::False && mk.big == Tri::False) {
    out.kind = RestrictionCase::Kind::Equality;
    out.reason = "not_big";
  } else if (mk.nef == Tri::True && mk.ample == Tri::False && mk.big == Tri::True) {
    GSurfaceClass g = g_surface_class(spec.chern());
    if (g.mu_candidates.empty()) {
      out.kind = RestrictionCase::Kind::Equality;
      out.reason = "mu_empty";
    } else {
      out.kind = RestrictionCase::Kind::ExceptionalCandidate;
      out.reason = "exceptional_surface";
    }
    out.g_surface = std::move(g);
  } else {
    out.kind = RestrictionCase::Kind::NotDetermined;
    out.reason = "insufficient_data";
  }
  return out;
}

std::string_view to_string(Verdict v) { return v == Verdict::Rational ? "rational" : "unknown"; }

std::string_view to_string(RestrictionCase::Kind k) {
  switch (k) {
    case RestrictionCase::Kind::Equality: return "equality";
    case RestrictionCase::Kind::ExceptionalCandidate: return "exceptional_candidate";
    case RestrictionCase::Kind::NotDetermined: return "not_determined";
  }
  return "not_determined";
}

ConeReport cone_report(const BundleSpec& spec) {
  ConeReport r;
  const ChernPair c = spec.chern();
  r.root_oz3 = boundary_root(c, Normalization::OZ3);
  r.root_oz1 = boundary_root(c, Normalization::OZ1);
  VerdictResult v = rationality_verdict(spec);
  r.verdict = v.verdict;
  r.trail = std::move(v.trail);
  r.verdict_conditional = v.conditional;
  r.warnings = std::move(v.warnings);
  r.c2 = c2_positivity(c);
  if (!r.c2.gamma_consistent) r.warnings.push_back("c2 positivity is only guaranteed for gamma >= -27");
  r.restriction = classify_cone_restriction(spec);
  // pi^*h spans one boundary ray and lies on D^3 = 0; without a second real
  // root the other ray cannot.
  r.w_contains_boundary = r.root_oz3.exists ? Tri::Unknown : Tri::False;
  return r;
}

}  // namespace cycone
