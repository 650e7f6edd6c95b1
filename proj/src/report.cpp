#include "cycone/report.hpp"

#include <sstream>

namespace cycone {

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_opt(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

Tri get_tri(const Json& j, const char* key) { return parse_tri(j.at(key).get<std::string>()); }

std::string tri_str(Tri t) { return std::string(to_string(t)); }

Json chern_json(const ChernPair& c) { return Json{{"c1", c.c1}, {"c2", c.c2}}; }
ChernPair chern_from(const Json& j) { return {j.at("c1").get<std::int64_t>(), j.at("c2").get<std::int64_t>()}; }

Json optional_chern(const std::optional<ChernPair>& c) { return c ? chern_json(*c) : Json(nullptr); }

std::string_view to_string(Normalization n) { return n == Normalization::OZ3 ? "oz3" : "oz1"; }

Normalization parse_normalization(const std::string& s) {
  if (s == "oz3") return Normalization::OZ3;
  if (s == "oz1") return Normalization::OZ1;
  throw std::invalid_argument("bad normalization '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  if (s == "rational") return Verdict::Rational;
  if (s == "unknown") return Verdict::Unknown;
  throw std::invalid_argument("bad verdict '" + s + "'");
}

RestrictionCase::Kind parse_kind(const std::string& s) {
  for (auto k : {RestrictionCase::Kind::Equality, RestrictionCase::Kind::ExceptionalCandidate, RestrictionCase::Kind::NotDetermined})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("bad cone restriction kind '" + s + "'");
}

Json xprod_json(const XProducts& x) {
  return Json{{"o1_cubed", x.o1_cubed}, {"o1_sq_h", x.o1_sq_h}, {"o1_f", x.o1_f},
              {"o1_c2", x.o1_c2},       {"h_c2", x.h_c2},       {"c3", x.c3}};
}

XProducts xprod_from(const Json& j) {
  XProducts x;
  x.o1_cubed = j.at("o1_cubed").get<Rational>();
  x.o1_sq_h = j.at("o1_sq_h").get<Rational>();
  x.o1_f = j.at("o1_f").get<Rational>();
  x.o1_c2 = j.at("o1_c2").get<Rational>();
  x.h_c2 = j.at("h_c2").get<Rational>();
  x.c3 = j.at("c3").get<Rational>();
  return x;
}

Json minus_k_json(const MinusKStatus& m) {
  Json w = Json::array();
  for (const auto& x : m.witnesses) w.push_back(Json{{"test", x.test}, {"value", x.value}});
  return Json{{"nef", tri_str(m.nef)},
              {"ample", tri_str(m.ample)},
              {"big", tri_str(m.big)},
              {"big_and_nef", tri_str(m.big_and_nef())},
              {"h0_gt_1", tri_str(m.h0_gt_1)},
              {"witnesses", w}};
}

MinusKStatus minus_k_from(const Json& j) {
  MinusKStatus m;
  m.nef = get_tri(j, "nef");
  m.ample = get_tri(j, "ample");
  m.big = get_tri(j, "big");
  m.h0_gt_1 = get_tri(j, "h0_gt_1");
  for (const auto& w : j.at("witnesses"))
    m.witnesses.push_back({w.at("test").get<std::string>(), w.at("value").get<Rational>()});
  return m;
}

Json root_json(const BoundaryRoot& r) {
  return Json{{"exists", r.exists},
              {"normalization", std::string(to_string(r.normalization))},
              {"k", opt(r.k)},
              {"k_plus", opt(r.k_plus)}};
}

BoundaryRoot root_from(const Json& j) {
  BoundaryRoot r;
  r.exists = j.at("exists").get<bool>();
  r.normalization = parse_normalization(j.at("normalization").get<std::string>());
  r.k = get_opt<QuadValue>(j, "k");
  r.k_plus = get_opt<QuadValue>(j, "k_plus");
  return r;
}

Json c2_json(const C2Positivity& c) {
  Json values = Json::array();
  for (const auto& v : c.values) values.push_back(Json{{"ray", v.ray}, {"value", v.value}});
  return Json{{"values", values},
              {"min_value", c.min_value},
              {"closed_bound", opt(c.closed_bound)},
              {"hray_value", c.hray_value},
              {"positive", c.positive},
              {"gamma_consistent", c.gamma_consistent}};
}

C2Positivity c2_from(const Json& j) {
  C2Positivity c;
  for (const auto& v : j.at("values"))
    c.values.push_back({v.at("ray").get<std::string>(), v.at("value").get<QuadValue>()});
  c.min_value = j.at("min_value").get<QuadValue>();
  c.closed_bound = get_opt<QuadValue>(j, "closed_bound");
  c.hray_value = j.at("hray_value").get<std::int64_t>();
  c.positive = j.at("positive").get<bool>();
  c.gamma_consistent = j.at("gamma_consistent").get<bool>();
  return c;
}

Json g_surface_json(const GSurfaceClass& g) {
  Json mu = Json::array();
  for (auto m : g.mu_candidates) mu.push_back(m);
  return Json{{"g_xi2", g.g_xi2}, {"g_xi_h", g.g_xiH},       {"g_f", g.g_F},
              {"gcd", g.gcd},     {"mu_candidates", mu}, {"fibre_bound_applied", g.fibre_bound_applied}};
}

GSurfaceClass g_surface_from(const Json& j) {
  GSurfaceClass g;
  g.g_xi2 = j.at("g_xi2").get<std::int64_t>();
  g.g_xiH = j.at("g_xi_h").get<std::int64_t>();
  g.g_F = j.at("g_f").get<std::int64_t>();
  g.gcd = j.at("gcd").get<std::int64_t>();
  for (const auto& m : j.at("mu_candidates")) g.mu_candidates.insert(m.get<std::int64_t>());
  g.fibre_bound_applied = j.at("fibre_bound_applied").get<bool>();
  return g;
}

Json cone_json(const ConeReport& c) {
  Json trail = Json::array();
  for (const auto& t : c.trail) trail.push_back(Json{{"tag", t.tag}, {"detail", t.detail}});
  Json restriction{{"kind", std::string(to_string(c.restriction.kind))},
                   {"reason", c.restriction.reason},
                   {"g_surface", c.restriction.g_surface ? g_surface_json(*c.restriction.g_surface) : Json(nullptr)}};
  Json out{{"boundary_root_oz3", root_json(c.root_oz3)},
           {"boundary_root_oz1", root_json(c.root_oz1)},
           {"verdict", std::string(to_string(c.verdict))},
           {"verdict_conditional", c.verdict_conditional},
           {"trail", trail},
           {"c2_positivity", c2_json(c.c2)},
           {"cone_restriction", restriction},
           {"w_contains_boundary", tri_str(c.w_contains_boundary)},
           {"warnings", c.warnings}};
  if (c.verdict_conditional)
    out["verdict_condition"] =
        "conditional on the boundary of K(X) lying in W: rays off W are rational, and a rational root makes the "
        "ray on W rational";
  return out;
}

ConeReport cone_from(const Json& j) {
  ConeReport c;
  c.root_oz3 = root_from(j.at("boundary_root_oz3"));
  c.root_oz1 = root_from(j.at("boundary_root_oz1"));
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  c.verdict_conditional = j.at("verdict_conditional").get<bool>();
  for (const auto& t : j.at("trail")) c.trail.push_back({t.at("tag").get<std::string>(), t.at("detail").get<std::string>()});
  c.c2 = c2_from(j.at("c2_positivity"));
  const Json& k = j.at("cone_restriction");
  c.restriction.kind = parse_kind(k.at("kind").get<std::string>());
  c.restriction.reason = k.at("reason").get<std::string>();
  if (!k.at("g_surface").is_null()) c.restriction.g_surface = g_surface_from(k.at("g_surface"));
  c.w_contains_boundary = get_tri(j, "w_contains_boundary");
  c.warnings = j.at("warnings").get<std::vector<std::string>>();
  return c;
}

Json bounds_json(const SectionBounds& s) {
  return Json{{"lb_minus_h", s.lb_minus_h},     {"h0_o1_chi", s.h0_o1_chi},   {"normal_bound", s.normal_bound},
              {"c1_ge_minus1", s.c1_ge_minus1}, {"lb_positive", s.lb_positive}, {"consistent", s.consistent},
              {"hypotheses", s.hypotheses}};
}

SectionBounds bounds_from(const Json& j) {
  SectionBounds s;
  s.lb_minus_h = j.at("lb_minus_h").get<Rational>();
  s.h0_o1_chi = j.at("h0_o1_chi").get<Rational>();
  s.normal_bound = j.at("normal_bound").get<std::int64_t>();
  s.c1_ge_minus1 = j.at("c1_ge_minus1").get<bool>();
  s.lb_positive = j.at("lb_positive").get<bool>();
  s.consistent = j.at("consistent").get<bool>();
  s.hypotheses = j.at("hypotheses").get<std::vector<std::string>>();
  return s;
}

Json echo_json(const SpecEcho& e) {
  return Json{{"kind", e.kind},
              {"description", e.description},
              {"split", opt(e.split)},
              {"named", opt(e.named)},
              {"chern", optional_chern(e.chern)},
              {"type", opt(e.type)},
              {"twist", e.twist},
              {"assume_nef", tri_str(e.assume_nef)},
              {"assume_ample", tri_str(e.assume_ample)}};
}

SpecEcho echo_from(const Json& j) {
  SpecEcho e;
  e.kind = j.at("kind").get<std::string>();
  e.description = j.at("description").get<std::string>();
  e.split = get_opt<SplittingType>(j, "split");
  e.named = get_opt<std::string>(j, "named");
  if (!j.at("chern").is_null()) e.chern = chern_from(j.at("chern"));
  e.type = get_opt<SplittingType>(j, "type");
  e.twist = j.at("twist").get<std::int64_t>();
  e.assume_nef = get_tri(j, "assume_nef");
  e.assume_ample = get_tri(j, "assume_ample");
  return e;
}

}  // namespace

void to_json(Json& j, const Rational& r) { j = r.str(); }

void from_json(const Json& j, Rational& r) {
  if (j.is_number_integer()) {
    r = Rational(j.get<std::int64_t>());
    return;
  }
  r = Rational::parse(j.get<std::string>());
}

void to_json(Json& j, const QuadValue& q) { j = Json{{"a", q.a()}, {"b", q.b()}, {"n", q.n()}}; }

void from_json(const Json& j, QuadValue& q) {
  q = QuadValue(j.at("a").get<Rational>(), j.at("b").get<Rational>(), j.at("n").get<std::int64_t>());
}

SpecEcho echo_spec(const BundleSpec& spec) {
  SpecEcho e;
  e.description = spec.describe();
  e.twist = spec.twist_amount();
  e.assume_nef = spec.assumed_nef();
  e.assume_ample = spec.assumed_ample();
  switch (spec.kind()) {
    case BundleSpec::Kind::Split:
      e.kind = "split";
      e.split = spec.input_split();
      break;
    case BundleSpec::Kind::Named:
      e.kind = "named";
      e.named = spec.named_id();
      break;
    case BundleSpec::Kind::ChernOnly:
      e.kind = "chern";
      e.chern = spec.input_chern();
      e.type = spec.input_type();
      break;
  }
  return e;
}

AnalysisReport analyze(const BundleSpec& spec) {
  AnalysisReport r;
  r.spec = echo_spec(spec);
  r.chern = spec.chern();
  r.splitting_type = spec.splitting_type();
  r.uniform = spec.uniform();

  const CYInvariants inv = xprod_table(r.chern, false);
  r.gamma = inv.gamma;
  r.c3 = inv.c3;
  r.xprod = inv.xprod;

  r.minus_k = minusK_status(spec);
  r.rho = rho_of_X(spec, r.minus_k.big_and_nef());
  if (r.rho.rho && *r.rho.rho != 2) {
    r.h12_status = "not_applicable";
  } else {
    r.h12 = 3 * r.gamma + 83;
    r.h12_status = r.rho.rho ? "rho_established" : "assumes rho(X) = 2";
  }

  r.h0_minus_k = h0_minus_K(spec);
  r.cone = cone_report(spec);
  r.section_bounds = section_bounds(r.chern);
  r.g_surface = g_surface_class(r.chern);

  r.warnings = r.cone.warnings;
  if (r.h12_status == "assumes rho(X) = 2") r.warnings.push_back("h12 assumes rho(X) = 2");
  if (!r.section_bounds.consistent)
    r.warnings.push_back("section bounds: O_X(1) ample and -K_Z nef cannot both hold");
  if (r.minus_k.nef == Tri::Unknown)
    r.warnings.push_back("-K_Z positivity unknown; supply --assume-nef/--assume-ample");
  if (r.h0_minus_k.reason == "gamma_ge_minus_18")
    r.warnings.push_back("h0(-K_Z) > 1 inferred from gamma >= -18, not computed");
  return r;
}

void to_json(Json& j, const AnalysisReport& r) {
  j = Json{{"spec", echo_json(r.spec)},
           {"chern", chern_json(r.chern)},
           {"splitting_type", opt(r.splitting_type)},
           {"uniform", r.uniform},
           {"gamma", r.gamma},
           {"c3", r.c3},
           {"h12", opt(r.h12)},
           {"h12_status", r.h12_status},
           {"xprod", xprod_json(r.xprod)},
           {"rho", Json{{"value", opt(r.rho.rho)}, {"reason", r.rho.reason}}},
           {"minus_k", minus_k_json(r.minus_k)},
           {"h0_minus_k",
            Json{{"value", opt(r.h0_minus_k.value)}, {"gt1", tri_str(r.h0_minus_k.gt1)}, {"reason", r.h0_minus_k.reason}}},
           {"cone", cone_json(r.cone)},
           {"section_bounds", bounds_json(r.section_bounds)},
           {"g_surface", g_surface_json(r.g_surface)},
           {"warnings", r.warnings}};
}

void from_json(const Json& j, AnalysisReport& r) {
  r.spec = echo_from(j.at("spec"));
  r.chern = chern_from(j.at("chern"));
  r.splitting_type = get_opt<SplittingType>(j, "splitting_type");
  r.uniform = j.at("uniform").get<bool>();
  r.gamma = j.at("gamma").get<std::int64_t>();
  r.c3 = j.at("c3").get<std::int64_t>();
  r.h12 = get_opt<std::int64_t>(j, "h12");
  r.h12_status = j.at("h12_status").get<std::string>();
  r.xprod = xprod_from(j.at("xprod"));
  r.rho.rho = get_opt<std::int64_t>(j.at("rho"), "value");
  r.rho.reason = j.at("rho").at("reason").get<std::string>();
  r.minus_k = minus_k_from(j.at("minus_k"));
  const Json& h0 = j.at("h0_minus_k");
  r.h0_minus_k.value = get_opt<std::int64_t>(h0, "value");
  r.h0_minus_k.gt1 = get_tri(h0, "gt1");
  r.h0_minus_k.reason = h0.at("reason").get<std::string>();
  r.cone = cone_from(j.at("cone"));
  r.section_bounds = bounds_from(j.at("section_bounds"));
  r.g_surface = g_surface_from(j.at("g_surface"));
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

std::string to_tsv(const AnalysisReport& r) {
  std::ostringstream os;
  auto row = [&](std::string_view key, const std::string& value) { os << key << '\t' << value << '\n'; };
  auto num = [](std::int64_t v) { return std::to_string(v); };
  row("spec", r.spec.description);
  row("c1", num(r.chern.c1));
  row("c2", num(r.chern.c2));
  if (r.splitting_type) {
    const auto& t = *r.splitting_type;
    row("splitting_type", num(t[0]) + "," + num(t[1]) + "," + num(t[2]));
  } else {
    row("splitting_type", "unknown");
  }
  row("gamma", num(r.gamma));
  row("c3", num(r.c3));
  row("h12", r.h12 ? num(*r.h12) : "n/a");
  row("rho", r.rho.rho ? num(*r.rho.rho) : "unknown");
  row("minus_k_nef", tri_str(r.minus_k.nef));
  row("minus_k_ample", tri_str(r.minus_k.ample));
  row("minus_k_big", tri_str(r.minus_k.big));
  row("h0_minus_k", r.h0_minus_k.value ? num(*r.h0_minus_k.value) : "unknown");
  row("boundary_root_oz3", r.cone.root_oz3.k ? r.cone.root_oz3.k->str() : "none");
  row("boundary_root_oz1", r.cone.root_oz1.k ? r.cone.root_oz1.k->str() : "none");
  row("verdict", std::string(to_string(r.cone.verdict)));
  row("verdict_trail", [&] {
    std::string s;
    for (const auto& t : r.cone.trail) s += (s.empty() ? "" : ",") + t.tag;
    return s.empty() ? std::string("none") : s;
  }());
  row("c2_min_boundary", r.cone.c2.min_value.str());
  row("c2_positive", r.cone.c2.positive ? "true" : "false");
  row("cone_restriction", std::string(to_string(r.cone.restriction.kind)));
  for (const auto& w : r.warnings) row("warning", w);
  return os.str();
}

}  // namespace cycone
