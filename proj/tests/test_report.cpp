#include <doctest.h>

#include <regex>

#include "cycone/report.hpp"

using namespace cycone;

namespace {

std::vector<BundleSpec> sample_specs() {
  std::vector<BundleSpec> out;
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = a; b <= 2; ++b)
      for (std::int64_t d = b; d <= 3; ++d) out.push_back(BundleSpec::split(a, b, d));
  for (const auto& e : catalog()) out.push_back(BundleSpec::named(e.id));
  out.push_back(BundleSpec::named("O+O(1)+O(4)"));
  out.push_back(BundleSpec::named("TP3restP2").twist(-2));
  out.push_back(BundleSpec::chern_only({3, 12}));
  out.push_back(BundleSpec::chern_only({3, 2}, SplittingType{0, 1, 2}).assume_minus_k(Tri::True, Tri::False));
  out.push_back(BundleSpec::chern_only({2, 5}).assume_minus_k(Tri::True, Tri::False));
  out.push_back(BundleSpec::chern_only({0, 18}));
  out.push_back(BundleSpec::chern_only({1, 7}).twist(3));
  return out;
}

void check_keys(const Json& j) {
  static const std::regex snake("^[a-z0-9_]+$");
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      CHECK_MESSAGE(std::regex_match(k, snake), k);
      check_keys(v);
    }
  } else if (j.is_array()) {
    for (const auto& v : j) check_keys(v);
  }
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("JSON round trip is lossless") {
    for (const auto& spec : sample_specs()) {
      const AnalysisReport r = analyze(spec);
      const Json j = r;
      const AnalysisReport back = Json::parse(j.dump()).get<AnalysisReport>();
      CHECK_MESSAGE(back == r, spec.describe());
      CHECK(Json(back).dump() == j.dump());
      check_keys(j);
    }
  }

  TEST_CASE("schema conventions") {
    const Json j = analyze(BundleSpec::named("S2TP2(-1)"));
    static const std::regex frac("^-?[0-9]+/[0-9]+$");
    for (const auto& [k, v] : j.at("xprod").items()) CHECK(std::regex_match(v.get<std::string>(), frac));
    const Json& k = j.at("cone").at("boundary_root_oz3").at("k");
    CHECK(k.at("a") == "9/2");
    CHECK(k.at("b") == "-3/2");
    CHECK(k.at("n") == 5);
    CHECK(j.at("minus_k").at("nef").is_string());
    CHECK(j.at("gamma") == -9);
  }

  TEST_CASE("headline numbers") {
    const AnalysisReport r = analyze(BundleSpec::split(0, 1, 2));
    CHECK(r.gamma == 3);
    CHECK(r.c3 == -180);
    CHECK(r.h12 == 92);
    CHECK(r.h12_status == "rho_established");
    CHECK(r.cone.verdict == Verdict::Rational);
    CHECK(r.section_bounds.hypotheses.front() == "assumes O_X(1) ample");

    const AnalysisReport rho4 = analyze(BundleSpec::named("2O+O(3)"));
    CHECK(rho4.rho.rho == 4);
    CHECK_FALSE(rho4.h12);
    CHECK(rho4.h12_status == "not_applicable");

    const AnalysisReport edge = analyze(BundleSpec::chern_only({3, 12}));
    CHECK(edge.c3 == 0);
    CHECK(edge.h12 == 2);
    CHECK(edge.h12_status == "assumes rho(X) = 2");
    const auto has = [&](const std::string& s) {
      return std::any_of(edge.warnings.begin(), edge.warnings.end(),
                         [&](const std::string& w) { return w.find(s) != std::string::npos; });
    };
    CHECK(has("boundary of validity"));
    CHECK(has("h12 assumes rho(X) = 2"));
  }

  TEST_CASE("twist echo and invariance") {
    const AnalysisReport base = analyze(BundleSpec::split(0, 1, 2));
    const AnalysisReport tw = analyze(BundleSpec::split(0, 1, 2).twist(2));
    CHECK(tw.spec.twist == 2);
    CHECK(tw.chern == ChernPair{9, 26});
    CHECK(tw.gamma == base.gamma);
    CHECK(tw.c3 == base.c3);
    CHECK(tw.minus_k == base.minus_k);
    CHECK(tw.cone.verdict == base.cone.verdict);
  }

  TEST_CASE("deterministic output") {
    const auto spec = BundleSpec::named("TP2(-1)+O(2)");
    CHECK(Json(analyze(spec)).dump() == Json(analyze(spec)).dump());
    CHECK(to_tsv(analyze(spec)) == to_tsv(analyze(spec)));
  }

  TEST_CASE("malformed JSON is rejected") {
    Json j = analyze(BundleSpec::split(0, 0, 0));
    j["minus_k"]["nef"] = "maybe";
    CHECK_THROWS(j.get<AnalysisReport>());
    Json k = analyze(BundleSpec::split(0, 0, 0));
    k.erase("cone");
    CHECK_THROWS(k.get<AnalysisReport>());
    Json q = analyze(BundleSpec::split(0, 0, 0));
    q["xprod"]["c3"] = "1/0";
    CHECK_THROWS(q.get<AnalysisReport>());
  }

  TEST_CASE("TSV listing") {
    const std::string tsv = to_tsv(analyze(BundleSpec::split(0, 1, 2)));
    CHECK(tsv.find("gamma\t3\n") != std::string::npos);
    CHECK(tsv.find("verdict\trational\n") != std::string::npos);
    CHECK(tsv.find("cone_restriction\texceptional_candidate\n") != std::string::npos);
  }
}
