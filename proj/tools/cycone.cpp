// Command-line front end: analyze, survey, catalog, selftest, cohom.
//
// Exit codes: 0 success, 1 usage error, 2 domain or invariant error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycone/bundle.hpp"
#include "cycone/cohom.hpp"
#include "cycone/cyinv.hpp"
#include "cycone/report.hpp"
#include "cycone/selftest.hpp"
#include "cycone/sheaf.hpp"
#include "cycone/survey.hpp"

namespace {

using namespace cycone;

constexpr const char* kVersion = "1.0.0";

/// Malformed input; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_ints(const std::string& text, std::size_t count, const char* flag) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw UsageError(std::string(flag) + ": expected integers, got '" + text + "'");
  }
  if (out.size() != count)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(count) + " comma-separated integers");
  return out;
}

Tri parse_tri_flag(const std::string& text, const char* flag) {
  try {
    return parse_tri(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": expected true, false or unknown");
  }
}

struct AnalyzeArgs {
  std::string split, named, chern, type;
  std::int64_t twist = 0;
  std::string assume_nef = "unknown";
  std::string assume_ample = "unknown";
  bool json = false;
  bool tsv = false;
};

struct CommonOut {
  std::string out;
  bool meta = false;
};

BundleSpec build_spec(const AnalyzeArgs& a) {
  const int given = !a.split.empty() + !a.named.empty() + !a.chern.empty();
  if (given != 1) throw UsageError("analyze: give exactly one of --split, --named, --chern");
  if (!a.type.empty() && a.chern.empty()) throw UsageError("--type only applies to --chern");
  BundleSpec spec;
  if (!a.split.empty()) {
    const auto e = parse_ints(a.split, 3, "--split");
    spec = BundleSpec::split(e[0], e[1], e[2]);
  } else if (!a.named.empty()) {
    if (!find_catalog(a.named)) throw UsageError("--named: unknown catalog bundle '" + a.named + "'");
    spec = BundleSpec::named(a.named);
  } else {
    const auto c = parse_ints(a.chern, 2, "--chern");
    std::optional<SplittingType> type;
    if (!a.type.empty()) {
      const auto t = parse_ints(a.type, 3, "--type");
      type = SplittingType{t[0], t[1], t[2]};
    }
    try {
      spec = BundleSpec::chern_only({c[0], c[1]}, type);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--type: ") + e.what());
    }
  }
  const Tri nef = parse_tri_flag(a.assume_nef, "--assume-nef");
  const Tri ample = parse_tri_flag(a.assume_ample, "--assume-ample");
  if (nef != Tri::Unknown || ample != Tri::Unknown) {
    if (spec.kind() != BundleSpec::Kind::ChernOnly)
      throw UsageError("--assume-nef/--assume-ample only apply to --chern");
    try {
      spec.assume_minus_k(nef, ample);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  spec.twist(a.twist);
  return spec;
}

Json meta_block(const std::string& command) {
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  return Json{{"tool", "cycone"}, {"version", kVersion}, {"command", command}, {"generated_unix", secs}};
}

void emit(const CommonOut& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("--out: cannot open '" + o.out + "'");
  f << text;
}

int cmd_analyze(const AnalyzeArgs& a, const CommonOut& o) {
  if (a.json && a.tsv) throw UsageError("analyze: --json and --tsv are exclusive");
  const BundleSpec spec = build_spec(a);
  const AnalysisReport r = analyze(spec);
  if (a.tsv) {
    std::string text = to_tsv(r);
    if (o.meta) text = "# cycone " + std::string(kVersion) + "\n" + text;
    emit(o, text);
  } else {
    Json j = r;
    if (o.meta) j["meta"] = meta_block("analyze");
    emit(o, j.dump(2) + "\n");
  }
  return 0;
}

struct SurveyArgs {
  std::int64_t emin = 0;
  std::int64_t emax = 0;
  std::string filter;
  unsigned workers = 0;
  bool json = false;
};

int cmd_survey(const SurveyArgs& a, const CommonOut& o) {
  SurveyFilter filter;
  std::vector<SurveyRow> rows;
  try {
    filter = SurveyFilter::parse(a.filter);
    rows = run_survey(a.emin, a.emax, filter, a.workers ? a.workers : default_workers());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  if (a.json) {
    if (o.meta) os << Json{{"meta", meta_block("survey")}}.dump() << '\n';
    for (const auto& r : rows) os << to_json_row(r).dump() << '\n';
  } else {
    if (o.meta) os << "# cycone " << kVersion << '\n';
    os << kSurveyTsvHeader << '\n';
    for (const auto& r : rows) os << to_tsv_line(r) << '\n';
  }
  emit(o, os.str());
  return 0;
}

std::string type_text(const SplittingType& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

int cmd_catalog(bool json, const CommonOut& o) {
  std::ostringstream os;
  if (json) {
    Json arr = Json::array();
    for (const auto& e : catalog())
      arr.push_back(Json{{"id", e.id},
                         {"description", e.description},
                         {"c1", e.chern.c1},
                         {"c2", e.chern.c2},
                         {"gamma", e.chern.gamma()},
                         {"splitting_type", e.splitting_type},
                         {"uniform", e.uniform},
                         {"strategy", std::string(to_string(e.strategy))}});
    arr.push_back(Json{{"id", "O+O(a)+O(b)"},
                       {"description", "split family, resolved on demand"},
                       {"strategy", "split"}});
    os << arr.dump(2) << '\n';
  } else {
    os << "id\tc1\tc2\tgamma\tsplitting_type\tstrategy\tdescription\n";
    for (const auto& e : catalog())
      os << e.id << '\t' << e.chern.c1 << '\t' << e.chern.c2 << '\t' << e.chern.gamma() << '\t'
         << type_text(e.splitting_type) << '\t' << to_string(e.strategy) << '\t' << e.description << '\n';
    os << "O+O(a)+O(b)\ta+b\tab\t(a+b)^2-3ab\t(0,a,b)\tsplit\tsplit family\n";
  }
  emit(o, os.str());
  return 0;
}

int cmd_selftest(const std::string& tamper) {
  SelftestHooks hooks = SelftestHooks::defaults();
  if (!tamper.empty()) {
    try {
      hooks = SelftestHooks::tampered(tamper);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  int failed = 0;
  for (const auto& c : run_selftest(hooks)) {
    std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    failed += !c.ok;
  }
  if (failed == 0) {
    std::cout << "all checks passed\n";
    return 0;
  }
  std::cout << failed << " check(s) failed\n";
  return 2;
}

int cmd_cohom(const std::string& text, bool json) {
  SheafExpr e;
  try {
    e = parse_sheaf(text);
  } catch (const SheafParseError& err) {
    throw UsageError(err.what());
  }
  const CohomologyTable t = cohom_expr(e);
  const ChernCharacter ch = chern_character(e);
  if (json) {
    std::cout << Json{{"expr", e.to_string()},
                      {"h0", t.h0},
                      {"h1", t.h1},
                      {"h2", t.h2},
                      {"chi", t.chi},
                      {"rank", ch.rank},
                      {"ch1", ch.ch1},
                      {"ch2", ch.ch2}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << e.to_string() << "\th0=" << t.h0 << "\th1=" << t.h1 << "\th2=" << t.h2 << "\tchi=" << t.chi
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and cone diagnostics for anticanonical Calabi-Yau hypersurfaces in P(E) over P^2"};
  app.set_version_flag("--version", std::string("cycone ") + kVersion);
  app.require_subcommand(1);

  CommonOut common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write output to FILE instead of stdout");
    sub->add_flag("--meta", common.meta, "Add provenance (version, command, timestamp)");
  };

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one bundle E");
  analyze_cmd->add_option("--split", aa.split, "Split bundle O(e1)+O(e2)+O(e3), as e1,e2,e3");
  analyze_cmd->add_option("--named", aa.named, "Catalog bundle id (see `catalog`)");
  analyze_cmd->add_option("--chern", aa.chern, "Chern data only, as c1,c2");
  analyze_cmd->add_option("--type", aa.type, "Generic splitting type for --chern, as a,b,c");
  analyze_cmd->add_option("--twist", aa.twist, "Analyze E (x) O(t)");
  analyze_cmd->add_option("--assume-nef", aa.assume_nef, "Assert nefness of -K_Z for --chern: true|false|unknown");
  analyze_cmd->add_option("--assume-ample", aa.assume_ample, "Assert ampleness of -K_Z for --chern: true|false|unknown");
  analyze_cmd->add_flag("--json", aa.json, "JSON output (default)");
  analyze_cmd->add_flag("--tsv", aa.tsv, "Key/value TSV output");
  add_common(analyze_cmd);

  SurveyArgs sa;
  auto* survey_cmd = app.add_subcommand(
      "survey", std::string("Census of split bundles with exponents in [emin, emax].\nTSV columns: ") +
                    kSurveyTsvHeader + "\nTri-state columns are true, false or unknown.");
  survey_cmd->add_option("--emin", sa.emin, "Smallest exponent")->required();
  survey_cmd->add_option("--emax", sa.emax, "Largest exponent")->required();
  survey_cmd->add_option("--filter", sa.filter, "Comma-separated: c1=N, nef, ample, big, tab");
  survey_cmd->add_option("--workers", sa.workers, "Worker threads (default: CYCONE_WORKERS or all cores)");
  survey_cmd->add_flag("--json", sa.json, "JSON lines instead of TSV");
  add_common(survey_cmd);

  bool catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "List named bundles");
  catalog_cmd->add_flag("--json", catalog_json, "JSON output");
  add_common(catalog_cmd);

  std::string tamper;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the regression checks");
  selftest_cmd->add_option("--tamper", tamper, "Replace a reference formula with a wrong one: gram|c3")
      ->group("");  // negative-path testing only

  std::string cohom_text;
  bool cohom_json = false;
  auto* cohom_cmd = app.add_subcommand("cohom", "Cohomology of a sheaf expression on P^2");
  cohom_cmd->add_option("expr", cohom_text, "e.g. \"twist(sym(SymT(2,-2),2),-1)\"")->required();
  cohom_cmd->add_flag("--json", cohom_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(aa, common);
    if (*survey_cmd) return cmd_survey(sa, common);
    if (*catalog_cmd) return cmd_catalog(catalog_json, common);
    if (*selftest_cmd) return cmd_selftest(tamper);
    if (*cohom_cmd) return cmd_cohom(cohom_text, cohom_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
