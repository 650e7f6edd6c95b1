#include "cycone/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cycone {

SurveyFilter SurveyFilter::parse(const std::string& text) {
  SurveyFilter f;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item.rfind("c1=", 0) == 0) {
      std::size_t used = 0;
      const std::string num = item.substr(3);
      try {
        f.c1 = std::stoll(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (num.empty() || used != num.size()) throw std::invalid_argument("bad filter '" + item + "'");
    } else if (item == "nef") {
      f.nef = true;
    } else if (item == "ample") {
      f.ample = true;
    } else if (item == "big") {
      f.big = true;
    } else if (item == "tab") {
      f.tab = true;
    } else {
      throw std::invalid_argument("unknown filter '" + item + "' (expected c1=N, nef, ample, big, tab)");
    }
  }
  return f;
}

bool SurveyFilter::accepts(const SurveyRow& row) const {
  if (c1 && row.c1 != *c1) return false;
  if (nef && row.nef != Tri::True) return false;
  if (ample && row.ample != Tri::True) return false;
  if (big && row.big != Tri::True) return false;
  if (tab && !row.tab_admissible) return false;
  return true;
}

SurveyRow survey_row(const SplittingType& e) {
  const BundleSpec spec = BundleSpec::split(e[0], e[1], e[2]);
  const MinusKStatus mk = minusK_status(spec);
  SurveyRow row;
  row.e = *spec.splitting_type();
  const ChernPair c = spec.chern();
  row.c1 = c.c1;
  row.c2 = c.c2;
  row.gamma = c.gamma();
  row.nef = mk.nef;
  row.ample = mk.ample;
  row.big = mk.big;
  row.rho = rho_of_X(spec, mk.big_and_nef()).rho;
  row.verdict = rationality_verdict(spec).verdict;
  const auto allowed = allowed_splitting_types(c.c1);
  row.tab_admissible = std::find(allowed.begin(), allowed.end(), row.e) != allowed.end();
  return row;
}

std::vector<SurveyRow> run_survey(std::int64_t emin, std::int64_t emax, const SurveyFilter& filter,
                                  unsigned workers) {
  if (emin > emax) throw std::invalid_argument("survey: emin > emax");
  if (emax - emin > kMaxSurveySpan)
    throw std::invalid_argument("survey: range wider than " + std::to_string(kMaxSurveySpan));

  std::vector<SplittingType> types;
  for (std::int64_t a = emin; a <= emax; ++a)
    for (std::int64_t b = a; b <= emax; ++b)
      for (std::int64_t c = b; c <= emax; ++c) types.push_back({a, b, c});

  // Rows land in their input slot, so the result does not depend on scheduling.
  std::vector<SurveyRow> rows(types.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < types.size(); i = next++) rows[i] = survey_row(types[i]);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(types.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<SurveyRow> out;
  for (auto& r : rows)
    if (filter.accepts(r)) out.push_back(std::move(r));
  return out;
}

unsigned default_workers() {
  if (const char* env = std::getenv("CYCONE_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string to_tsv_line(const SurveyRow& r) {
  std::ostringstream os;
  os << r.e[0] << '\t' << r.e[1] << '\t' << r.e[2] << '\t' << r.c1 << '\t' << r.c2 << '\t' << r.gamma << '\t'
     << to_string(r.nef) << '\t' << to_string(r.ample) << '\t' << to_string(r.big) << '\t'
     << (r.rho ? std::to_string(*r.rho) : "unknown") << '\t' << to_string(r.verdict) << '\t'
     << (r.tab_admissible ? "true" : "false");
  return os.str();
}

Json to_json_row(const SurveyRow& r) {
  return Json{{"e", r.e},
              {"c1", r.c1},
              {"c2", r.c2},
              {"gamma", r.gamma},
              {"nef", std::string(to_string(r.nef))},
              {"ample", std::string(to_string(r.ample))},
              {"big", std::string(to_string(r.big))},
              {"rho", r.rho ? Json(*r.rho) : Json(nullptr)},
              {"verdict", std::string(to_string(r.verdict))},
              {"tab_admissible", r.tab_admissible}};
}

}  // namespace cycone
