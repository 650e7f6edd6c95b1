#include "cycone/bundle.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace cycone {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Tri parse_tri(std::string_view s) {
  if (s == "true") return Tri::True;
  if (s == "false") return Tri::False;
  if (s == "unknown") return Tri::Unknown;
  throw std::invalid_argument("expected true|false|unknown, got '" + std::string(s) + "'");
}

std::string_view to_string(CohomStrategy s) {
  switch (s) {
    case CohomStrategy::Split: return "split";
    case CohomStrategy::SymTangentExpr: return "symtangent";
    case CohomStrategy::RestrictedEuler: return "restricted-euler";
    case CohomStrategy::None: return "none";
  }
  return "none";
}

ChernPair chern_of_split(const SplittingType& e) {
  return {e[0] + e[1] + e[2], e[0] * e[1] + e[0] * e[2] + e[1] * e[2]};
}

namespace {

std::string split_sum(const SplittingType& e) {
  return "O(" + std::to_string(e[0]) + ")+O(" + std::to_string(e[1]) + ")+O(" + std::to_string(e[2]) + ")";
}

CatalogEntry split_entry(std::string id, std::string description, SplittingType e) {
  std::sort(e.begin(), e.end());
  CatalogEntry entry;
  entry.id = std::move(id);
  entry.description = std::move(description);
  entry.chern = chern_of_split(e);
  entry.splitting_type = e;
  entry.strategy = CohomStrategy::Split;
  const std::string sum = split_sum(e);
  const std::int64_t t = 3 - entry.chern.c1;
  entry.bundle_expr = sum;
  entry.formal_end = "end(" + sum + ")";
  entry.formal_s3 = "twist(sym(" + sum + ",3)," + std::to_string(t) + ")";
  entry.end_expr = entry.formal_end;
  entry.s3_expr = entry.formal_s3;
  return entry;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  // T_P3 restricted to a plane is T_P2 (+) O(1): the normal sequence splits
  // because H^1(T_P2(-1)) = 0. Cohomology of E(k) also follows from the
  // restricted Euler sequence 0 -> O -> O(1)^4 -> E -> 0.
  out.push_back({"TP3restP2", "T_P3 restricted to P2", {4, 6}, {1, 1, 2}, true, CohomStrategy::RestrictedEuler,
                 "SymT(2,-3)+O(0)+O(0)+SymT(1,-1)+SymT(1,-2)", "SymT(3,-1)+SymT(2,0)+SymT(1,1)+O(2)",
                 "end(SymT(1,0)+O(1))", "twist(sym(SymT(1,0)+O(1),3),-1)", "SymT(1,0)+O(1)"});

  // End(T) = T (x) T(-3) = S^2 T(-3) (+) O.
  out.push_back({"TP2+O", "T_P2 (+) O", {3, 3}, {0, 1, 2}, true, CohomStrategy::SymTangentExpr,
                 "SymT(2,-3)+O(0)+O(0)+SymT(1,0)+SymT(1,-3)", "SymT(3,0)+SymT(2,0)+SymT(1,0)+O(0)",
                 "end(SymT(1,0)+O(0))", "sym(SymT(1,0)+O(0),3)", "SymT(1,0)+O(0)"});

  out.push_back({"TP2(-1)+O(2)", "T_P2(-1) (+) O(2)", {3, 3}, {0, 1, 2}, true, CohomStrategy::SymTangentExpr,
                 "SymT(2,-3)+O(0)+O(0)+SymT(1,-3)+SymT(1,0)", "SymT(3,-3)+SymT(2,0)+SymT(1,3)+O(6)",
                 "end(SymT(1,-1)+O(2))", "sym(SymT(1,-1)+O(2),3)", "SymT(1,-1)+O(2)"});

  // For a rank-2 H: S^2 H* (x) S^2 H = S^4 + S^2 (x) det + det^2 (twisted), and
  // S^3(S^2 H) = S^6 H (+) S^2 H (x) det(H)^2.
  out.push_back({"S2TP2(-1)", "S^2(T_P2(-1))", {3, 6}, {0, 1, 2}, true, CohomStrategy::SymTangentExpr,
                 "SymT(4,-6)+SymT(2,-3)+O(0)", "SymT(6,-6)+SymT(2,0)", "end(SymT(2,-2))", "sym(SymT(2,-2),3)",
                 "SymT(2,-2)"});

  out.push_back(split_entry("2O+O(3)", "O (+) O (+) O(3)", {0, 0, 3}));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<CatalogEntry> find_catalog(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  static const std::regex family(R"(O\+O\((-?\d+)\)\+O\((-?\d+)\))");
  std::cmatch m;
  const std::string text(id);
  if (std::regex_match(text.c_str(), m, family)) {
    const SplittingType e{0, std::stoll(m[1].str()), std::stoll(m[2].str())};
    return split_entry(text, "O (+) O(a) (+) O(b)", e);
  }
  return std::nullopt;
}

BundleSpec BundleSpec::split(std::int64_t e1, std::int64_t e2, std::int64_t e3) {
  BundleSpec s;
  s.kind_ = Kind::Split;
  s.split_ = {e1, e2, e3};
  std::sort(s.split_.begin(), s.split_.end());
  s.chern_ = chern_of_split(s.split_);
  return s;
}

BundleSpec BundleSpec::named(std::string_view id) {
  auto entry = find_catalog(id);
  if (!entry) throw std::invalid_argument("unknown catalog bundle '" + std::string(id) + "'");
  BundleSpec s;
  s.kind_ = Kind::Named;
  s.named_id_ = std::string(id);
  s.chern_ = entry->chern;
  return s;
}

BundleSpec BundleSpec::chern_only(ChernPair c, std::optional<SplittingType> type) {
  BundleSpec s;
  s.kind_ = Kind::ChernOnly;
  s.chern_ = c;
  if (type) {
    std::sort(type->begin(), type->end());
    if ((*type)[0] + (*type)[1] + (*type)[2] != c.c1)
      throw std::invalid_argument("splitting type does not sum to c1");
    s.type_ = type;
  }
  return s;
}

BundleSpec& BundleSpec::twist(std::int64_t t) {
  twist_ += t;
  return *this;
}

BundleSpec& BundleSpec::assume_minus_k(Tri nef, Tri ample) {
  if (ample == Tri::True && nef == Tri::False) throw std::invalid_argument("-K_Z cannot be ample but not nef");
  assumed_nef_ = (ample == Tri::True) ? Tri::True : nef;
  assumed_ample_ = ample;
  return *this;
}

std::optional<CatalogEntry> BundleSpec::catalog_entry() const {
  if (kind_ != Kind::Named) return std::nullopt;
  return find_catalog(named_id_);
}

ChernPair BundleSpec::chern() const { return chern_.twisted(twist_); }

std::optional<SplittingType> BundleSpec::splitting_type() const {
  std::optional<SplittingType> base;
  switch (kind_) {
    case Kind::Split: base = split_; break;
    case Kind::Named: base = catalog_entry()->splitting_type; break;
    case Kind::ChernOnly: base = type_; break;
  }
  if (base)
    for (auto& e : *base) e += twist_;
  return base;
}

std::optional<SplittingType> BundleSpec::split_exponents() const {
  if (kind_ == Kind::Split) return splitting_type();
  if (kind_ == Kind::Named && catalog_entry()->strategy == CohomStrategy::Split) return splitting_type();
  return std::nullopt;
}

bool BundleSpec::uniform() const {
  switch (kind_) {
    case Kind::Split: return true;
    case Kind::Named: return catalog_entry()->uniform;
    case Kind::ChernOnly: return false;
  }
  return false;
}

std::optional<SheafExpr> BundleSpec::end_expr() const {
  if (auto e = split_exponents()) return parse_sheaf("end(" + split_sum(*e) + ")");
  if (auto entry = catalog_entry(); entry && entry->strategy != CohomStrategy::None) return parse_sheaf(entry->end_expr);
  return std::nullopt;
}

std::optional<SheafExpr> BundleSpec::minus_k_pushforward_expr() const {
  if (auto e = split_exponents()) {
    const std::int64_t t = 3 - chern().c1;
    return SheafExpr::twist(parse_sheaf("sym(" + split_sum(*e) + ",3)"), t);
  }
  // Z and -K_Z do not change under twisting E, so the untwisted form applies.
  if (auto entry = catalog_entry(); entry && entry->strategy != CohomStrategy::None) return parse_sheaf(entry->s3_expr);
  return std::nullopt;
}

std::string BundleSpec::describe() const {
  std::string out;
  switch (kind_) {
    case Kind::Split: out = "split " + split_sum(split_); break;
    case Kind::Named: out = "named " + named_id_; break;
    case Kind::ChernOnly:
      out = "chern (" + std::to_string(chern_.c1) + "," + std::to_string(chern_.c2) + ")";
      break;
  }
  if (twist_ != 0) out += " twisted by O(" + std::to_string(twist_) + ")";
  return out;
}

}  // namespace cycone
