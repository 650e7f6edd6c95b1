#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycone/chow.hpp"
#include "cycone/sheaf.hpp"

namespace cycone {

/// Three-valued logic for facts the engine cannot always certify.
enum class Tri { False, True, Unknown };

inline Tri to_tri(bool b) { return b ? Tri::True : Tri::False; }
std::string_view to_string(Tri t);
Tri parse_tri(std::string_view s);

/// Splitting type (e1 <= e2 <= e3) of E restricted to a line.
using SplittingType = std::array<std::int64_t, 3>;

/// How cohomology of constructions on a catalog bundle is obtained.
enum class CohomStrategy { Split, SymTangentExpr, RestrictedEuler, None };
std::string_view to_string(CohomStrategy s);

/// A named rank-3 bundle with precomputed decompositions.
///
/// end_expr and s3_expr are decompositions of End(E) and S^3 E (x) O(3 - c1)
/// into SymT and line-bundle summands; formal_end / formal_s3 are the same
/// bundles written as unexpanded constructions. Both sides must agree on the
/// Chern character, which the test suite checks.
struct CatalogEntry {
  std::string id;
  std::string description;
  ChernPair chern;
  SplittingType splitting_type{};
  bool uniform = true;
  CohomStrategy strategy = CohomStrategy::None;
  std::string end_expr;
  std::string s3_expr;
  std::string formal_end;
  std::string formal_s3;
  /// E itself as a sum of SymT/line leaves, when known.
  std::string bundle_expr;
};

const std::vector<CatalogEntry>& catalog();
/// Finds a fixed entry or resolves the family "O+O(a)+O(b)". nullopt if unknown.
std::optional<CatalogEntry> find_catalog(std::string_view id);

/// Input description of E, plus an optional twist E -> E (x) O(t).
class BundleSpec {
 public:
  enum class Kind { Split, Named, ChernOnly };

  static BundleSpec split(std::int64_t e1, std::int64_t e2, std::int64_t e3);
  /// Throws std::invalid_argument for an unknown id.
  static BundleSpec named(std::string_view id);
  static BundleSpec chern_only(ChernPair c, std::optional<SplittingType> type = std::nullopt);

  BundleSpec& twist(std::int64_t t);
  /// External knowledge about -K_Z for specs whose positivity is not computable.
  BundleSpec& assume_minus_k(Tri nef, Tri ample);

  Kind kind() const { return kind_; }
  std::int64_t twist_amount() const { return twist_; }
  const std::string& named_id() const { return named_id_; }
  Tri assumed_nef() const { return assumed_nef_; }
  Tri assumed_ample() const { return assumed_ample_; }

  /// Chern data after the twist.
  ChernPair chern() const;
  /// Generic splitting type after the twist, if known.
  std::optional<SplittingType> splitting_type() const;
  /// Split exponents after the twist (Split kind or split catalog family).
  std::optional<SplittingType> split_exponents() const;
  /// True if the splitting type is the same on every line.
  bool uniform() const;
  std::optional<CatalogEntry> catalog_entry() const;

  /// End(E) as an evaluable expression, if the spec admits one.
  std::optional<SheafExpr> end_expr() const;
  /// S^3 E (x) O(3 - c1), i.e. p_*(-K_Z), as an evaluable expression.
  std::optional<SheafExpr> minus_k_pushforward_expr() const;

  /// Input exactly as given (before twisting).
  SplittingType input_split() const { return split_; }
  ChernPair input_chern() const { return chern_; }
  std::optional<SplittingType> input_type() const { return type_; }

  std::string describe() const;

  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;

 private:
  Kind kind_ = Kind::ChernOnly;
  SplittingType split_{};
  std::string named_id_;
  ChernPair chern_;
  std::optional<SplittingType> type_;
  std::int64_t twist_ = 0;
  Tri assumed_nef_ = Tri::Unknown;
  Tri assumed_ample_ = Tri::Unknown;
};

ChernPair chern_of_split(const SplittingType& e);

}  // namespace cycone
