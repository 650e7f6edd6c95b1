#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycone {

/// Formal sheaf expression on P^2.
///
/// Leaves are line bundles O(k) and SymT(a, b) = S^a(T_P2) (x) O(b); inner
/// nodes are direct sums, twists, symmetric powers, endomorphism bundles and
/// duals. The textual grammar is
///
///   expr  := term ('+' term)*
///   term  := 'O(' int ')' | 'SymT(' int ',' int ')'
///          | 'twist(' expr ',' int ')' | 'sym(' expr ',' int ')'
///          | 'end(' expr ')' | 'dual(' expr ')' | '(' expr ')'
struct SheafExpr {
  enum class Kind { Line, SymTangent, Sum, Twist, Sym, End, Dual };

  Kind kind = Kind::Line;
  std::int64_t a = 0;  // Line: degree; SymTangent: power; Twist: degree; Sym: power
  std::int64_t b = 0;  // SymTangent: twist
  std::vector<SheafExpr> children;

  static SheafExpr line(std::int64_t k);
  static SheafExpr sym_tangent(std::int64_t power, std::int64_t twist);
  static SheafExpr sum(std::vector<SheafExpr> terms);
  static SheafExpr twist(SheafExpr e, std::int64_t k);
  static SheafExpr sym(SheafExpr e, std::int64_t p);
  static SheafExpr end(SheafExpr e);
  static SheafExpr dual(SheafExpr e);

  /// Canonical text in the grammar above; parse(to_string(e)) == e.
  std::string to_string() const;

  friend bool operator==(const SheafExpr&, const SheafExpr&) = default;
};

class SheafParseError : public std::invalid_argument {
 public:
  SheafParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

SheafExpr parse_sheaf(std::string_view text);

}  // namespace cycone
