#include "cycone/sheaf.hpp"

#include <cctype>
#include <charconv>

namespace cycone {

SheafExpr SheafExpr::line(std::int64_t k) { return {Kind::Line, k, 0, {}}; }

SheafExpr SheafExpr::sym_tangent(std::int64_t power, std::int64_t twist) {
  return {Kind::SymTangent, power, twist, {}};
}

SheafExpr SheafExpr::sum(std::vector<SheafExpr> terms) { return {Kind::Sum, 0, 0, std::move(terms)}; }

SheafExpr SheafExpr::twist(SheafExpr e, std::int64_t k) { return {Kind::Twist, k, 0, {std::move(e)}}; }

SheafExpr SheafExpr::sym(SheafExpr e, std::int64_t p) { return {Kind::Sym, p, 0, {std::move(e)}}; }

SheafExpr SheafExpr::end(SheafExpr e) { return {Kind::End, 0, 0, {std::move(e)}}; }

SheafExpr SheafExpr::dual(SheafExpr e) { return {Kind::Dual, 0, 0, {std::move(e)}}; }

std::string SheafExpr::to_string() const {
  switch (kind) {
    case Kind::Line: return "O(" + std::to_string(a) + ")";
    case Kind::SymTangent: return "SymT(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += "+";
        const bool wrap = children[i].kind == Kind::Sum;
        out += wrap ? "(" + children[i].to_string() + ")" : children[i].to_string();
      }
      return out;
    }
    case Kind::Twist: return "twist(" + children.at(0).to_string() + "," + std::to_string(a) + ")";
    case Kind::Sym: return "sym(" + children.at(0).to_string() + "," + std::to_string(a) + ")";
    case Kind::End: return "end(" + children.at(0).to_string() + ")";
    case Kind::Dual: return "dual(" + children.at(0).to_string() + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  SheafExpr parse() {
    SheafExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SheafParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer");
    }
    if (s_[start] == '+') ++start;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  SheafExpr expr() {
    std::vector<SheafExpr> terms;
    terms.push_back(term());
    while (accept("+")) terms.push_back(term());
    return terms.size() == 1 ? std::move(terms.front()) : SheafExpr::sum(std::move(terms));
  }

  SheafExpr term() {
    if (accept("O(")) {
      const auto k = integer();
      expect(")");
      return SheafExpr::line(k);
    }
    if (accept("SymT(")) {
      const auto a = integer();
      expect(",");
      const auto b = integer();
      expect(")");
      if (a < 0) fail("SymT power must be nonnegative");
      return SheafExpr::sym_tangent(a, b);
    }
    if (accept("twist(")) {
      SheafExpr e = expr();
      expect(",");
      const auto k = integer();
      expect(")");
      return SheafExpr::twist(std::move(e), k);
    }
    if (accept("sym(")) {
      SheafExpr e = expr();
      expect(",");
      const auto p = integer();
      if (p < 0) fail("sym power must be nonnegative");
      expect(")");
      return SheafExpr::sym(std::move(e), p);
    }
    if (accept("end(")) {
      SheafExpr e = expr();
      expect(")");
      return SheafExpr::end(std::move(e));
    }
    if (accept("dual(")) {
      SheafExpr e = expr();
      expect(")");
      return SheafExpr::dual(std::move(e));
    }
    if (accept("(")) {
      SheafExpr e = expr();
      expect(")");
      return e;
    }
    fail("expected a sheaf term");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SheafExpr parse_sheaf(std::string_view text) { return Parser(text).parse(); }

}  // namespace cycone
