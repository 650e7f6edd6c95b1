#include <doctest.h>

#include "cycone/sheaf.hpp"

using namespace cycone;

TEST_SUITE("sheaf") {
  TEST_CASE("parse leaves and nodes") {
    CHECK(parse_sheaf("O(-3)") == SheafExpr::line(-3));
    CHECK(parse_sheaf("SymT(2,-2)") == SheafExpr::sym_tangent(2, -2));
    CHECK(parse_sheaf(" twist( O(1) + SymT(1,0) , -1 )") ==
          SheafExpr::twist(SheafExpr::sum({SheafExpr::line(1), SheafExpr::sym_tangent(1, 0)}), -1));
    CHECK(parse_sheaf("end(dual(O(2)))") == SheafExpr::end(SheafExpr::dual(SheafExpr::line(2))));
    CHECK(parse_sheaf("(O(1))") == SheafExpr::line(1));
  }

  TEST_CASE("round trip through to_string") {
    for (const char* text : {"O(0)", "SymT(3,-1)+SymT(2,0)+SymT(1,1)+O(2)", "twist(sym(SymT(2,-2),2),-1)",
                             "end(O(0)+O(1)+O(2))", "dual(SymT(2,-3))+O(4)", "sym((O(1)+O(2)),3)"}) {
      const SheafExpr e = parse_sheaf(text);
      CHECK(parse_sheaf(e.to_string()) == e);
    }
  }

  TEST_CASE("errors carry a position") {
    CHECK_THROWS_AS(parse_sheaf(""), SheafParseError);
    CHECK_THROWS_AS(parse_sheaf("O(1"), SheafParseError);
    CHECK_THROWS_AS(parse_sheaf("SymT(2)"), SheafParseError);
    CHECK_THROWS_AS(parse_sheaf("O(1) +"), SheafParseError);
    CHECK_THROWS_AS(parse_sheaf("foo(1)"), SheafParseError);
    CHECK_THROWS_AS(parse_sheaf("O(1) O(2)"), SheafParseError);
    try {
      parse_sheaf("O(1)+Q(2)");
      FAIL("expected a parse error");
    } catch (const SheafParseError& e) {
      CHECK(e.position() == 5);
    }
  }
}
