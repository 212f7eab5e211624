#include <doctest.h>

#include <polylie/coalgebra/cobracket.hpp>
#include <polylie/error.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace polylie;
using namespace polylie::symbolic;
using polylie::coalgebra::delta;
using polylie::coalgebra::delta_squared;
using polylie::coalgebra::Variant;
using test::lc;
using test::sym;
using test::wedges;
using test::depth2_display;
using test::s1;
using test::s2;

TEST_CASE("delta vanishes in weight one") {
  CHECK(delta(sym("[x;1]")).is_zero());
  CHECK(delta(sym("[x;0]")).is_zero());
}

TEST_CASE("depth one cobracket") {
  for (int n = 2; n <= 6; ++n) {
    WedgeElement expected = wedge(LinComb(s1("x", n - 1)), lc("[x;0]"));
    CHECK(delta(s1("x", n)) == expected);
    CHECK(delta(s1("x", n), Variant::Prime) == expected);
  }
  CHECK(delta(sym("[x;2]")) == wedges({{1, "[x;1]", "[x;0]"}}));
}

TEST_CASE("depth two, index (1,1)") {
  auto expected = wedges({{1, "[x2;1]", "[x1;1]"}, {1, "[x1*x2;1]", "[x2;1]"}, {-1, "[x1*x2;1]", "[x1^-1;1]"}});
  CHECK(delta(sym("[x1,x2;1,1]")) == expected);
  auto prime = wedges({{1, "[x2;1]", "[x1;1]"}, {1, "[x1*x2;1]", "[x2;1]"}, {-1, "[x1*x2;1]", "[x1;1] + [x1;0]"}});
  CHECK(delta(sym("[x1,x2;1,1]"), Variant::Prime) == prime);
}

TEST_CASE("depth two matches the closed form") {
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s) {
      CAPTURE(r);
      CAPTURE(s);
      CHECK(delta(s2("x1", "x2", r, s)) == depth2_display(r, s));
    }
}

TEST_CASE("delta is graded") {
  for (const char* text : {"[x,y;2,3]", "[x,y,z;1,2,1]", "[x*y,z^-1;3,1]"}) {
    Symbol s = sym(text);
    for (const auto& [w, c] : delta(s)) CHECK(w.weight() == s.weight());
  }
}

TEST_CASE("zero and infinity entries") {
  CHECK(delta(sym("[0,x;1,2]")).is_zero());
  CHECK_THROWS_AS(delta(sym("[x,x^-1,y;1,1,1]")), AdmissibilityError);
  CHECK_THROWS_AS(delta(sym("[inf;1]")), UndefinedSymbolError);
  CHECK(delta(sym("[inf;3]")).is_zero());
}

TEST_CASE("delta squared vanishes") {
  for (const char* text : {"[x;4]", "[x1,x2;2,2]", "[x1,x2;1,3]", "[x1,x2,x3;1,1,1]", "[x1,x2,x3;2,1,1]"}) {
    CAPTURE(text);
    CHECK(delta_squared(sym(text)).is_zero());
    CHECK(delta_squared(sym(text), Variant::Prime).is_zero());
  }
}
