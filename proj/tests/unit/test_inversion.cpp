#include <doctest.h>

#include <polylie/error.hpp>
#include <polylie/inversion/inv.hpp>
#include <polylie/inversion/verify.hpp>

#include "support.hpp"

using namespace polylie;
using namespace polylie::symbolic;
using namespace polylie::inversion;
using test::arg;
using test::lc;
using test::sym;

TEST_CASE("depth one inv") {
  CHECK(inv_coefficient({arg("x")}, {1}) == lc("[x;1] + [x;0]"));
  for (int n = 2; n <= 6; ++n) CHECK(inv_coefficient({arg("x")}, {n}) == LinComb(Symbol({arg("x")}, {n})));
  CHECK(INV(sym("[x^-1;1]")) == lc("[x;1] + [x;0]"));
  CHECK(INV(sym("[x^-1;3]")) == lc("[x;3]"));
}

TEST_CASE("depth two inv series") {
  SeriesTerm x = SeriesTerm::li({arg("x1"), arg("x2")}, standard_slots(2));
  SeriesSum s = inv(x);
  REQUIRE(s.size() == 5);
  CHECK(s[0].scalar == -1);
  CHECK(s[1].denominators == std::vector<TForm>{TForm::var(0)});
  CHECK(s[2].slots == std::vector<TForm>{TForm::var(1) - TForm::var(0)});
  CHECK(s[3].kind == SeriesTerm::Kind::Inv);
  CHECK(s[4].slots == std::vector<TForm>{TForm::var(0) - TForm::var(1)});
}

TEST_CASE("inv expansions never produce non-positive indices") {
  for (int d = 1; d <= 3; ++d) {
    std::vector<Argument> a;
    for (int i = 1; i <= d; ++i) a.push_back(Argument::atom("x" + std::to_string(i)));
    for (const auto& [s, p] : expand_inv(a, standard_slots(d), 3)) {
      if (s.is_log()) continue;
      for (int n : s.index) CHECK(n >= 1);
    }
  }
}

TEST_CASE("INV classification") {
  CHECK(INV(sym("[x2,x1;2,1]")) == lc("[x2,x1;2,1]"));
  CHECK(classify(sym("[x2^-1,x1^-1;1,1]")) == TermClass::Inverted);
  CHECK_THROWS_AS(classify(sym("[x2^-1,x1;1,1]")), ClassificationError);
  auto w = wedge(lc("[x2;2]"), lc("[x1;1]"));
  CHECK(INV(w) == w);
  CHECK(INV(INV(lc("[x1,x2;1,2]"))) == lc("[x1,x2;1,2]"));
}

TEST_CASE("infinity symbols") {
  for (int n = 2; n <= 5; ++n) CHECK(infinity_reduce(Symbol({Argument::infinity()}, {n})).is_zero());
  CHECK_THROWS_AS(infinity_reduce(sym("[inf;1]")), UndefinedSymbolError);
  CHECK_THROWS_AS(infinity_reduce(sym("[0,inf;1,1]")), AdmissibilityError);
  for (const char* text : {"[x,inf;1,2]", "[inf,y;2,2]", "[x,inf,y;1,1,1]", "[x,y,inf;2,1,1]"})
    for (const auto& [s, c] : infinity_reduce(sym(text))) {
      CHECK_FALSE(s.has_zero());
      CHECK_FALSE(s.has_infinity());
    }
  auto report = verify_infinity_closed_forms(7);
  CHECK_MESSAGE(report.passed(), report.detail);
}

TEST_CASE("inversion claim") {
  for (auto [d, w] : {std::pair{1, 5}, {2, 5}, {3, 5}}) {
    auto report = verify_inversion_claim(d, w);
    CHECK_MESSAGE(report.passed(), report.name << ": " << report.detail);
  }
}

TEST_CASE("inversion term families") {
  for (auto [d, w] : {std::pair{1, 4}, {2, 5}, {3, 5}}) {
    auto report = verify_inversion_families(d, w);
    CHECK_MESSAGE(report.passed(), report.name << ": " << report.detail);
    CHECK(report.facts.at(0).second == "yes");
  }
}

TEST_CASE("depth two inversion identity") {
  auto report = verify_inversion_depth2(7);
  CHECK_MESSAGE(report.passed(), report.detail);
}
