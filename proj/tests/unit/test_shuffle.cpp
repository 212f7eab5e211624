#include <doctest.h>

#include <polylie/error.hpp>
#include <polylie/shuffle/shuffle.hpp>

#include "support.hpp"

using namespace polylie;
using namespace polylie::symbolic;
using namespace polylie::shuffle;
using test::arg;
using test::lc;

namespace {

TForm t(int i) { return TForm::var(i - 1); }

LinComb at(const TMap<Symbol>& m, std::vector<int> exps) { return coefficient(m, monomial_from(exps)); }

}  // namespace

TEST_CASE("shuffle (1,1) coefficients") {
  auto m = expand(shuffle_1_1(arg("x1"), arg("x2"), t(1), t(2)), 4);
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2) {
      LinComb expected;
      expected.add(Symbol({arg("x1"), arg("x2")}, {n1, n2}), 1);
      expected.add(Symbol({arg("x2"), arg("x1")}, {n2, n1}), 1);
      expected.add(Symbol({arg("x1*x2")}, {n1 + n2}), 1);
      CHECK(at(m, {n1 - 1, n2 - 1}) == expected);
    }
}

TEST_CASE("shuffle (1,1) is symmetric") {
  auto a = expand(shuffle_1_1(arg("x1"), arg("x2"), t(1), t(2)), 4);
  auto b = expand(shuffle_1_1(arg("x2"), arg("x1"), t(2), t(1)), 4);
  CHECK(a == b);
}

TEST_CASE("zero arguments kill the shuffle") {
  CHECK(expand(shuffle_1_1(arg("0"), arg("x2"), t(1), t(2)), 3).empty());
  CHECK(expand(shuffle_2_1(arg("x1"), arg("x2"), arg("0"), t(1), t(2), t(3)), 3).empty());
}

TEST_CASE("inadmissible shuffles are rejected") {
  CHECK_THROWS_AS(shuffle_1_1(arg("x"), arg("x^-1"), t(1), t(2)), AdmissibilityError);
  CHECK_THROWS_AS(shuffle_2_1(arg("x"), arg("y"), arg("y^-1"), t(1), t(2), t(3)), AdmissibilityError);
}

TEST_CASE("shuffle (2,1) has the displayed shape") {
  auto s = shuffle_2_1(arg("x1"), arg("x2"), arg("x3"), t(1), t(2), t(3));
  int interleavings = 0, contractions = 0;
  for (const auto& term : s) (term.denominators.empty() ? interleavings : contractions)++;
  CHECK(interleavings == 3);
  CHECK(contractions == 4);
  // index (1,1,1): the three interleavings and the two weight-3 depth-2 contractions
  auto m = expand(s, 1);
  CHECK(at(m, {0, 0, 0}) ==
        lc("[x1,x2,x3;1,1,1] + [x1,x3,x2;1,1,1] + [x3,x1,x2;1,1,1] + [x1*x3,x2;2,1] + [x1,x2*x3;1,2]"));
}

TEST_CASE("cobracket of shuffles") {
  for (int kind : {11, 21}) {
    auto report = verify_shuffle_delta(kind, 6);
    CHECK_MESSAGE(report.passed(), report.name << ": " << report.detail);
  }
}

TEST_CASE("generic shuffles") {
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    auto report = verify_generic_shuffle(a, b, 6);
    CHECK_MESSAGE(report.passed(), report.detail);
    CHECK(report.label == "CONJECTURAL");
  }
}
