#include <doctest.h>

#include <polylie/error.hpp>
#include <polylie/numerics/realize.hpp>
#include <polylie/relations/reduce.hpp>
#include <polylie/relations/schema.hpp>
#include <polylie/relations/vanishing.hpp>

#include "support.hpp"

#include <random>

using namespace polylie;
using namespace polylie::relations;
using test::lc;
using test::sym;

namespace {

std::map<long, long> prime_exponents(long n) {
  std::map<long, long> out;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

std::map<long, long> prime_exponents(const Rational& r) {
  auto out = prime_exponents(r.get_num().get_si());
  for (const auto& [p, e] : prime_exponents(r.get_den().get_si())) out[p] -= e;
  return out;
}

// sum c * a ^ (1 - a) in the exterior square of Q^* modulo torsion.
std::map<std::pair<long, long>, Rational> dilog_boundary(const std::vector<std::pair<Rational, Rational>>& terms) {
  std::map<std::pair<long, long>, Rational> out;
  for (const auto& [c, a] : terms) {
    auto u = prime_exponents(a);
    auto v = prime_exponents(Rational(1 - a));
    for (const auto& [p, e] : u)
      for (const auto& [q, f] : v) {
        if (p == q) continue;
        Rational value = c * e * f;
        if (p < q)
          out[{p, q}] += value;
        else
          out[{q, p}] -= value;
      }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::string, fields::FieldElement> point(const Rational& x, const Rational& y) {
  return {{"x", x}, {"y", y}};
}

}  // namespace

TEST_CASE("catalog lists the schemata") {
  std::vector<std::string> names;
  for (const auto& s : catalog()) names.push_back(s.name);
  for (const char* n : {"inversion_depth1(2)", "inversion_depth1(3)", "inversion_depth1(4)", "depth_reduction_11",
                        "five_term", "weight3_21", "weight3_111", "sym_12", "weight4_22"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(find_schema("inversion_depth1(5)").weight == 5);
  CHECK_THROWS_AS(find_schema("nine_term"), Error);
  for (const auto& s : catalog()) {
    CHECK(s.element().size() > 1);
    for (const auto& [t, c] : s.element()) CHECK(t.weight() == s.weight);
  }
}

TEST_CASE("five_term at (2,3)") {
  auto inst = instantiate(find_schema("five_term"), point(2, 3), fields::FieldSpec::rationals());
  REQUIRE(inst.terms.size() == 5);
  // x, y, xy, y(1-x)/(1-xy), x(1-y)/(1-xy)
  Rational x = 2, y = 3;
  std::vector<Rational> expected{x, y, x * y, y * (1 - x) / (1 - x * y), x * (1 - y) / (1 - x * y)};
  std::vector<Rational> got;
  for (const auto& t : inst.terms) got.push_back(std::get<Rational>(t.args[0]));
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
  CHECK(verify_vanishing(inst.lincomb(), VanishingMode::ExactWedge).passed());
}

TEST_CASE("instantiate rejects inadmissible parameters") {
  auto q = fields::FieldSpec::rationals();
  CHECK_THROWS_AS(instantiate(find_schema("depth_reduction_11"), point(1, 3), q), AdmissibilityError);
  CHECK_THROWS_AS(instantiate(find_schema("five_term"), point(1, 3), q), AdmissibilityError);
  CHECK_THROWS_AS(instantiate(find_schema("five_term"), point(2, Rational(1, 2)), q), SpecializationError);
  try {
    instantiate(find_schema("depth_reduction_11"), point(1, 3), q);
  } catch (const AdmissibilityError& e) {
    CHECK(std::string(e.what()).find("= 1") != std::string::npos);
  }
}

TEST_CASE("instantiate drops zero arguments") {
  auto inst = instantiate(find_schema("five_term"), point(0, 3), fields::FieldSpec::rationals());
  // [0]_2, [0]_2 and [0]_2 vanish; [3]_2 - [3]_2 remain as terms.
  CHECK(inst.terms.size() == 2);
  CHECK(inst.lincomb().is_zero());
}

TEST_CASE("inversion_depth1(2) at x = 2") {
  auto inst = instantiate(find_schema("inversion_depth1(2)"), {{"x", Rational(2)}}, fields::FieldSpec::rationals());
  CHECK(inst.lincomb() == lc("2*[2;2] + 2*[1/2;2]"));
}

TEST_CASE("instantiate over a finite field") {
  auto f7 = fields::FieldSpec::parse("Fq:7");
  std::map<std::string, fields::FieldElement> p{{"x", f7.from_integer(2)}, {"y", f7.from_integer(3)}};
  auto inst = instantiate(find_schema("five_term"), p, f7);
  CHECK(inst.terms.size() == 5);
  CHECK_THROWS_AS(inst.lincomb(), Error);
  std::map<std::string, fields::FieldElement> bad{{"x", f7.from_integer(2)}, {"y", f7.from_integer(4)}};
  CHECK_THROWS_AS(instantiate(find_schema("five_term"), bad, f7), SpecializationError);
}

TEST_CASE("instantiate over a function field") {
  auto qt = fields::FieldSpec::parse("Q(t)");
  std::map<std::string, fields::FieldElement> p{{"x", qt.parse_element("t")}, {"y", qt.parse_element("t^2")}};
  auto e = instantiate(find_schema("five_term"), p, qt).lincomb();
  CHECK(e.size() == 5);
  CHECK(verify_vanishing(e, VanishingMode::Specialize, {.samples = 10}).passed());
}

TEST_CASE("exact wedge agrees with the factorization oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto schema = find_schema("five_term");
  int checked = 0;
  while (checked < 50) {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    x.canonicalize();
    y.canonicalize();
    Instance inst;
    try {
      inst = instantiate(schema, point(x, y), fields::FieldSpec::rationals());
    } catch (const Error&) {
      continue;
    }
    if (inst.terms.size() < 5) continue;
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& t : inst.terms) terms.emplace_back(t.coeff, std::get<Rational>(t.args[0]));
    CHECK(dilog_boundary(terms).empty());
    CHECK(verify_vanishing(inst.lincomb(), VanishingMode::ExactWedge).passed());
    ++checked;
  }
  CHECK(!dilog_boundary({{Rational(1), Rational(4)}}).empty());
  CHECK(!verify_vanishing(lc("[4;2]"), VanishingMode::ExactWedge).passed());
}

TEST_CASE("specialize mode") {
  VanishingOptions opts;
  opts.samples = 50;
  for (const char* name : {"five_term", "depth_reduction_11", "inversion_depth1(2)"}) {
    auto r = verify_vanishing(find_schema(name).element(), VanishingMode::Specialize, opts);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.label == "EVIDENCE");
  }
  auto bad = verify_vanishing(lc("[x;2]"), VanishingMode::Specialize, opts);
  CHECK(bad.verdict == "FAIL");
  CHECK(verify_vanishing(find_schema("weight3_21").element(), VanishingMode::Specialize).verdict == "UNSUPPORTED");
}

TEST_CASE("every schema passes numeric mode") {
  VanishingOptions opts;
  opts.samples = 100;
  opts.tolerance = 1e-9;
  for (const auto& s : catalog()) {
    auto r = verify_vanishing(s.element(), VanishingMode::Numeric, opts);
    CHECK_MESSAGE(r.passed(), s.name << ": " << r.detail);
    CHECK(r.label == "EVIDENCE");
  }
  CHECK(verify_vanishing(lc("[x;2]"), VanishingMode::Numeric, opts).verdict == "FAIL");
}

TEST_CASE("same seed gives the same report") {
  VanishingOptions opts;
  opts.seed = 42;
  auto a = verify_vanishing(lc("[x;2] + [y;2]"), VanishingMode::Specialize, opts);
  auto b = verify_vanishing(lc("[x;2] + [y;2]"), VanishingMode::Specialize, opts);
  CHECK(a.detail == b.detail);
  CHECK(a.facts == b.facts);
}

TEST_CASE("reduce_to_depth1") {
  CHECK(reduce_to_depth1(lc("[x,y;1,1]")) == lc("[x*(1-y)*(1-x*y)^-1;2] - [x;2]"));
  CHECK(reduce_to_depth1(lc("[x;3] - 2*[y;2]")) == lc("[x;3] - 2*[y;2]"));
  auto r12 = reduce_to_depth1(lc("[x,y;1,2]"));
  CHECK(r12 == reduce_to_depth1(lc("-[y,x;2,1] - [x*y;3]")));
  for (const auto& e : {r12, reduce_to_depth1(lc("[x,y,z;1,1,1]")), reduce_to_depth1(lc("[x,y;2,1]"))})
    for (const auto& [s, c] : e) CHECK(s.depth() == 1);
  CHECK_THROWS_AS(reduce_to_depth1(lc("[x,y;2,2]")), UnsupportedError);
  CHECK_THROWS_AS(reduce_to_depth1(lc("[2,1/2;2,1]")), AdmissibilityError);
}

TEST_CASE("reduce_to_depth1 preserves the realization") {
  numerics::PointSampler sampler(3);
  for (const char* text : {"[x,y;1,1]", "[x,y;2,1]", "[x,y;1,2]", "[x,y,z;1,1,1]", "[x,y;1,1] - 3*[y,x;2,1]"}) {
    auto e = lc(text);
    auto reduced = reduce_to_depth1(e);
    numerics::Realizer direct(reduced);
    int done = 0;
    while (done < 100) {
      auto p = sampler.point(numerics::variables(e));
      try {
        double a = numerics::realize(e, p);
        double b = direct(p);
        CHECK(std::abs(a - b) < 1e-8);
        ++done;
      } catch (const GuardFailure&) {
      }
    }
  }
}

TEST_CASE("gr_translate") {
  CHECK(gr_translate(parse_gr_symbol("{x;3}")) == lc("[x;3]"));
  CHECK(gr_translate(parse_gr_symbol("{x,y;2,1}")) == lc("-[x*y^-1,y;2,1] - [x;3] - [y;3]"));
  CHECK(gr_translate(parse_gr_symbol("{x,y;3,1}")) == lc("-[x*y^-1,y;3,1] - [x;4] + [y;4]"));
  CHECK_THROWS_AS(gr_translate(parse_gr_symbol("{x,x;2,1}")), AdmissibilityError);
  CHECK_THROWS_AS(gr_translate(parse_gr_symbol("{x;5}")), Error);
}
