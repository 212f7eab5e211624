#include <polylie/coalgebra/coproduct.hpp>
#include <polylie/coalgebra/verify.hpp>
#include <polylie/homology/bloch.hpp>
#include <polylie/inversion/verify.hpp>
#include <polylie/numerics/polylog.hpp>
#include <polylie/numerics/realize.hpp>
#include <polylie/relations/schema.hpp>
#include <polylie/relations/vanishing.hpp>
#include <polylie/shuffle/shuffle.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

using namespace polylie;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void require(const Report& r) { require(r.passed(), r.name + ": " + r.verdict + " " + r.detail); }
  void info(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fact(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.facts)
    if (k == key) return v;
  return "?";
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

Outcome criterion1() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  auto standard = coalgebra::verify_delta_squared(3, 6);
  auto prime = coalgebra::verify_delta_squared(3, 6, coalgebra::Variant::Prime);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(standard);
  o.require(prime);
  o.require(seconds < 300, "runtime " + fmt(seconds) + " s over 300 s");
  o.info(std::to_string(*standard.points) + " symbols, depth<=3, weight<=6, delta and delta'");
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::vector<symbolic::Argument> a{symbolic::Argument::atom("x1"), symbolic::Argument::atom("x2")};
  auto terms = coalgebra::coproduct_terms(symbolic::SeriesTerm::li(a, symbolic::standard_slots(2)));
  std::vector<std::string> expected = {
      "[x1,x2|t1,t2] (x) (x1)^(t1)*(x2)^(t2)",
      "[x1*x2|t1] (x) (x1*x2)^(t1)*[x2|-t1+t2]",
      "[x1*x2|t2] (x) -(x1*x2)^(t2)*[x1^-1|-t1+t2]",
      "[x2|t2] (x) (x2)^(t2)*[x1|t1]",
      "1 (x) [x1,x2|t1,t2]",
  };
  std::vector<std::string> got;
  for (const auto& t : terms) got.push_back(t.to_string());
  o.require(got == expected, "depth-two coproduct terms differ from the display");
  o.require(coalgebra::verify_coassociativity(2, 4));
  o.require(coalgebra::verify_mod_products(3, 5));
  o.info("5 depth-two terms, coassociativity depth<=2 weight<=4, mod products depth<=3 weight<=5");
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (int d = 1; d <= 3; ++d) o.require(inversion::verify_inversion_claim(d, 5));
  o.require(inversion::verify_inversion_depth2(5));
  auto inf = inversion::verify_infinity_closed_forms(5);
  o.require(inf);
  o.info("derived binomial " + fact(inf, "derived_binomial") + ", C(n1+n2, .) display matches: " +
         fact(inf, "display_with_C(n1+n2, .)_matches"));
  return o;
}

Outcome criterion4() {
  Outcome o;
  o.require(shuffle::verify_shuffle_delta(11, 6));
  o.require(shuffle::verify_shuffle_delta(21, 6));
  o.info("delta' of the (1,1) and (2,1) shuffles through weight 6");
  return o;
}

Outcome bloch_rows(const std::vector<int>& qs, double limit) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::string exact;
  for (int q : qs) {
    auto row = homology::h1_order(q);
    o.require(row.match_up_to_2_3, "q=" + std::to_string(q) + ": |H1|=" + row.snf.order_string());
    exact += " " + std::to_string(q) + ":" + row.snf.order_string() + (row.exact_match ? "=" : "!=") + "q+1";
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(seconds < limit, "runtime " + fmt(seconds) + " s");
  o.info("|H1|" + exact + " (" + fmt(seconds) + " s)");
  return o;
}

Outcome criterion5() {
  Outcome small = bloch_rows({5, 7, 9, 11, 13}, 60);
  Outcome large = bloch_rows({17, 19, 23}, 300);
  Outcome o;
  o.pass = small.pass && large.pass;
  o.detail = small.detail + "; " + large.detail;
  return o;
}

Outcome criterion6() {
  Outcome o;
  relations::VanishingOptions opts;
  opts.samples = 100;
  opts.tolerance = 1e-8;
  numerics::NumericOptions numeric;
  numeric.samples = 100;
  numeric.tolerance = 1e-8;
  long worst_mutation = 100;
  for (const char* name : {"five_term", "depth_reduction_11", "weight3_21", "weight3_111", "sym_12",
                           "inversion_depth1(2)", "inversion_depth1(3)", "inversion_depth1(4)"}) {
    auto schema = relations::find_schema(name);
    auto e = schema.element();
    o.require(relations::verify_vanishing(e, relations::VanishingMode::Numeric, opts));
    auto lead = schema.leading();
    e.add(lead, -2 * e.coefficient(lead));
    auto mutated = numerics::wedge_numeric_check(coalgebra::delta(e), numeric);
    long failing = std::stol(fact(mutated, "failing_points"));
    worst_mutation = std::min(worst_mutation, failing);
    o.require(failing >= 99, std::string(name) + " mutation fails at only " + std::to_string(failing) + "/100");
  }
  o.info("8 schemata at 100 points, tol 1e-8; mutations fail at >= " + std::to_string(worst_mutation) + "/100");
  return o;
}

Outcome criterion7() {
  Outcome o;
  relations::VanishingOptions opts;
  opts.samples = 50;
  for (const char* name : {"five_term", "depth_reduction_11"}) {
    auto r = relations::verify_vanishing(relations::find_schema(name).element(), relations::VanishingMode::Specialize, opts);
    o.require(r);
    o.require(r.points && *r.points == 50, std::string(name) + ": wrong point count");
  }
  o.info("50 rational specializations each, exact prime factorization");
  return o;
}

Outcome criterion8() {
  Outcome o;
  int pairs = 0;
  for (int r = 1; r <= 5; ++r)
    for (int s = 1; r + s <= 6; ++s) {
      ++pairs;
      o.require(coalgebra::delta(test::s2("x1", "x2", r, s)) == test::depth2_display(r, s),
                "closed form differs at (" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> radius(0.15, 3), angle(-std::numbers::pi, std::numbers::pi);
  double worst = 0;
  int checked = 0;
  while (checked < 200) {
    numerics::Complex z = std::polar(radius(rng), angle(rng));
    if (std::abs(std::abs(z) - 1) < 0.02 || std::abs(numerics::Complex(1) - z) < 0.1) continue;
    for (int n = 2; n <= 6; ++n) {
      double h = 1e-5 * std::abs(z);
      numerics::Complex derivative = (numerics::polylog(n, z + h) - numerics::polylog(n, z - h)) / (2 * h);
      numerics::Complex expected = numerics::polylog(n - 1, z);
      worst = std::max(worst, std::abs(z * derivative - expected) / std::abs(expected));
    }
    ++checked;
  }
  o.require(worst < 1e-6, "derivative recursion relative error " + fmt(worst));
  o.info(std::to_string(pairs) + " (r,s) pairs; derivative recursion max relative error " + fmt(worst));
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"delta^2 = 0 and delta'^2 = 0", criterion1},
      {"coproduct consistency", criterion2},
      {"inversion", criterion3},
      {"shuffle cobracket", criterion4},
      {"finite-field |H1| = q+1", criterion5},
      {"numeric relation evidence", criterion6},
      {"exact wedge evidence", criterion7},
      {"oracle cross-checks", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s (%.2f s) -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                seconds, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
