#include <polylie/coalgebra/cobracket.hpp>
#include <polylie/error.hpp>
#include <polylie/fields/factorization.hpp>
#include <polylie/numerics/realize.hpp>
#include <polylie/relations/vanishing.hpp>
#include <polylie/symbolic/arithmetic.hpp>

#include <optional>
#include <random>
#include <set>

namespace polylie::relations {

using symbolic::Argument;
using symbolic::LinComb;
using symbolic::Symbol;
using symbolic::WedgeElement;

namespace {

int homogeneous_weight(const LinComb& e) {
  std::set<int> weights;
  for (const auto& [s, c] : e) weights.insert(s.weight());
  if (weights.size() > 1) throw Error("combination is not homogeneous in weight");
  return weights.empty() ? 0 : *weights.begin();
}

bool has_atoms(const LinComb& e) {
  for (const auto& [s, c] : e)
    for (const auto& a : s.args)
      if (!a.exponents().empty()) return true;
  return false;
}

// A weight-one symbol as an element of Q^* with the sign of its exponent.
std::pair<Rational, int> multiplicative(const Symbol& s) {
  const Argument& a = s.args[0];
  if (!a.is_group() || !a.exponents().empty()) throw Error("weight-one factor " + s.to_string() + " is not a rational");
  if (s.is_log()) return {a.constant(), 1};
  Rational v = 1 - a.constant();
  if (v == 0) throw AdmissibilityError("weight-one factor " + s.to_string() + " has 1 - x = 0");
  return {v, -1};
}

std::vector<fields::WedgeInput> wedge_inputs(const WedgeElement& w) {
  std::vector<fields::WedgeInput> out;
  for (const auto& [k, c] : w) {
    auto [a, sa] = multiplicative(k.first);
    auto [b, sb] = multiplicative(k.second);
    out.push_back({a, b, c * sa * sb});
  }
  return out;
}

std::string coordinates_string(const WedgeElement& w) {
  auto coords = fields::wedge_coordinates(wedge_inputs(w));
  std::string out;
  for (const auto& [pq, c] : coords) {
    if (!out.empty()) out += ", ";
    out += fields::to_string(c) + "*(" + fields::to_string(pq.first) + "^" + fields::to_string(pq.second) + ")";
  }
  return out.empty() ? "0" : out;
}

std::optional<LinComb> specialize(const LinComb& e, const std::map<symbolic::Atom, Argument>& point) {
  LinComb out;
  for (const auto& [s, c] : e) {
    std::vector<Argument> args;
    for (const auto& a : s.args) {
      Argument v;
      try {
        v = symbolic::compose(a, point);
      } catch (const SpecializationError&) {
        return std::nullopt;
      }
      if (!v.is_group()) return std::nullopt;
      args.push_back(v);
    }
    Symbol image(args, s.index);
    if (!symbolic::admissible(image.args)) return std::nullopt;
    out.add(image, c);
  }
  return symbolic::normalize(out);
}

Report exact_wedge(const LinComb& e, int weight) {
  Report report;
  report.name = "verify_vanishing";
  report.label = "PROOF-AT-POINTS";
  report.note("mode", "exact-wedge");
  if (weight != 2 || has_atoms(e)) {
    report.verdict = "UNSUPPORTED";
    report.detail = weight != 2 ? "exact-wedge needs weight 2"
                                : "exact-wedge needs rational arguments; use specialize for function-field elements";
    return report;
  }
  WedgeElement w = coalgebra::delta(e);
  report.points = 1;
  if (!fields::wedge_exact_check(wedge_inputs(w))) report.fail("delta = " + coordinates_string(w) + " in the exterior square of Q^*");
  return report;
}

Report specialize_mode(const LinComb& e, int weight, const VanishingOptions& options) {
  Report report;
  report.name = "verify_vanishing";
  report.label = "EVIDENCE";
  report.note("mode", "specialize");
  report.note("function_field_check", "via rational specializations");
  if (weight != 2) {
    report.verdict = "UNSUPPORTED";
    report.detail = "specialize needs weight 2";
    return report;
  }
  std::set<std::string> vars;
  for (const auto& [s, c] : e)
    for (const auto& a : s.args) vars.merge(symbolic::variables(a));
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> num(-options.height, options.height);
  std::uniform_int_distribution<int> den(1, options.height);
  long retries = 0;
  long failing = 0;
  for (long i = 0; i < options.samples; ++i) {
    std::optional<LinComb> special;
    std::string where;
    while (!special) {
      std::map<symbolic::Atom, Argument> point;
      where.clear();
      for (const auto& v : vars) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        point[v] = Argument::constant(r);
        where += (where.empty() ? "" : ",") + v + "=" + fields::to_string(r);
      }
      special = specialize(e, point);
      if (!special && ++retries > options.max_retries)
        throw Error("no admissible specialization found after " + std::to_string(options.max_retries) + " retries");
    }
    WedgeElement w = coalgebra::delta(*special);
    if (!fields::wedge_exact_check(wedge_inputs(w))) {
      ++failing;
      report.fail("at (" + where + "): delta = " + coordinates_string(w));
    }
  }
  report.points = options.samples;
  report.note("failing_points", std::to_string(failing));
  report.note("rejected_points", std::to_string(retries));
  return report;
}

Report numeric_mode(const LinComb& e, int weight, const VanishingOptions& options) {
  numerics::NumericOptions numeric;
  numeric.samples = options.samples;
  numeric.seed = options.seed;
  numeric.tolerance = options.tolerance;
  Report report = numerics::wedge_numeric_check(coalgebra::delta(e), numeric);
  report.name = "verify_vanishing";
  report.note("mode", "numeric");
  if (weight <= 3 && report.verdict != "UNSUPPORTED") {
    Report constancy = numerics::realize_constancy(e, numeric);
    report.note("constancy_verdict", constancy.verdict);
    for (const auto& [k, v] : constancy.facts) report.note("constancy_" + k, v);
    if (constancy.verdict == "FAIL") report.fail("realization not constant: " + constancy.detail);
  }
  return report;
}

}  // namespace

std::string to_string(VanishingMode mode) {
  switch (mode) {
    case VanishingMode::ExactWedge:
      return "exact-wedge";
    case VanishingMode::Specialize:
      return "specialize";
    case VanishingMode::Numeric:
      return "numeric";
  }
  return "unknown";
}

VanishingMode parse_vanishing_mode(const std::string& text) {
  if (text == "exact-wedge") return VanishingMode::ExactWedge;
  if (text == "specialize") return VanishingMode::Specialize;
  if (text == "numeric") return VanishingMode::Numeric;
  throw Error("unknown mode: " + text);
}

Report verify_vanishing(const LinComb& e, VanishingMode mode, const VanishingOptions& options) {
  LinComb element = symbolic::normalize(e);
  int weight = homogeneous_weight(element);
  if (element.is_zero()) {
    Report report;
    report.name = "verify_vanishing";
    report.label = mode == VanishingMode::ExactWedge ? "PROOF-AT-POINTS" : "EVIDENCE";
    report.note("mode", to_string(mode));
    report.detail = "element is zero";
    return report;
  }
  if (weight < 2) throw Error("verify_vanishing needs weight >= 2");
  switch (mode) {
    case VanishingMode::ExactWedge:
      return exact_wedge(element, weight);
    case VanishingMode::Specialize:
      return specialize_mode(element, weight, options);
    case VanishingMode::Numeric:
      return numeric_mode(element, weight, options);
  }
  throw Error("unknown mode");
}

}  // namespace polylie::relations
