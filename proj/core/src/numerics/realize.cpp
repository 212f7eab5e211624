#include <polylie/error.hpp>
#include <polylie/numerics/realize.hpp>
#include <polylie/relations/reduce.hpp>
#include <polylie/symbolic/arithmetic.hpp>

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

namespace polylie::numerics {

using symbolic::Symbol;

namespace {

double realize_depth1(const Symbol& s, const ComplexPoint& p, double guard) {
  Complex z = evaluate(s.args[0], p);
  double r = std::abs(z);
  if (r < guard || r > 1 / guard) throw GuardFailure("argument " + s.args[0].to_string() + " near 0 or inf");
  int n = s.index[0];
  if (n == 0) return std::log(r);
  if (std::abs(Complex(1) - z) < guard) throw GuardFailure("argument " + s.args[0].to_string() + " near 1");
  if (n == 1) return -std::log(std::abs(Complex(1) - z));
  return single_valued_L(n, z);
}

struct Component {
  int left_weight = 0;
  int right_weight = 0;
  std::vector<std::tuple<Rational, const Realizer*, const Realizer*>> terms;
};

}  // namespace

Complex evaluate(const symbolic::Argument& a, const ComplexPoint& p) {
  if (a.is_zero()) return 0;
  if (a.is_infinity()) throw GuardFailure("inf has no complex value");
  std::function<Complex(const std::string&)> value = [&](const std::string& var) {
    auto it = p.find(var);
    if (it == p.end()) throw Error("no value for variable " + var);
    return it->second;
  };
  std::function<Complex(const Rational&)> coeff = [](const Rational& c) { return Complex(c.get_d()); };
  Complex out = a.constant().get_d();
  for (const auto& [atom, e] : a.exponents()) {
    Complex v = symbolic::atom_polynomial(atom).evaluate(value, coeff);
    if (v == Complex(0) && e < 0) throw GuardFailure("pole of " + a.to_string());
    out *= std::pow(v, e);
  }
  return out;
}

std::set<std::string> variables(const LinComb& e) {
  std::set<std::string> out;
  for (const auto& [s, c] : e)
    for (const auto& a : s.args) out.merge(symbolic::variables(a));
  return out;
}

std::set<std::string> variables(const WedgeElement& w) {
  std::set<std::string> out;
  for (const auto& [k, c] : w) {
    out.merge(variables(LinComb(k.first)));
    out.merge(variables(LinComb(k.second)));
  }
  return out;
}

Complex PointSampler::value() {
  std::uniform_real_distribution<double> radius(0.1, 0.9);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::bernoulli_distribution invert(0.5);
  Complex z = std::polar(radius(rng_), angle(rng_));
  return invert(rng_) ? Complex(1) / z : z;
}

ComplexPoint PointSampler::point(const std::set<std::string>& vars) {
  ComplexPoint out;
  for (const auto& v : vars) out[v] = value();
  return out;
}

Realizer::Realizer(const LinComb& e) : depth1_(relations::reduce_to_depth1(symbolic::normalize(e))) {}

double Realizer::operator()(const ComplexPoint& p, double guard) const {
  double total = 0;
  for (const auto& [s, c] : depth1_) total += c.get_d() * realize_depth1(s, p, guard);
  return total;
}

double realize(const LinComb& e, const ComplexPoint& p) { return Realizer(e)(p); }

Report wedge_numeric_check(const WedgeElement& w, const NumericOptions& options) {
  Report report;
  report.name = "wedge_numeric_check";
  report.label = "EVIDENCE";
  report.tolerance = options.tolerance;
  std::map<Symbol, Realizer> realizers;
  std::map<std::pair<int, int>, Component> components;
  try {
    for (const auto& [k, c] : w) {
      Symbol a = k.first;
      Symbol b = k.second;
      Rational coeff = c;
      if (a.weight() < b.weight()) {
        std::swap(a, b);
        coeff = -coeff;
      }
      for (const auto& s : {a, b})
        if (!realizers.count(s)) realizers.emplace(s, Realizer(LinComb(s)));
      auto& comp = components[{a.weight(), b.weight()}];
      comp.left_weight = a.weight();
      comp.right_weight = b.weight();
      comp.terms.emplace_back(coeff, &realizers.at(a), &realizers.at(b));
    }
  } catch (const UnsupportedError& err) {
    report.verdict = "UNSUPPORTED";
    report.detail = err.what();
    return report;
  }
  auto vars = variables(w);
  PointSampler sampler(options.seed);
  long failing = 0;
  long retries = 0;
  double max_abs = 0;
  for (long i = 0; i < options.samples; ++i) {
    std::optional<double> worst;
    while (!worst) {
      ComplexPoint p = sampler.point(vars);
      ComplexPoint q = sampler.point(vars);
      try {
        double point_worst = 0;
        for (const auto& [key, comp] : components) {
          double value = 0;
          for (const auto& [coeff, ra, rb] : comp.terms) {
            if (comp.left_weight != comp.right_weight)
              value += coeff.get_d() * (*ra)(p, options.guard) * (*rb)(p, options.guard);
            else
              value += coeff.get_d() * ((*ra)(p, options.guard) * (*rb)(q, options.guard) -
                                        (*rb)(p, options.guard) * (*ra)(q, options.guard));
          }
          point_worst = std::max(point_worst, std::abs(value));
        }
        worst = point_worst;
      } catch (const GuardFailure&) {
        if (++retries > options.max_retries) throw Error("no admissible sample point after bounded retries");
      }
    }
    max_abs = std::max(max_abs, *worst);
    if (*worst >= options.tolerance) ++failing;
  }
  report.points = options.samples;
  report.max_abs_value = max_abs;
  report.note("failing_points", std::to_string(failing));
  report.note("components", std::to_string(components.size()));
  if (failing > 0) report.fail(std::to_string(failing) + " of " + std::to_string(options.samples) + " points exceed tolerance");
  return report;
}

Report realize_constancy(const LinComb& e, const NumericOptions& options) {
  Report report;
  report.name = "realize_constancy";
  report.label = "EVIDENCE";
  report.tolerance = options.tolerance;
  std::optional<Realizer> realizer;
  try {
    realizer.emplace(e);
  } catch (const UnsupportedError& err) {
    report.verdict = "UNSUPPORTED";
    report.detail = err.what();
    return report;
  }
  auto vars = variables(e);
  PointSampler sampler(options.seed);
  long failing = 0;
  long retries = 0;
  auto sample = [&] {
    while (true) {
      try {
        return (*realizer)(sampler.point(vars), options.guard);
      } catch (const GuardFailure&) {
        if (++retries > options.max_retries) throw Error("no admissible sample point after bounded retries");
      }
    }
  };
  std::optional<double> reference = sample();
  double max_dev = 0;
  double max_abs = std::abs(*reference);
  for (long i = 0; i < options.samples; ++i) {
    std::optional<double> value = sample();
    double dev = std::abs(*value - *reference);
    max_dev = std::max(max_dev, dev);
    max_abs = std::max(max_abs, std::abs(*value));
    if (dev >= options.tolerance) ++failing;
  }
  report.points = options.samples;
  report.max_abs_value = max_abs;
  report.note("reference_value", std::to_string(*reference));
  report.note("max_deviation", std::to_string(max_dev));
  report.note("failing_points", std::to_string(failing));
  if (failing > 0) report.fail(std::to_string(failing) + " of " + std::to_string(options.samples) + " points deviate");
  return report;
}

}  // namespace polylie::numerics
