#include <polylie/error.hpp>
#include <polylie/symbolic/arithmetic.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace polylie::symbolic {

using fields::Polynomial;
using fields::RationalFunction;

namespace {

RationalFunction power(const RationalFunction& f, int e) {
  RationalFunction base = e < 0 ? f.inverse() : f;
  RationalFunction out(Rational(1));
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

Argument factor_polynomial(Polynomial p, const std::vector<Polynomial>& known) {
  if (p.is_zero()) return Argument::zero();
  auto [scalar, prim] = p.integer_primitive();
  Argument out = Argument::constant(scalar);
  p = prim;
  std::map<std::string, int> lowest;
  bool first = true;
  for (const auto& [pp, c] : p.terms()) {
    std::map<std::string, int> here(pp.begin(), pp.end());
    if (first) {
      lowest = here;
      first = false;
      continue;
    }
    for (auto it = lowest.begin(); it != lowest.end();) {
      auto h = here.find(it->first);
      if (h == here.end()) {
        it = lowest.erase(it);
      } else {
        it->second = std::min(it->second, h->second);
        ++it;
      }
    }
  }
  for (const auto& [var, e] : lowest) {
    Polynomial mono = Polynomial::monomial({{var, e}}, Rational(1));
    p = *fields::divide_exact(p, mono);
    out = out * Argument::atom(var, e);
  }
  for (const auto& k : known) {
    if (k.is_constant() || k.terms().size() == 1) continue;
    while (!p.is_constant()) {
      auto q = fields::divide_exact(p, k);
      if (!q) break;
      p = *q;
      out = out * Argument::from_polynomial(k);
    }
  }
  return out * Argument::from_polynomial(p);
}

}  // namespace

RationalFunction to_rational_function(const Argument& a) {
  if (a.is_zero()) return RationalFunction();
  if (a.is_infinity()) throw UndefinedSymbolError("inf has no rational function");
  RationalFunction out(a.constant());
  for (const auto& [atom, e] : a.exponents()) out = out * power(RationalFunction(atom_polynomial(atom)), e);
  return out;
}

Argument from_rational_function(const RationalFunction& f, const std::vector<Polynomial>& known) {
  if (f.is_zero()) return Argument::zero();
  return factor_polynomial(f.numerator(), known) * factor_polynomial(f.denominator(), known).inverse();
}

std::vector<Polynomial> atom_polynomials(const std::vector<Argument>& args) {
  std::set<Polynomial> seen;
  for (const auto& a : args)
    for (const auto& [atom, e] : a.exponents()) seen.insert(atom_polynomial(atom));
  return {seen.begin(), seen.end()};
}

Argument compose(const Argument& a, const std::map<Atom, Argument>& values) {
  if (!a.is_group()) return a;
  std::map<std::string, RationalFunction> rf;
  std::vector<Argument> pieces;
  for (const auto& [name, v] : values) {
    pieces.push_back(v);
    if (!v.is_infinity()) rf.emplace(name, to_rational_function(v));
  }
  std::function<RationalFunction(const std::string&)> value = [&](const std::string& var) {
    auto it = rf.find(var);
    if (it != rf.end()) return it->second;
    if (values.count(var)) throw SpecializationError("inf substituted into " + a.to_string());
    return RationalFunction(Polynomial::variable(var));
  };
  std::function<RationalFunction(const Rational&)> coeff = [](const Rational& c) { return RationalFunction(c); };
  RationalFunction out(a.constant());
  for (const auto& [atom, e] : a.exponents()) {
    RationalFunction f = atom_polynomial(atom).evaluate(value, coeff);
    if (f.is_zero() && e < 0) throw SpecializationError("pole of " + a.to_string() + " at atom " + atom);
    out = out * power(f, e);
  }
  auto known = atom_polynomials(pieces);
  for (const auto& [atom, e] : a.exponents())
    if (!values.count(atom) && is_compound_atom(atom)) known.push_back(atom_polynomial(atom));
  return from_rational_function(out, known);
}

Argument one_minus(const Argument& a) {
  if (a.is_zero()) return Argument();
  RationalFunction f = RationalFunction(Rational(1)) - to_rational_function(a);
  return from_rational_function(f, atom_polynomials({a}));
}

std::set<std::string> variables(const Argument& a) {
  std::set<std::string> out;
  for (const auto& [atom, e] : a.exponents()) {
    if (!is_compound_atom(atom)) {
      out.insert(atom);
      continue;
    }
    for (const auto& v : atom_polynomial(atom).variables()) out.insert(v);
  }
  return out;
}

}  // namespace polylie::symbolic
