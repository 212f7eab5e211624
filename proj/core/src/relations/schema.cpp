#include <polylie/error.hpp>
#include <polylie/relations/schema.hpp>
#include <polylie/symbolic/arithmetic.hpp>
#include <polylie/symbolic/parse.hpp>

#include <regex>

namespace polylie::relations {

using fields::RationalFunction;
using symbolic::Argument;
using symbolic::Symbol;

namespace {

std::vector<RelationSchema> build_catalog() {
  std::vector<RelationSchema> out;
  for (int n = 2; n <= 4; ++n) out.push_back(inversion_depth1(n));
  out.push_back({"depth_reduction_11",
                 {"x", "y"},
                 "[x,y;1,1] + [x;2] - [x*(1-y)*(1-x*y)^-1;2]",
                 "expresses [x,y]_{1,1} in depth one",
                 2});
  out.push_back({"five_term",
                 {"x", "y"},
                 "[x;2] + [y;2] - [x*y;2] - [y*(1-x)*(1-x*y)^-1;2] - [x*(1-y)*(1-x*y)^-1;2]",
                 "five term relation of the dilogarithm",
                 2});
  out.push_back({"weight3_21",
                 {"x", "y"},
                 "[x,y;2,1] + [x;3] + [(1-y)*(1-x*y)^-1;3] + [x*y;3] + [-x*y*(1-x*y)^-1;3] - [(1-y);3]"
                 " - [x*(1-y)*(1-x*y)^-1;3]",
                 "expresses [x,y]_{2,1} in depth one",
                 3});
  out.push_back({"weight3_111",
                 {"x", "y", "z"},
                 "[x,y,z;1,1,1] - [-y*(1-y)^-1;3] + [(1-x)*(1-x*y*z)^-1;3] - [x*y;3]"
                 " + [x*y*(1-z)*(1-x*y*z)^-1;3] - [(1-x);3] + [-y*(1-x)*(1-y)^-1;3]"
                 " + [-y*(1-z)*(1-y)^-1;3] - [-y*(1-x)*(1-z)*(1-x*y*z)^-1*(1-y)^-1;3]",
                 "expresses [x,y,z]_{1,1,1} in depth one",
                 3});
  out.push_back({"sym_12",
                 {"x", "y"},
                 "[x,y;1,2] + [y,x;2,1] + [x*y;3]",
                 "trades [x,y]_{1,2} for [y,x]_{2,1}",
                 3});
  out.push_back({"weight4_22",
                 {"x", "y"},
                 "[x,y;2,2] - [y;4] - [x*y;4] - [y,x;3,1] - [x*y,x^-1;3,1] + [x,y;3,1]",
                 "expresses [x,y]_{2,2} through depth one and index (3,1)",
                 4});
  return out;
}

std::string describe_product(const std::vector<Argument>& args, std::size_t i, std::size_t j) {
  std::string out;
  for (std::size_t k = i; k <= j; ++k) {
    if (k > i) out += " * ";
    out += args[k].to_string();
  }
  return out;
}

FieldElement power(const FieldElement& base, int e) {
  FieldElement b = e < 0 ? fields::inv(base) : base;
  FieldElement out = b;
  for (int i = 1; i < std::abs(e); ++i) out = fields::mul(out, b);
  return out;
}

std::string coefficient_prefix(const Rational& c, bool first) {
  std::string out;
  if (c < 0)
    out = first ? "-" : " - ";
  else if (!first)
    out = " + ";
  Rational mag = abs(c);
  if (mag != 1) out += fields::to_string(mag) + "*";
  return out;
}

}  // namespace

LinComb RelationSchema::element() const { return symbolic::parse_lincomb(template_text); }

Symbol RelationSchema::leading() const {
  auto close = template_text.find(']');
  return symbolic::parse_lincomb(template_text.substr(0, close + 1)).begin()->first;
}

const std::vector<RelationSchema>& catalog() {
  static const std::vector<RelationSchema> schemata = build_catalog();
  return schemata;
}

RelationSchema inversion_depth1(int n) {
  if (n < 2) throw Error("inversion_depth1 needs n >= 2");
  std::string ns = std::to_string(n);
  std::string sign = (n % 2 == 0) ? " + " : " - ";
  return {"inversion_depth1(" + ns + ")", {"x"}, "2*[x;" + ns + "]" + sign + "2*[x^-1;" + ns + "]",
          "depth-one inversion relation", n};
}

RelationSchema find_schema(const std::string& name) {
  static const std::regex inversion(R"(inversion_depth1\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, inversion)) return inversion_depth1(std::stoi(m[1].str()));
  for (const auto& s : catalog())
    if (s.name == name) return s;
  throw Error("unknown relation schema: " + name);
}

FieldElement embed(const Rational& c, const FieldSpec& field) {
  switch (field.kind()) {
    case FieldSpec::Kind::Rationals:
      return c;
    case FieldSpec::Kind::FunctionField:
      return RationalFunction(c);
    case FieldSpec::Kind::Finite: {
      int p = field.finite()->characteristic();
      auto reduce = [&](const BigInt& n) {
        BigInt r = n % p;
        if (r < 0) r += p;
        return field.from_integer(r.get_si());
      };
      FieldElement den = reduce(c.get_den());
      if (fields::is_zero(den))
        throw SpecializationError("denominator of " + fields::to_string(c) + " vanishes in " + field.to_string());
      return fields::mul(reduce(c.get_num()), fields::inv(den));
    }
  }
  throw Error("unknown field kind");
}

FieldElement evaluate_argument(const Argument& a, const std::map<std::string, FieldElement>& params,
                               const FieldSpec& field) {
  if (a.is_zero()) return embed(Rational(0), field);
  if (a.is_infinity()) throw SpecializationError("inf has no value in " + field.to_string());
  FieldElement out = embed(a.constant(), field);
  for (const auto& [atom, e] : a.exponents()) {
    FieldElement value = embed(Rational(0), field);
    fields::Polynomial poly = symbolic::atom_polynomial(atom);
    for (const auto& [pp, c] : poly.terms()) {
      FieldElement term = embed(c, field);
      for (const auto& [var, k] : pp) {
        auto it = params.find(var);
        if (it == params.end()) throw Error("no value for parameter " + var);
        term = fields::mul(term, power(it->second, k));
      }
      value = fields::add(value, term);
    }
    if (fields::is_zero(value) && e < 0) throw SpecializationError("pole of " + a.to_string() + " at atom " + atom);
    out = fields::mul(out, power(value, e));
  }
  return out;
}

Instance instantiate(const RelationSchema& schema, const std::map<std::string, FieldElement>& params,
                     const FieldSpec& field) {
  for (const auto& p : schema.parameters)
    if (!params.count(p)) throw Error(schema.name + ": missing parameter " + p);
  Instance out{schema.name, field, {}};
  for (const auto& [sym, coeff] : schema.element()) {
    InstanceTerm term{coeff, sym.index, {}};
    bool has_zero = false;
    for (const auto& a : sym.args) {
      FieldElement v;
      try {
        v = evaluate_argument(a, params, field);
      } catch (const SpecializationError& err) {
        throw SpecializationError(schema.name + ": " + err.what() + " in " + sym.to_string());
      }
      has_zero = has_zero || fields::is_zero(v);
      term.args.push_back(v);
    }
    if (has_zero) continue;
    for (std::size_t i = 0; i < term.args.size(); ++i) {
      FieldElement product = term.args[i];
      for (std::size_t j = i; j < term.args.size(); ++j) {
        if (j > i) product = fields::mul(product, term.args[j]);
        if (fields::is_one(product))
          throw AdmissibilityError(schema.name + ": " + describe_product(sym.args, i, j) + " = 1 in " +
                                   sym.to_string());
      }
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::string Instance::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    out += coefficient_prefix(t.coeff, first);
    first = false;
    out += "[";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i > 0) out += ",";
      out += fields::to_string(t.args[i]);
    }
    out += ";";
    for (std::size_t i = 0; i < t.index.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(t.index[i]);
    }
    out += "]";
  }
  return out;
}

LinComb Instance::lincomb() const {
  LinComb out;
  for (const auto& t : terms) {
    std::vector<Argument> args;
    for (const auto& v : t.args) {
      if (const auto* r = std::get_if<Rational>(&v))
        args.push_back(Argument::constant(*r));
      else if (const auto* f = std::get_if<RationalFunction>(&v))
        args.push_back(symbolic::from_rational_function(*f));
      else
        throw Error("finite-field instances have no symbol form");
    }
    out.add(Symbol(args, t.index), t.coeff);
  }
  return symbolic::normalize(out);
}

}  // namespace polylie::relations
