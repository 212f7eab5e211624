#include <polylie/error.hpp>
#include <polylie/inversion/inv.hpp>
#include <polylie/relations/reduce.hpp>
#include <polylie/relations/schema.hpp>
#include <polylie/symbolic/arithmetic.hpp>
#include <polylie/symbolic/parse.hpp>

#include <algorithm>

namespace polylie::relations {

using symbolic::Argument;

namespace {

struct Rule {
  Symbol leading;
  LinComb replacement;
};

Rule make_rule(const std::string& schema_name) {
  RelationSchema schema = find_schema(schema_name);
  Symbol lead = schema.leading();
  LinComb element = schema.element();
  Rational c = element.coefficient(lead);
  LinComb replacement = LinComb(lead) - Rational(1) / c * element;
  return {lead, replacement};
}

const std::vector<Rule>& rules() {
  static const std::vector<Rule> all = {make_rule("depth_reduction_11"), make_rule("weight3_21"),
                                        make_rule("sym_12"), make_rule("weight3_111")};
  return all;
}

std::string index_string(const std::vector<int>& index) {
  std::string out;
  for (std::size_t i = 0; i < index.size(); ++i) out += (i ? "," : "") + std::to_string(index[i]);
  return out;
}

LinComb apply_rule(const Rule& rule, const Symbol& s) {
  std::map<symbolic::Atom, Argument> values;
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    const auto& exps = rule.leading.args[i].exponents();
    values[exps.front().first] = s.args[i];
  }
  LinComb out;
  for (const auto& [t, c] : rule.replacement) {
    std::vector<Argument> args;
    for (const auto& a : t.args) {
      Argument v;
      try {
        v = symbolic::compose(a, values);
      } catch (const SpecializationError&) {
        throw AdmissibilityError("intermediate argument " + a.to_string() + " is inf in the reduction of " +
                                 s.to_string());
      }
      if (v.is_zero() || v.is_infinity() || v.is_one())
        throw AdmissibilityError("intermediate argument " + a.to_string() + " = " + v.to_string() +
                                 " in the reduction of " + s.to_string());
      args.push_back(v);
    }
    Symbol image(args, t.index);
    symbolic::check_symbol(image);
    out.add(reduce_to_depth1(image), c);
  }
  return out;
}

}  // namespace

LinComb reduce_to_depth1(const Symbol& s) {
  if (s.has_infinity()) return reduce_to_depth1(inversion::infinity_reduce(s));
  if (s.depth() <= 1) return symbolic::normalize(LinComb(s));
  if (s.has_zero()) return {};
  for (const auto& rule : rules())
    if (rule.leading.index == s.index) return symbolic::normalize(apply_rule(rule, s));
  throw UnsupportedError("no depth reduction for index (" + index_string(s.index) + ") in " + s.to_string());
}

LinComb reduce_to_depth1(const LinComb& e) {
  LinComb out;
  for (const auto& [s, c] : e) out.add(reduce_to_depth1(s), c);
  return out;
}

std::string GRSymbol::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i].to_string();
  return out + ";" + index_string(index) + "}";
}

GRSymbol parse_gr_symbol(std::string_view text) {
  std::string t(text);
  auto open = t.find('{');
  auto close = t.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw ParseError("expected {args;index}", 0);
  t[open] = '[';
  t[close] = ']';
  Symbol s = symbolic::parse_symbol(t);
  return {s.args, s.index};
}

LinComb gr_translate(const GRSymbol& s) {
  int n = 0;
  for (int k : s.index) n += k;
  if (n < 2 || n > 4) throw Error("gr_translate needs weight 2, 3 or 4, got " + std::to_string(n));
  LinComb out;
  if (s.args.size() == 1 && s.index.size() == 1) {
    Symbol image(s.args, s.index);
    symbolic::check_symbol(image);
    out.add(image, 1);
    return symbolic::normalize(out);
  }
  if (s.args.size() != 2 || s.index.size() != 2 || s.index[1] != 1 || n < 3)
    throw Error("gr_translate handles {x}_n and {x,y}_{n-1,1} with n = 3, 4; got " + s.to_string());
  const Argument& x = s.args[0];
  const Argument& y = s.args[1];
  Symbol depth2({x * y.inverse(), y}, {n - 1, 1});
  symbolic::check_symbol(depth2);
  out.add(depth2, -1);
  out.add(Symbol({x}, {n}), -1);
  out.add(Symbol({y}, {n}), n == 3 ? -1 : 1);
  for (const auto& [t, c] : out) symbolic::check_symbol(t);
  return symbolic::normalize(out);
}

}  // namespace polylie::relations
