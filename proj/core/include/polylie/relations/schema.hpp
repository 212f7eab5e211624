#pragma once

#include <polylie/fields/field_element.hpp>
#include <polylie/symbolic/lincomb.hpp>

#include <map>
#include <string>
#include <vector>

namespace polylie::relations {

using fields::FieldElement;
using fields::FieldSpec;
using symbolic::LinComb;

/// A named element of the symbol space over Q(parameters) whose cobracket
/// vanishes. The template is written in the lincomb syntax, with
/// parenthesized polynomials as atoms.
struct RelationSchema {
  std::string name;
  std::vector<std::string> parameters;
  std::string template_text;
  std::string description;
  int weight = 0;

  LinComb element() const;
  /// The symbol the schema rewrites away (its first term).
  symbolic::Symbol leading() const;
};

/// The built-in schemata; inversion_depth1(n) is listed for n = 2, 3, 4.
const std::vector<RelationSchema>& catalog();
/// Accepts catalog names and inversion_depth1(n) for any n >= 2.
/// Throws Error for an unknown name.
RelationSchema find_schema(const std::string& name);
RelationSchema inversion_depth1(int n);

struct InstanceTerm {
  Rational coeff;
  std::vector<int> index;
  std::vector<FieldElement> args;
};

/// A schema evaluated at field-valued parameters.
struct Instance {
  std::string schema;
  FieldSpec field;
  std::vector<InstanceTerm> terms;

  std::string to_string() const;
  /// Over Q and Q(X) only; throws Error over a finite field.
  LinComb lincomb() const;
};

/// Exact evaluation of every argument. Terms with a zero argument are
/// dropped. Throws AdmissibilityError naming the violated condition when a
/// consecutive product equals 1, and SpecializationError at a pole.
Instance instantiate(const RelationSchema& schema, const std::map<std::string, FieldElement>& params,
                     const FieldSpec& field);

/// Evaluates an argument whose atoms are parameters or polynomials in them.
FieldElement evaluate_argument(const symbolic::Argument& a, const std::map<std::string, FieldElement>& params,
                               const FieldSpec& field);

/// Embeds a rational number; throws SpecializationError when the
/// denominator vanishes in the field.
FieldElement embed(const Rational& c, const FieldSpec& field);

}  // namespace polylie::relations
