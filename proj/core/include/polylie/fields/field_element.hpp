#pragma once

#include <polylie/fields/finite_field.hpp>
#include <polylie/fields/rational.hpp>
#include <polylie/fields/rational_function.hpp>

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polylie::fields {

struct FqElement {
  std::shared_ptr<const FiniteField> field;
  int value = 0;
  friend bool operator==(const FqElement& a, const FqElement& b) {
    return a.value == b.value && a.field->order() == b.field->order() &&
           a.field->modulus() == b.field->modulus();
  }
};

using FieldElement = std::variant<Rational, FqElement, RationalFunction>;

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
/// Throws SpecializationError for zero.
FieldElement inv(const FieldElement& a);
bool is_zero(const FieldElement& a);
bool is_one(const FieldElement& a);
std::string to_string(const FieldElement& a);

/// A base field named by a CLI spec: `Q`, `Fq:7`, `Fq:9:poly=t^2+1`, `Q(x,y)`.
class FieldSpec {
 public:
  enum class Kind { Rationals, Finite, FunctionField };

  static FieldSpec parse(std::string_view text);
  static FieldSpec rationals();

  Kind kind() const { return kind_; }
  const std::shared_ptr<const FiniteField>& finite() const { return finite_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::string to_string() const;

  FieldElement from_integer(long n) const;
  /// Parses an element written in this field's notation.
  FieldElement parse_element(std::string_view text) const;

 private:
  Kind kind_ = Kind::Rationals;
  std::shared_ptr<const FiniteField> finite_;
  std::vector<std::string> variables_;
};

/// Evaluates f at a rational point. Throws SpecializationError at a pole.
Rational specialize(const RationalFunction& f, const std::map<std::string, Rational>& point);
/// Reduces f modulo p and evaluates at a point of the prime field `field`.
FqElement specialize(const RationalFunction& f, const std::map<std::string, int>& point,
                     const std::shared_ptr<const FiniteField>& field);

}  // namespace polylie::fields
