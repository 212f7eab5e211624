#pragma once

#include <polylie/fields/polynomial.hpp>

#include <map>
#include <string>
#include <string_view>

namespace polylie::fields {

/// Quotient of polynomials in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(const Rational& c) : num_(c) {}
  explicit RationalFunction(const Polynomial& p) : num_(p) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  /// Parses "p", "p/q" with parenthesized polynomial factors, e.g.
  /// "x*(1-y)/(1-x*y)".
  static RationalFunction parse(std::string_view text);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RationalFunction inverse() const;

  /// Evaluates at a rational point; throws SpecializationError at a pole.
  Rational specialize(const std::map<std::string, Rational>& point) const;

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_{Rational(1)};
};

}  // namespace polylie::fields
