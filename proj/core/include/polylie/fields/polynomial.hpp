#pragma once

#include <polylie/fields/rational.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polylie::fields {

/// A power product of named variables, sorted by name, positive exponents.
using PowerProduct = std::vector<std::pair<std::string, int>>;

/// Lexicographic monomial order on variable names (alphabetical priority).
bool lex_less(const PowerProduct& a, const PowerProduct& b);

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  explicit Polynomial(long constant) : Polynomial(Rational(constant)) {}

  static Polynomial variable(const std::string& name);
  static Polynomial monomial(const PowerProduct& pp, const Rational& coeff);

  /// Parses sums of products of numbers, identifiers and parenthesized
  /// subexpressions, with `^n` powers and division by constants.
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  const std::map<PowerProduct, Rational>& terms() const { return terms_; }

  std::vector<std::string> variables() const;
  int degree_in(const std::string& var) const;
  int total_degree() const;

  /// Leading power product and coefficient under lex_less.
  std::pair<PowerProduct, Rational> leading_term() const;

  /// Coefficients as a polynomial in `var`; entry i multiplies var^i.
  std::vector<Polynomial> coefficients_in(const std::string& var) const;
  static Polynomial from_coefficients_in(const std::string& var,
                                         const std::vector<Polynomial>& coeffs);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator<(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned n) const;

  /// Splits off the rational factor so the rest has coprime integer
  /// coefficients and a positive constant term (or positive leading
  /// coefficient when the constant term vanishes).
  std::pair<Rational, Polynomial> integer_primitive() const;

  /// Evaluates in a commutative ring T; `coeff` embeds rationals into T.
  template <class T>
  T evaluate(const std::function<T(const std::string&)>& value,
             const std::function<T(const Rational&)>& coeff) const;

  std::string to_string() const;

 private:
  void add_term(const PowerProduct& pp, const Rational& c);
  std::map<PowerProduct, Rational> terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Greatest common divisor, normalized to leading coefficient 1 (zero if both zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

template <class T>
T Polynomial::evaluate(const std::function<T(const std::string&)>& value,
                       const std::function<T(const Rational&)>& coeff) const {
  T total = coeff(Rational(0));
  std::map<std::string, T> cache;
  for (const auto& [pp, c] : terms_) {
    T term = coeff(c);
    for (const auto& [var, e] : pp) {
      auto it = cache.find(var);
      if (it == cache.end()) it = cache.emplace(var, value(var)).first;
      for (int i = 0; i < e; ++i) term = term * it->second;
    }
    total = total + term;
  }
  return total;
}

}  // namespace polylie::fields
