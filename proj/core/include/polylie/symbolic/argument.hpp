#pragma once

#include <polylie/fields/polynomial.hpp>
#include <polylie/fields/rational.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polylie::symbolic {

/// Atom names are identifiers, or a parenthesized primitive integer
/// polynomial such as "(1-x*y)" standing for that polynomial.
using Atom = std::string;

bool is_compound_atom(const Atom& a);
/// The polynomial an atom denotes (a variable for plain identifiers).
fields::Polynomial atom_polynomial(const Atom& a);

/// An element c * prod a^e of the free abelian group on atoms times a
/// nonzero rational constant c, or one of the special values 0 and inf.
class Argument {
 public:
  enum class Kind { Group, Zero, Infinity };

  Argument() = default;
  static Argument zero();
  static Argument infinity();
  static Argument atom(const Atom& name, int exponent = 1);
  static Argument constant(const Rational& c);
  /// Parses products such as "x", "x^-1", "x*y", "-3/5*x", "(1-x*y)^-1", "0", "inf".
  static Argument parse(std::string_view text);
  /// Converts a rational function (in factored form) to an argument
  /// whose atoms are its irreducible-looking polynomial factors.
  static Argument from_polynomial(const fields::Polynomial& p);

  Kind kind() const { return kind_; }
  bool is_group() const { return kind_ == Kind::Group; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_one() const { return kind_ == Kind::Group && exponents_.empty() && constant_ == 1; }
  const Rational& constant() const { return constant_; }
  const std::vector<std::pair<Atom, int>>& exponents() const { return exponents_; }
  int exponent_of(const Atom& a) const;

  bool all_exponents_nonnegative() const;
  bool all_exponents_nonpositive() const;

  Argument inverse() const { return pow(-1); }
  Argument pow(int e) const;
  /// Throws UndefinedSymbolError for 0 * inf.
  friend Argument operator*(const Argument& a, const Argument& b);

  /// Replaces atoms by arguments multiplicatively; unlisted atoms stay.
  Argument substitute(const std::map<Atom, Argument>& values) const;

  std::string to_string() const;

  friend bool operator==(const Argument& a, const Argument& b) {
    return a.kind_ == b.kind_ && a.constant_ == b.constant_ && a.exponents_ == b.exponents_;
  }
  friend bool operator!=(const Argument& a, const Argument& b) { return !(a == b); }
  friend bool operator<(const Argument& a, const Argument& b);

 private:
  Kind kind_ = Kind::Group;
  Rational constant_{1};
  std::vector<std::pair<Atom, int>> exponents_;
};

}  // namespace polylie::symbolic
