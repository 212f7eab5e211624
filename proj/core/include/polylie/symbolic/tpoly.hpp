#pragma once

#include <polylie/fields/rational.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polylie::symbolic {

/// Number of formal t-variables available (t1..t8).
inline constexpr int kMaxTVars = 8;

/// Integer linear form in t1..t8.
class TForm {
 public:
  TForm() = default;
  /// The variable t_{i+1} (0-based index).
  static TForm var(int i, int coeff = 1);

  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  /// Highest variable index with a nonzero coefficient, or -1.
  int top_variable() const;

  TForm operator-() const;
  friend TForm operator+(TForm a, const TForm& b);
  friend TForm operator-(TForm a, const TForm& b) { return a + (-b); }
  friend TForm operator*(int k, TForm a);
  friend bool operator==(const TForm& a, const TForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TForm& a, const TForm& b) { return a.c_ != b.c_; }
  friend bool operator<(const TForm& a, const TForm& b) { return a.c_ < b.c_; }

  /// Splits into (s, L) with this = s * L, L primitive with positive
  /// leading coefficient.
  std::pair<int, TForm> normalized() const;

  std::string to_string(const std::string& prefix = "t") const;

 private:
  std::array<int, kMaxTVars> c_{};
};

/// Packed exponent vector, 8 bits per variable.
using TMonomial = std::uint64_t;

int exponent(TMonomial m, int var);
int degree(TMonomial m);
TMonomial monomial_var(int var, int e = 1);
/// Monomial with the given exponents (index i is t_{i+1}).
TMonomial monomial_from(const std::vector<int>& exponents);
std::string monomial_to_string(TMonomial m, const std::string& prefix = "t");

/// Polynomial in t1..t8 with rational coefficients.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(const Rational& c);
  static TPoly from_form(const TForm& f);
  static TPoly monomial(TMonomial m, const Rational& c = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<TMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(TMonomial m) const;
  int max_degree() const;

  void add(TMonomial m, const Rational& c);
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const Rational& c);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }

  /// Product keeping only total degree <= max_degree.
  static TPoly multiply(const TPoly& a, const TPoly& b, int max_degree);
  TPoly truncated(int max_degree) const;
  /// Exact quotient by a nonzero linear form; throws ExpansionError when
  /// the remainder is nonzero.
  TPoly divided_by(const TForm& f) const;
  /// Substitutes t_{i+1} -> images[i] (missing entries stay), truncating.
  TPoly substituted(const std::vector<TForm>& images, int max_degree) const;

  std::string to_string(const std::string& prefix = "t") const;

 private:
  std::map<TMonomial, Rational> terms_;
};

/// Powers f^0..f^n, each truncated (they are homogeneous so exact).
std::vector<TPoly> form_powers(const TForm& f, int n);

}  // namespace polylie::symbolic
