#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polylie::fields {

/// The field with p^k elements. Elements are integers 0..q-1 whose base-p
/// digits are the coefficients (constant term first) of a polynomial
/// reduced modulo the defining polynomial.
class FiniteField {
 public:
  /// `modulus` holds the monic defining polynomial, lowest coefficient
  /// first; when absent the first irreducible polynomial in enumeration
  /// order is used. Throws Error for a non-prime p or reducible modulus.
  static std::shared_ptr<const FiniteField> make(int p, int k,
                                                 std::optional<std::vector<int>> modulus = std::nullopt);
  /// Accepts a prime power q.
  static std::shared_ptr<const FiniteField> of_order(int q,
                                                     std::optional<std::vector<int>> modulus = std::nullopt);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long e) const;
  int from_integer(long n) const;

  /// Discrete logarithm to the fixed primitive element; a must be nonzero.
  int log(int a) const;
  int generator() const { return generator_; }

  std::string element_to_string(int a) const;

 private:
  FiniteField(int p, int k, std::vector<int> modulus);
  int slow_mul(int a, int b) const;

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  int generator_ = 1;
  std::vector<int> exp_;
  std::vector<int> log_;
};

/// First monic irreducible polynomial of degree k over F_p (lowest first).
std::vector<int> first_irreducible(int p, int k);
bool is_irreducible(const std::vector<int>& monic, int p);
bool is_prime(long n);

/// Returns (p, k) with q = p^k, or nullopt.
std::optional<std::pair<int, int>> prime_power(long q);

}  // namespace polylie::fields
