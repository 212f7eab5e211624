#pragma once

#include <polylie/fields/field_element.hpp>
#include <polylie/fields/rational.hpp>

#include <map>
#include <utility>
#include <vector>

namespace polylie::fields {

/// sign * prod p^e over primes p, exponents possibly negative.
struct Factorization {
  int sign = 1;
  std::map<BigInt, long> primes;
  Rational recompose() const;
};

/// Throws SpecializationError for zero.
Factorization factor(const Rational& r);
std::map<BigInt, long> factor_integer(BigInt n);

struct WedgeInput {
  FieldElement a;
  FieldElement b;
  Rational coeff;
};

/// Coordinates of sum coeff * a ^ b in the exterior square of the free
/// abelian group on primes, keyed by (p, q) with p < q. Signs are torsion
/// and are dropped.
std::map<std::pair<BigInt, BigInt>, Rational> wedge_coordinates(const std::vector<WedgeInput>& terms);

/// True when sum coeff * a ^ b vanishes in the exterior square of F^*
/// modulo torsion. Over a finite field the group is cyclic and this is
/// always true.
bool wedge_exact_check(const std::vector<WedgeInput>& terms);

}  // namespace polylie::fields
