#pragma once

#include <polylie/report.hpp>
#include <polylie/symbolic/lincomb.hpp>

namespace polylie::inversion {

/// Both sides of
///   INV(delta(X^-1) + (-1)^d delta(X)) = INV delta((-1)^d/t1 (A - B) - 1/td (C^-1 - D^-1))
/// over formal atoms x1..xd, compared at every coefficient of weight <= weight_bound.
Report verify_inversion_claim(int d, int weight_bound);

/// The five grouped term families of delta(X^-1) + (-1)^d delta(X), each
/// compared with the delta parts it collects. The families sum to
/// delta(X) + (-1)^d delta(X^-1); the report records which sign convention
/// of the left side they match.
Report verify_inversion_families(int d, int weight_bound);

/// (-1)^n [x2^-1,x1^-1]_{n2,n1} - inv[x1,x2]_{n1,n2} against the four-term
/// depth-two inversion identity, both after depth-one inversion normal form.
Report verify_inversion_depth2(int weight_bound);

/// Closed forms of [x1,inf]_{n1,n2} and [inf,x2]_{n1,n2} derived from the
/// infinity definition, compared with a binomial display.
struct InfinityClosedForm {
  /// [x1,inf]_{n1,n2} = sign1 * C(n1+n2-1, n1-1) [x1]_n, sign1 = (-1)^n2.
  /// [inf,x2]_{n1,n2} = -(-1)^n1 C(n1+n2-1, n2-1) [x2]_n.
  static symbolic::LinComb left(int n1, int n2);
  static symbolic::LinComb right(int n1, int n2);
  /// The same shapes with C(n1+n2, .) in place of C(n1+n2-1, .).
  static symbolic::LinComb left_shifted(int n1, int n2);
  static symbolic::LinComb right_shifted(int n1, int n2);
};

Report verify_infinity_closed_forms(int weight_bound);

}  // namespace polylie::inversion
