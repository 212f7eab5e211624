#pragma once

#include <polylie/fields/rational.hpp>
#include <polylie/symbolic/lincomb.hpp>

#include "support.hpp"

namespace test {

inline Symbol s2(const char* a, const char* b, int r, int s) {
  return Symbol({Argument::parse(a), Argument::parse(b)}, {r, s});
}
inline Symbol s1(const char* a, int n) { return Symbol({Argument::parse(a)}, {n}); }

/// The binomial closed form of delta[x1,x2]_{r,s}, summed directly.
inline WedgeElement depth2_display(int r, int s) {
  using polylie::symbolic::wedge;
  namespace fields = polylie::fields;
  WedgeElement out;
  auto add = [&](const LinComb& a, const LinComb& b, const Rational& c) { out.add(wedge(a, b), c); };
  if (r > 1) add(LinComb(s2("x1", "x2", r - 1, s)), lc("[x1;0]"), 1);
  if (s > 1) add(LinComb(s2("x1", "x2", r, s - 1)), lc("[x2;0]"), 1);
  add(LinComb(s1("x2", s)), LinComb(s1("x1", r)), 1);
  for (int i = 1; i <= r; ++i)
    add(LinComb(s1("x1*x2", i)), LinComb(s1("x2", r + s - i)),
        Rational(fields::sign_power(r - i)) * fields::binomial(r + s - 1 - i, s - 1));
  for (int i = 1; i <= s; ++i)
    add(LinComb(s1("x1*x2", i)), LinComb(s1("x1^-1", r + s - i)),
        Rational(fields::sign_power(r)) * fields::binomial(r + s - 1 - i, r - 1));
  return out;
}

}  // namespace test
