#pragma once

#include <polylie/fields/rational.hpp>

#include <complex>

namespace polylie::numerics {

using Complex = std::complex<double>;

/// Bernoulli number B_n with B_1 = -1/2.
const Rational& bernoulli(int n);

/// Principal branch of Li_n(z), n >= 1. Direct series for |z| <= 1/2,
/// the inversion relation for |z| >= 2 and the log-z expansion in between.
Complex polylog(int n, Complex z);

/// Zagier's single-valued L_n: Re for odd n, Im for even n of
/// sum_{r<n} 2^r B_r / r! Li_{n-r}(z) log^r |z|.
double single_valued_L(int n, Complex z);

}  // namespace polylie::numerics
