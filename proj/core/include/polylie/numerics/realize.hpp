#pragma once

#include <polylie/numerics/polylog.hpp>
#include <polylie/report.hpp>
#include <polylie/symbolic/lincomb.hpp>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace polylie::numerics {

using symbolic::LinComb;
using symbolic::WedgeElement;
using ComplexPoint = std::map<std::string, Complex>;

/// Throws GuardFailure at a pole.
Complex evaluate(const symbolic::Argument& a, const ComplexPoint& p);

std::set<std::string> variables(const LinComb& e);
std::set<std::string> variables(const WedgeElement& w);

/// Draws each coordinate from the annulus 0.1 < |z| < 0.9 or its image
/// under z -> 1/z, with equal probability.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  Complex value();
  ComplexPoint point(const std::set<std::string>& vars);

 private:
  std::mt19937_64 rng_;
};

/// The realization r of a combination of weight <= 3 (depth one at any
/// weight): r([x]_0) = log|x|, r([x]_1) = -log|1-x|, r([x]_n) = L_n(x).
/// Depth >= 2 goes through reduce_to_depth1; construction throws
/// UnsupportedError when that is impossible.
class Realizer {
 public:
  explicit Realizer(const LinComb& e);
  /// Throws GuardFailure when an argument comes within `guard` of 0, 1 or inf.
  double operator()(const ComplexPoint& p, double guard = 1e-4) const;
  const LinComb& depth1() const { return depth1_; }

 private:
  LinComb depth1_;
};

double realize(const LinComb& e, const ComplexPoint& p);

struct NumericOptions {
  long samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
  double guard = 1e-4;
  long max_retries = 10000;
};

/// Evaluates each (k, n-k) component of w at random points: the product
/// form for k != n-k, the alternating two-point form for k = n-k. A point
/// fails when some component exceeds the tolerance. Verdict UNSUPPORTED
/// when a component has no realization.
Report wedge_numeric_check(const WedgeElement& w, const NumericOptions& options = {});

/// Realizes e at random points and checks that the values agree.
Report realize_constancy(const LinComb& e, const NumericOptions& options = {});

}  // namespace polylie::numerics
