#pragma once

#include <polylie/report.hpp>
#include <polylie/symbolic/lincomb.hpp>

#include <cstdint>
#include <string>

namespace polylie::relations {

enum class VanishingMode { ExactWedge, Specialize, Numeric };

std::string to_string(VanishingMode mode);
/// "exact-wedge", "specialize" or "numeric".
VanishingMode parse_vanishing_mode(const std::string& text);

struct VanishingOptions {
  long samples = 50;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
  long max_retries = 1000;
  /// Numerators and denominators of random rational points are bounded by this.
  int height = 9;
};

/// Checks that the cobracket of e vanishes.
///   exact-wedge: e has constant arguments and weight 2; delta(e) is
///     checked in the exterior square of Q^* by factorization.
///   specialize: weight 2; e is specialized at random rational points
///     and each specialization is checked as above.
///   numeric: delta(e) is realized by single-valued polylogarithms at
///     random complex points; for weight <= 3 the realization of e is
///     also checked for constancy.
/// Exact-wedge verdicts are labeled PROOF-AT-POINTS, the others EVIDENCE.
Report verify_vanishing(const symbolic::LinComb& e, VanishingMode mode, const VanishingOptions& options = {});

}  // namespace polylie::relations
