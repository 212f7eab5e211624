#pragma once

#include <polylie/homology/snf.hpp>

#include <string>
#include <vector>

namespace polylie::homology {

/// Free abelian group on `generators` modulo the rows of `relations`.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<long>> relations;

  Matrix matrix() const;
};

/// Generators [x]_2 for x in F_q minus {0, 1}; one row per ordered pair
/// (x, y) whose five-term arguments all avoid {0, 1}, with 1 - xy != 0.
/// Duplicate rows are dropped. Throws Error unless q is a prime power > 3.
Presentation build_b2_presentation(int q);

struct H1Row {
  int q = 0;
  long generators = 0;
  long relations = 0;
  SNFResult snf;
  /// |H^1| / (q + 1) when finite.
  std::optional<Rational> ratio;
  bool match_up_to_2_3 = false;
  bool exact_match = false;
  double seconds = 0;
};

/// Order of the presented weight-two group over F_q; the exterior square
/// of the cyclic group F_q^* vanishes, so every generator is a cycle.
H1Row h1_order(int q);

/// True when r is a product of powers of 2 and 3.
bool is_23_unit(const Rational& r);

std::string tsv_header();
std::string to_tsv(const H1Row& row);

}  // namespace polylie::homology
