#pragma once

#include <polylie/fields/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polylie::homology {

using Matrix = std::vector<std::vector<BigInt>>;

struct SNFResult {
  /// Diagonal of the Smith form, min(rows, columns) entries, each dividing the next.
  std::vector<BigInt> invariant_factors;
  long rank = 0;
  long columns = 0;
  /// Order of the cokernel Z^columns / rows; empty when it is infinite.
  std::optional<BigInt> order;

  bool infinite() const { return !order; }
  std::string order_string() const;
};

/// Smith normal form over Z. `columns` is needed when the matrix has no rows.
SNFResult snf(Matrix m, long columns = -1);

}  // namespace polylie::homology
