#include <polylie/error.hpp>
#include <polylie/homology/snf.hpp>

#include <algorithm>
#include <utility>

namespace polylie::homology {

namespace {

struct Smith {
  Matrix& a;
  std::size_t rows;
  std::size_t cols;

  // Smallest nonzero |entry| in the block starting at (t, t).
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        BigInt v = abs(a[i][j]);
        if (!found || v < best) {
          best = v;
          pr = i;
          pc = j;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  }

  // Clears row t and column t outside the pivot; false if a remainder appeared.
  bool eliminate(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      BigInt q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      BigInt q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    return clean;
  }

  // Adds a row with an entry not divisible by the pivot; false if none.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
          return true;
        }
    return false;
  }

  std::vector<BigInt> run() {
    std::size_t n = std::min(rows, cols);
    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < n; ++t) {
      while (true) {
        std::size_t pr = 0, pc = 0;
        if (!find_pivot(t, pr, pc)) {
          diag.resize(n, 0);
          return diag;
        }
        std::swap(a[t], a[pr]);
        swap_cols(t, pc);
        if (!eliminate(t)) continue;
        if (fix_divisibility(t)) continue;
        break;
      }
      diag.push_back(abs(a[t][t]));
    }
    return diag;
  }
};

}  // namespace

std::string SNFResult::order_string() const { return order ? order->get_str() : "INFINITE"; }

SNFResult snf(Matrix m, long columns) {
  long cols = m.empty() ? std::max(columns, 0L) : static_cast<long>(m.front().size());
  if (columns >= 0 && cols != columns) throw Error("matrix width does not match the column count");
  for (const auto& row : m)
    if (static_cast<long>(row.size()) != cols) throw Error("ragged matrix");
  Smith smith{m, m.size(), static_cast<std::size_t>(cols)};
  SNFResult out;
  out.columns = cols;
  out.invariant_factors = smith.run();
  BigInt order = 1;
  for (const auto& d : out.invariant_factors) {
    if (d == 0) continue;
    ++out.rank;
    order *= d;
  }
  if (out.rank == cols) out.order = order;
  return out;
}

}  // namespace polylie::homology
