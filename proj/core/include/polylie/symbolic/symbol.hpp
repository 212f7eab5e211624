#pragma once

#include <polylie/symbolic/argument.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polylie::symbolic {

/// [x1,...,xd]_{n1,...,nd} with all n_i >= 1, or the weight-one
/// logarithm [x]_0 (depth 1, index {0}).
struct Symbol {
  std::vector<Argument> args;
  std::vector<int> index;

  Symbol() = default;
  Symbol(std::vector<Argument> a, std::vector<int> n);
  static Symbol log(const Argument& x) { return Symbol({x}, {0}); }

  bool is_log() const { return index.size() == 1 && index[0] == 0; }
  int weight() const;
  int depth() const { return static_cast<int>(args.size()); }
  bool has_zero() const;
  bool has_infinity() const;

  /// "[x,y;1,1]" or "[x;0]".
  std::string to_string() const;

  friend bool operator==(const Symbol& a, const Symbol& b) { return a.index == b.index && a.args == b.args; }
  friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
  /// Canonical order: weight, depth, index, then arguments.
  friend bool operator<(const Symbol& a, const Symbol& b);
};

/// Describes the first consecutive product x_i...x_j that is undefined or
/// equal to 1, or nullopt when the tuple is admissible.
std::optional<std::string> admissibility_violation(const std::vector<Argument>& args);
bool admissible(const std::vector<Argument>& args);

/// Throws AdmissibilityError unless the symbol is well formed: positive
/// index, admissible tuple, and the weight-one restrictions on 0, 1, inf.
void check_symbol(const Symbol& s);

}  // namespace polylie::symbolic
