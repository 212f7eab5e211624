#pragma once

#include <polylie/symbolic/lincomb.hpp>

#include <string_view>

namespace polylie::relations {

using symbolic::LinComb;
using symbolic::Symbol;

/// Rewrites every symbol of weight <= 3 into depth one using the
/// depth_reduction_11, weight3_21, sym_12 and weight3_111 schemata.
/// Throws UnsupportedError for depth >= 2 above weight 3 and
/// AdmissibilityError when an intermediate argument is 0, 1 or inf.
LinComb reduce_to_depth1(const LinComb& e);
LinComb reduce_to_depth1(const Symbol& s);

/// A symbol {x}_n or {x,y}_{n-1,1} of the other presentation.
struct GRSymbol {
  std::vector<symbolic::Argument> args;
  std::vector<int> index;
  std::string to_string() const;
};

/// "{x;3}" or "{x,y;2,1}".
GRSymbol parse_gr_symbol(std::string_view text);

/// {x}_n -> [x]_n; {x,y}_{2,1} -> -[x/y,y]_{2,1} - [x]_3 - [y]_3;
/// {x,y}_{3,1} -> -[x/y,y]_{3,1} - [x]_4 + [y]_4.
LinComb gr_translate(const GRSymbol& s);

}  // namespace polylie::relations
