#pragma once

#include <polylie/symbolic/lincomb.hpp>

#include <string_view>

namespace polylie::symbolic {

/// "[x1,x2;2,1]" or "[x;0]".
Symbol parse_symbol(std::string_view text);
/// "3/2*[x;2] - [x,y;1,1]"; "0" is the empty combination.
LinComb parse_lincomb(std::string_view text);

}  // namespace polylie::symbolic
