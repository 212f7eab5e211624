#pragma once

#include <polylie/symbolic/lincomb.hpp>
#include <polylie/symbolic/parse.hpp>

#include <string>

namespace test {

using polylie::Rational;
using polylie::symbolic::Argument;
using polylie::symbolic::LinComb;
using polylie::symbolic::Symbol;
using polylie::symbolic::WedgeElement;

inline Argument arg(const std::string& s) { return Argument::parse(s); }
inline Symbol sym(const std::string& s) { return polylie::symbolic::parse_symbol(s); }
inline LinComb lc(const std::string& s) { return polylie::symbolic::parse_lincomb(s); }

/// Sum of c * (a ^ b) over "a ^ b" pairs given as symbol strings.
inline WedgeElement wedges(std::initializer_list<std::tuple<long, const char*, const char*>> terms) {
  WedgeElement out;
  for (const auto& [c, a, b] : terms) out.add(polylie::symbolic::wedge(lc(a), lc(b)), Rational(c));
  return out;
}

}  // namespace test
