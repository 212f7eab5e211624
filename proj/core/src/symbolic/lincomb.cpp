#include <polylie/error.hpp>
#include <polylie/fields/factorization.hpp>
#include <polylie/symbolic/lincomb.hpp>

#include <algorithm>

namespace polylie::symbolic {

std::optional<std::pair<Wedge2, int>> make_wedge(const Symbol& a, const Symbol& b) {
  if (a == b) return std::nullopt;
  if (b < a) return std::make_pair(Wedge2{a, b}, 1);
  return std::make_pair(Wedge2{b, a}, -1);
}

std::optional<std::pair<Wedge3, int>> make_wedge(const Symbol& a, const Symbol& b, const Symbol& c) {
  if (a == b || b == c || a == c) return std::nullopt;
  std::array<Symbol, 3> parts{a, b, c};
  int sign = 1;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i + 1 < 3; ++i) {
      if (parts[i] < parts[i + 1]) {
        std::swap(parts[i], parts[i + 1]);
        sign = -sign;
      }
    }
  }
  return std::make_pair(Wedge3{parts}, sign);
}

WedgeElement wedge(const LinComb& a, const LinComb& b) {
  WedgeElement out;
  for (const auto& [sa, ca] : a)
    for (const auto& [sb, cb] : b)
      if (auto w = make_wedge(sa, sb)) out.add(w->first, ca * cb * w->second);
  return out;
}

Wedge3Element wedge(const WedgeElement& ab, const LinComb& c) {
  Wedge3Element out;
  for (const auto& [w, cw] : ab)
    for (const auto& [s, cs] : c)
      if (auto k = make_wedge(w.first, w.second, s)) out.add(k->first, cw * cs * k->second);
  return out;
}

Wedge3Element wedge(const LinComb& a, const WedgeElement& bc) {
  Wedge3Element out;
  for (const auto& [s, cs] : a)
    for (const auto& [w, cw] : bc)
      if (auto k = make_wedge(s, w.first, w.second)) out.add(k->first, cw * cs * k->second);
  return out;
}

LinComb normalize_symbol(const Symbol& s) {
  LinComb out;
  if (s.is_log()) {
    const Argument& x = s.args[0];
    if (x.is_zero() || x.is_infinity()) throw UndefinedSymbolError("[" + x.to_string() + ";0] is not defined");
    for (const auto& [atom, e] : x.exponents()) out.add(Symbol::log(Argument::atom(atom)), Rational(e));
    if (abs(x.constant()) != 1) {
      for (const auto& [p, e] : fields::factor(x.constant()).primes)
        out.add(Symbol::log(Argument::constant(Rational(p))), Rational(e));
    }
    return out;
  }
  if (s.has_zero()) {
    if (s.has_infinity()) throw UndefinedSymbolError(s.to_string() + " involves both 0 and inf");
    return out;
  }
  out.add(s, Rational(1));
  return out;
}

LinComb normalize(const LinComb& e) {
  LinComb out;
  for (const auto& [s, c] : e) out.add(normalize_symbol(s), c);
  return out;
}

std::string key_to_string(const Symbol& s) { return s.to_string(); }
std::string key_to_string(const Wedge2& w) { return w.to_string(); }
std::string key_to_string(const Wedge3& w) { return w.to_string(); }

}  // namespace polylie::symbolic
