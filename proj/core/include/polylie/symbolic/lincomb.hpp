#pragma once

#include <polylie/fields/rational.hpp>
#include <polylie/symbolic/symbol.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace polylie::symbolic {

/// Finite rational linear combination of keys; zero coefficients are never stored.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Key& k, const Rational& c = Rational(1)) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add(const LinearCombination& o, const Rational& scale = Rational(1)) {
    if (scale == 0) return;
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  LinearCombination& operator+=(const LinearCombination& o) {
    add(o);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add(o, Rational(-1));
    return *this;
  }
  LinearCombination& operator*=(const Rational& c) {
    if (c == 0) terms_.clear();
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

/// a ^ b stored with a > b in the canonical symbol order.
struct Wedge2 {
  Symbol first;
  Symbol second;
  friend bool operator<(const Wedge2& a, const Wedge2& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
  friend bool operator==(const Wedge2& a, const Wedge2& b) { return a.first == b.first && a.second == b.second; }
  int weight() const { return first.weight() + second.weight(); }
  std::string to_string() const { return first.to_string() + " ^ " + second.to_string(); }
};

/// a ^ b ^ c stored in strictly decreasing canonical order.
struct Wedge3 {
  std::array<Symbol, 3> parts;
  friend bool operator<(const Wedge3& a, const Wedge3& b) { return a.parts < b.parts; }
  friend bool operator==(const Wedge3& a, const Wedge3& b) { return a.parts == b.parts; }
  int weight() const { return parts[0].weight() + parts[1].weight() + parts[2].weight(); }
  std::string to_string() const {
    return parts[0].to_string() + " ^ " + parts[1].to_string() + " ^ " + parts[2].to_string();
  }
};

using LinComb = LinearCombination<Symbol>;
using WedgeElement = LinearCombination<Wedge2>;
using Wedge3Element = LinearCombination<Wedge3>;

/// Canonical key and sign for a ^ b; nullopt when a == b.
std::optional<std::pair<Wedge2, int>> make_wedge(const Symbol& a, const Symbol& b);
std::optional<std::pair<Wedge3, int>> make_wedge(const Symbol& a, const Symbol& b, const Symbol& c);

/// Bilinear extensions.
WedgeElement wedge(const LinComb& a, const LinComb& b);
Wedge3Element wedge(const WedgeElement& ab, const LinComb& c);
Wedge3Element wedge(const LinComb& a, const WedgeElement& bc);

/// Rewrites a raw symbol in canonical generators: symbols with a zero
/// argument vanish, logarithms split additively over atoms and the primes
/// of the constant (signs are torsion and dropped). Throws
/// UndefinedSymbolError for [0]_0 or [inf]_0.
LinComb normalize_symbol(const Symbol& s);
LinComb normalize(const LinComb& e);

std::string key_to_string(const Symbol& s);
std::string key_to_string(const Wedge2& w);
std::string key_to_string(const Wedge3& w);

/// "3/2*[x;2] - [x,y;1,1]", or "0".
template <class Key>
std::string to_string(const LinearCombination<Key>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : e) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += fields::to_string(mag) + "*";
    out += key_to_string(k);
  }
  return out;
}

}  // namespace polylie::symbolic
