#pragma once

#include <polylie/symbolic/lincomb.hpp>
#include <polylie/symbolic/tpoly.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace polylie::symbolic {

/// Coefficients of a generating series: key -> polynomial in t.
template <class Key>
using TMap = std::map<Key, TPoly>;

template <class Key>
void tmap_add(TMap<Key>& into, const Key& k, const TPoly& p, const Rational& scale = Rational(1)) {
  if (p.is_zero() || scale == 0) return;
  auto it = into.find(k);
  if (it == into.end()) {
    TPoly q = p;
    q *= scale;
    into.emplace(k, std::move(q));
    return;
  }
  if (scale == 1) {
    it->second += p;
  } else {
    TPoly q = p;
    q *= scale;
    it->second += q;
  }
  if (it->second.is_zero()) into.erase(it);
}

template <class Key>
void tmap_add(TMap<Key>& into, const TMap<Key>& from, const Rational& scale = Rational(1)) {
  for (const auto& [k, p] : from) tmap_add(into, k, p, scale);
}

/// The linear combination multiplying t^m.
template <class Key>
LinearCombination<Key> coefficient(const TMap<Key>& m, TMonomial mono) {
  LinearCombination<Key> out;
  for (const auto& [k, p] : m) out.add(k, p.coefficient(mono));
  return out;
}

/// Regroups by monomial: t^m -> linear combination.
template <class Key>
std::map<TMonomial, LinearCombination<Key>> by_monomial(const TMap<Key>& m) {
  std::map<TMonomial, LinearCombination<Key>> out;
  for (const auto& [k, p] : m)
    for (const auto& [mono, c] : p.terms()) out[mono].add(k, c);
  return out;
}

template <class Key>
bool tmap_equal(const TMap<Key>& a, const TMap<Key>& b) {
  return a == b;
}

/// One factor of a generating series:
///   scalar * prod(numerators) / prod(denominators) * F
/// where F is [args | slots] (Li), inv[args | slots] (Inv), or the
/// constant series [args_0]_0 (Log).
struct SeriesTerm {
  enum class Kind { Li, Inv, Log };
  Kind kind = Kind::Li;
  Rational scalar{1};
  std::vector<Argument> args;
  std::vector<TForm> slots;
  std::vector<TForm> numerators;
  std::vector<TForm> denominators;

  static SeriesTerm li(std::vector<Argument> args, std::vector<TForm> slots, const Rational& scalar = Rational(1));
  static SeriesTerm inv(std::vector<Argument> args, std::vector<TForm> slots, const Rational& scalar = Rational(1));
  /// The constant series [x]_0, or multiplier * [x]_0.
  static SeriesTerm log(const Argument& x, const Rational& scalar = Rational(1));
  static SeriesTerm log(const Argument& x, const TForm& multiplier, const Rational& scalar = Rational(1));

  int depth() const { return static_cast<int>(args.size()); }
  /// Weight minus t-degree of every coefficient.
  int homogeneity() const;
  SeriesTerm scaled(const Rational& c) const;
  SeriesTerm over(const TForm& denominator) const;
  /// Applies t_{i+1} -> images[i] to slots and prefactors.
  SeriesTerm with_slots_substituted(const std::vector<TForm>& images) const;
  /// Applies atom substitution to the arguments.
  SeriesTerm with_args_substituted(const std::map<Atom, Argument>& values) const;
  std::string to_string() const;
};

using SeriesSum = std::vector<SeriesTerm>;

std::string to_string(const SeriesSum& s);
SeriesSum scaled(const SeriesSum& s, const Rational& c);
SeriesSum operator+(SeriesSum a, const SeriesSum& b);

/// Slots t1..td.
std::vector<TForm> standard_slots(int d);
/// Placeholder atoms "#1".."#d" used by memoized templates.
std::vector<Argument> placeholder_args(int d);
Atom placeholder(int i);

/// One summand for combine_series: scalar * prod(numerators) /
/// prod(denominators) * (series produced by `body` to a degree bound).
template <class Key>
struct SeriesPiece {
  Rational scalar{1};
  std::vector<TForm> numerators;
  std::vector<TForm> denominators;
  std::function<TMap<Key>(int)> body;
};

/// Sums the pieces over a common denominator, divides exactly and returns
/// all coefficients of t-degree <= max_degree. Throws ExpansionError when
/// a divided difference does not cancel.
template <class Key>
TMap<Key> combine_series(const std::vector<SeriesPiece<Key>>& pieces, int max_degree);

/// All coefficients of total t-degree <= max_degree, with symbols
/// normalized (zero-argument symbols dropped, logarithms split).
TMap<Symbol> expand(const SeriesSum& s, int max_degree);
/// As expand, but keys are left exactly as generated.
TMap<Symbol> expand_raw(const SeriesSum& s, int max_degree);
TMap<Symbol> expand(const SeriesTerm& s, int max_degree);
/// Coefficients of weight <= weight_bound of a single term.
TMap<Symbol> expand_to_weight(const SeriesTerm& s, int weight_bound);

/// Expansion of the bare factor (ignoring scalar and prefactors), raw keys.
TMap<Symbol> expand_factor(const SeriesTerm& s, int max_degree);

/// Applies normalize_symbol to every key.
TMap<Symbol> normalize(const TMap<Symbol>& m);

/// Expands [args | slots] (a Li factor) to t-degree max_degree.
TMap<Symbol> expand_li(const std::vector<Argument>& args, const std::vector<TForm>& slots, int max_degree);

std::string to_string(const TMap<Symbol>& m);

}  // namespace polylie::symbolic

#include <polylie/symbolic/series_impl.hpp>
