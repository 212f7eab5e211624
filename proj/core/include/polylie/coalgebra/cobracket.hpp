#pragma once

#include <polylie/symbolic/lincomb.hpp>
#include <polylie/symbolic/series.hpp>

#include <string>
#include <utility>
#include <vector>

namespace polylie::coalgebra {

using symbolic::LinComb;
using symbolic::SeriesSum;
using symbolic::SeriesTerm;
using symbolic::Symbol;
using symbolic::TForm;
using symbolic::TMap;
using symbolic::Wedge2;
using symbolic::Wedge3Element;
using symbolic::WedgeElement;

/// delta is the cobracket; Prime replaces each inverted right factor of
/// delta_4 by the corresponding inv series.
enum class Variant { Standard, Prime };

/// scalar * prod(numerators) / prod(denominators) * (left ^ right).
struct SeriesWedge {
  Rational scalar{1};
  std::vector<TForm> numerators;
  std::vector<TForm> denominators;
  SeriesSum left;
  SeriesSum right;

  std::string to_string() const;
};

using SeriesWedgeSum = std::vector<SeriesWedge>;

/// Ordered pair of unnormalized factors.
using RawWedge = std::pair<Symbol, Symbol>;

/// delta_1 .. delta_4 of a Li series term (prefactors of x are carried over).
SeriesWedgeSum delta_part(int part, const SeriesTerm& x, Variant variant = Variant::Standard);
/// Sum of the four parts; Inv terms go through their inv expansion, Log terms give 0.
SeriesWedgeSum delta_series(const SeriesTerm& x, Variant variant = Variant::Standard);
SeriesWedgeSum delta_series(const SeriesSum& s, Variant variant = Variant::Standard);

TMap<RawWedge> expand_raw(const SeriesWedgeSum& s, int max_degree);
/// Expansion with both factors normalized and wedged.
TMap<Wedge2> expand(const SeriesWedgeSum& s, int max_degree);

/// A single wedge factor in canonical generators: zero-argument symbols
/// vanish and symbols with infinite entries are rewritten as finite ones.
LinComb normalize_factor(const Symbol& s);
WedgeElement normalize_wedge(const RawWedge& w);

/// Zero in weight 1. Throws AdmissibilityError on inadmissible input.
WedgeElement delta(const Symbol& s, Variant variant = Variant::Standard);
WedgeElement delta(const LinComb& e, Variant variant = Variant::Standard);
/// Coefficientwise: sum over keys of delta(S) * P_S.
TMap<Wedge2> delta(const TMap<Symbol>& m, Variant variant = Variant::Standard);

/// (delta ^ id - id ^ delta) delta.
Wedge3Element delta_squared(const LinComb& e, Variant variant = Variant::Standard);
Wedge3Element delta_squared(const Symbol& s, Variant variant = Variant::Standard);

std::string to_string(const SeriesWedgeSum& s);
std::string to_string(const TMap<Wedge2>& m);

}  // namespace polylie::coalgebra
