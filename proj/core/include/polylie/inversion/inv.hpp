#pragma once

#include <polylie/symbolic/lincomb.hpp>
#include <polylie/symbolic/series.hpp>

#include <vector>

namespace polylie::inversion {

using symbolic::Argument;
using symbolic::LinComb;
using symbolic::SeriesSum;
using symbolic::SeriesTerm;
using symbolic::Symbol;
using symbolic::TForm;
using symbolic::TMap;
using symbolic::WedgeElement;
using symbolic::Wedge2;

/// One step of the inversion recursion for a Li term of depth d:
///   d = 1:  [x|L] + [x]_0
///   d > 1: -(-1)^d X + (-1)^d/L1 (A - B) - 1/Ld (inv C - inv D)
/// with A, B, C, D the shifted sub-series; inv C, inv D stay as Inv terms.
SeriesSum inv(const SeriesTerm& x);

/// inv[#1..#d | t1..td] expanded to t-degree max_degree (memoized, raw keys).
const TMap<Symbol>& inv_template(int d, int max_degree);

/// inv[args | slots] to t-degree max_degree, raw keys.
TMap<Symbol> expand_inv(const std::vector<Argument>& args, const std::vector<TForm>& slots, int max_degree);

/// inv[x_1..x_d]_{n_1..n_d}, normalized.
LinComb inv_coefficient(const std::vector<Argument>& args, const std::vector<int>& index);

/// X^{-1} = [x_d^-1..x_1^-1 | -L_d..-L_1] for a Li term X.
SeriesTerm inverted(const SeriesTerm& x);

/// Rewrites a symbol with infinite entries as finite symbols:
///   [x]_n = (-1)^d (-1)^{n_1+..+n_d} inv[x_d^-1..x_1^-1]_{n_d..n_1}.
/// Throws UndefinedSymbolError in weight 1 and AdmissibilityError for 0*inf.
LinComb infinity_reduce(const Symbol& s);

enum class TermClass { Regular, Inverted };

/// Regular: no atom occurs with a negative exponent. Inverted: every
/// argument is a product of inverted atoms. Otherwise ClassificationError.
TermClass classify(const Symbol& s);

/// Fixes regular terms and replaces an inverted term X^{-1} by inv(X).
LinComb INV(const Symbol& s);
LinComb INV(const LinComb& e);
WedgeElement INV(const WedgeElement& w);
TMap<Wedge2> INV(const TMap<Wedge2>& w);

/// Replaces [a^-1]_m (m >= 2, a a product of atoms) by (-1)^(m+1) [a]_m.
LinComb depth1_inversion_normal_form(const LinComb& e);

}  // namespace polylie::inversion
