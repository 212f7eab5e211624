#pragma once

#include <polylie/coalgebra/cobracket.hpp>
#include <polylie/report.hpp>

namespace polylie::shuffle {

using coalgebra::SeriesWedgeSum;
using coalgebra::Variant;
using symbolic::Argument;
using symbolic::SeriesSum;
using symbolic::SeriesTerm;
using symbolic::TForm;

/// [x1|L1][x2|L2] = [x1,x2|L1,L2] + [x2,x1|L2,L1] + ([x1x2|L1] - [x1x2|L2])/(L1 - L2).
/// Throws AdmissibilityError naming the first inadmissible tuple.
SeriesSum shuffle_1_1(const Argument& x1, const Argument& x2, const TForm& l1, const TForm& l2);

/// [x1,x2|L1,L2][x3|L3]: three interleavings and two divided-difference
/// contraction pairs.
SeriesSum shuffle_2_1(const Argument& x1, const Argument& x2, const Argument& x3, const TForm& l1, const TForm& l2,
                      const TForm& l3);

/// Shuffle product of two Li series of arbitrary depth: all interleavings,
/// plus contractions x_i y_j carrying the divided difference
/// (F|slot t_i - F|slot s_j)/(t_i - s_j). Agrees with the two cases above;
/// that it vanishes in general is a conjecture.
SeriesSum shuffle(const SeriesTerm& a, const SeriesTerm& b);

/// The closed form of delta' of the (1,1) and (2,1) shuffles, written with
/// shuffle products of lower depth. kind is 11 or 21.
SeriesWedgeSum shuffle_delta_rhs(int kind, const std::vector<Argument>& x);

/// delta' (or delta) of the shuffle over formal atoms against its closed form,
/// coefficientwise up to weight_bound.
Report verify_shuffle_delta(int kind, int weight_bound, Variant variant = Variant::Prime);

/// The generic shuffle of [x1..xa] and [y1..yb] through weight_bound: every
/// divided difference cancels, every coefficient is admissible and the
/// product is symmetric. Labeled CONJECTURAL.
Report verify_generic_shuffle(int a, int b, int weight_bound);

}  // namespace polylie::shuffle
