#include <polylie/coalgebra/cobracket.hpp>
#include <polylie/inversion/inv.hpp>
#include <polylie/inversion/verify.hpp>

#include <sstream>

namespace polylie::inversion {

using coalgebra::SeriesWedge;
using coalgebra::SeriesWedgeSum;
using symbolic::TMonomial;
using symbolic::TPoly;

namespace {

Rational sign(long e) { return Rational(fields::sign_power(e)); }

std::vector<Argument> atoms(int d) {
  std::vector<Argument> out;
  for (int i = 1; i <= d; ++i) out.push_back(Argument::atom("x" + std::to_string(i)));
  return out;
}

TForm t(int i) { return i == 0 ? TForm() : TForm::var(i - 1); }

// [x_r..x_s | t_r - t_u, ..., t_s - t_u] (1-based, u = 0 for no shift).
SeriesTerm Y(const std::vector<Argument>& x, int r, int s, int u = 0) {
  std::vector<Argument> a;
  std::vector<TForm> slots;
  for (int i = r; i <= s; ++i) {
    a.push_back(x[static_cast<std::size_t>(i - 1)]);
    slots.push_back(t(i) - t(u));
  }
  return SeriesTerm::li(a, slots);
}

Argument product(const std::vector<Argument>& x, int p, int q) {
  Argument out;
  for (int i = p; i <= q; ++i) out = out * x[static_cast<std::size_t>(i - 1)];
  return out;
}

// x_1..x_d with x_p..x_q contracted; slots t_1..t_p, t_{q+1}..t_d (Y) or
// t_1..t_{p-1}, t_q..t_d (Z).
SeriesTerm contracted(const std::vector<Argument>& x, int p, int q, bool z) {
  int d = static_cast<int>(x.size());
  std::vector<Argument> a;
  std::vector<TForm> slots;
  for (int i = 1; i < p; ++i) {
    a.push_back(x[static_cast<std::size_t>(i - 1)]);
    slots.push_back(t(i));
  }
  a.push_back(product(x, p, q));
  slots.push_back(z ? t(q) : t(p));
  for (int i = q + 1; i <= d; ++i) {
    a.push_back(x[static_cast<std::size_t>(i - 1)]);
    slots.push_back(t(i));
  }
  return SeriesTerm::li(a, slots);
}

SeriesWedge wedge_of(SeriesSum left, SeriesSum right, const Rational& c = Rational(1)) {
  SeriesWedge w;
  w.scalar = c;
  w.left = std::move(left);
  w.right = std::move(right);
  return w;
}

TMap<Wedge2> difference(TMap<Wedge2> a, const TMap<Wedge2>& b) {
  symbolic::tmap_add(a, b, Rational(-1));
  return a;
}

std::string first_entry(const TMap<Wedge2>& m) {
  if (m.empty()) return "";
  const auto& [w, p] = *m.begin();
  const auto& [mono, c] = *p.terms().begin();
  return "coefficient of " + symbolic::monomial_to_string(mono) + " at " + w.to_string() + " differs by " + fields::to_string(c);
}

SeriesSum li_sum(std::initializer_list<std::pair<SeriesTerm, Rational>> terms) {
  SeriesSum out;
  for (const auto& [s, c] : terms) out.push_back(s.scaled(c));
  return out;
}

}  // namespace

Report verify_inversion_claim(int d, int weight_bound) {
  Report r;
  r.name = "inversion claim d=" + std::to_string(d) + " weight<=" + std::to_string(weight_bound);
  int D = weight_bound - d;
  if (D < 0) {
    r.detail = "no coefficients in range";
    return r;
  }
  auto x = atoms(d);
  SeriesTerm X = Y(x, 1, d);
  Rational sd = sign(d);
  SeriesSum lhs_series = {inverted(X), X.scaled(sd)};
  auto lhs = INV(coalgebra::delta(symbolic::expand(lhs_series, D)));

  SeriesSum rhs_series;
  if (d >= 2) {
    rhs_series.push_back(Y(x, 2, d).scaled(sd).over(t(1)));
    rhs_series.push_back(Y(x, 2, d, 1).scaled(-sd).over(t(1)));
    rhs_series.push_back(inverted(Y(x, 1, d - 1)).scaled(Rational(-1)).over(t(d)));
    rhs_series.push_back(inverted(Y(x, 1, d - 1, d)).over(t(d)));
  }
  auto rhs = INV(coalgebra::delta(symbolic::expand(rhs_series, D)));
  auto diff = difference(lhs, rhs);
  std::size_t coefficients = 0;
  for (const auto& [w, p] : lhs) coefficients += p.terms().size();
  r.note("lhs_coefficients", std::to_string(coefficients));
  if (!diff.empty()) r.fail(first_entry(diff));
  return r;
}

Report verify_inversion_families(int d, int weight_bound) {
  Report r;
  r.name = "inversion term families d=" + std::to_string(d) + " weight<=" + std::to_string(weight_bound);
  int D = weight_bound - d;
  auto x = atoms(d);
  SeriesTerm X = Y(x, 1, d);
  SeriesTerm Xi = inverted(X);
  Rational sd = sign(d);

  std::vector<SeriesWedgeSum> families(5);
  SeriesSum logs;
  for (int p = 1; p <= d; ++p) logs.push_back(SeriesTerm::log(x[static_cast<std::size_t>(p - 1)], t(p)));
  families[0].push_back(wedge_of(li_sum({{X, 1}, {Xi, sd}}), logs));
  for (int p = 2; p <= d; ++p) {
    families[1].push_back(wedge_of(li_sum({{Y(x, p, d), 1}, {inverted(Y(x, p, d)), sign(d - p + 1)}}),
                                   {inverted(Y(x, 1, p - 1))}, sign(p)));
    families[2].push_back(wedge_of({Y(x, p, d)}, li_sum({{Y(x, 1, p - 1), 1}, {inverted(Y(x, 1, p - 1)), sign(p - 1)}})));
  }
  for (int p = 1; p <= d; ++p)
    for (int q = p + 1; q <= d; ++q) {
      SeriesTerm Yc = contracted(x, p, q, false);
      SeriesTerm Zc = contracted(x, p, q, true);
      families[3].push_back(wedge_of(li_sum({{Yc, 1}, {inverted(Yc), sign(d - q + p)}}), {Y(x, p + 1, q, p)}));
      families[4].push_back(wedge_of(li_sum({{Zc, 1}, {inverted(Zc), sign(d - q + p)}}), {inverted(Y(x, p, q - 1, q))}, sign(q - p)));
    }

  auto part = [&](int i, const SeriesTerm& s, const Rational& c) {
    auto w = coalgebra::delta_part(i, s);
    for (auto& e : w) e.scalar *= c;
    return w;
  };
  auto join = [](SeriesWedgeSum a, const SeriesWedgeSum& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  // delta(X) + (-1)^d delta(X^-1), collected by the part producing each family.
  std::vector<SeriesWedgeSum> parts = {
      join(part(1, X, 1), part(1, Xi, sd)),
      {},
      join(part(2, X, 1), part(2, Xi, sd)),
      join(part(3, X, 1), part(4, Xi, sd)),
      join(part(4, X, 1), part(3, Xi, sd)),
  };
  const char* names[] = {"family 1", "families 2+3", "families 2+3", "family 4", "family 5"};
  for (int i : {0, 2, 3, 4}) {
    SeriesWedgeSum fam = families[static_cast<std::size_t>(i)];
    if (i == 2) fam = join(families[1], families[2]);
    auto diff = difference(coalgebra::expand(fam, D), coalgebra::expand(parts[static_cast<std::size_t>(i)], D));
    if (!diff.empty()) r.fail(std::string(names[i]) + ": " + first_entry(diff));
  }

  SeriesWedgeSum all;
  for (const auto& f : families) all = join(all, f);
  auto total = coalgebra::expand(all, D);
  auto dX = coalgebra::expand(coalgebra::delta_series(X), D);
  auto dXi = coalgebra::expand(coalgebra::delta_series(Xi), D);
  TMap<Wedge2> plus_x = dX;
  symbolic::tmap_add(plus_x, dXi, sd);
  TMap<Wedge2> plus_xi = dXi;
  symbolic::tmap_add(plus_xi, dX, sd);
  bool matches_x = difference(total, plus_x).empty();
  bool matches_xi = difference(total, plus_xi).empty();
  r.note("families_equal_deltaX_plus_sign_deltaXinv", matches_x ? "yes" : "no");
  r.note("families_equal_deltaXinv_plus_sign_deltaX", matches_xi ? "yes" : "no");
  if (!matches_x) r.fail("families do not sum to delta(X) + (-1)^d delta(X^-1)");
  return r;
}

Report verify_inversion_depth2(int weight_bound) {
  Report r;
  r.name = "depth-two inversion identity weight<=" + std::to_string(weight_bound);
  Argument x1 = Argument::atom("x1");
  Argument x2 = Argument::atom("x2");
  long checked = 0;
  for (int n = 2; n <= weight_bound; ++n)
    for (int n1 = 1; n1 < n; ++n1) {
      int n2 = n - n1;
      LinComb T(Symbol({x2.inverse(), x1.inverse()}, {n2, n1}), sign(n));
      T -= inv_coefficient({x1, x2}, {n1, n2});
      LinComb E(Symbol({x1, x2}, {n1, n2}));
      E.add(Symbol({x2.inverse(), x1.inverse()}, {n2, n1}), sign(n));
      E.add(Symbol({x2}, {n}), sign(n1) * fields::binomial(n - 1, n2 - 1));
      E.add(Symbol({x1.inverse()}, {n}), sign(n1) * fields::binomial(n - 1, n1 - 1));
      LinComb diff = depth1_inversion_normal_form(T) - depth1_inversion_normal_form(E);
      ++checked;
      if (!diff.is_zero()) {
        std::ostringstream os;
        os << "(n1,n2)=(" << n1 << "," << n2 << "): difference " << symbolic::to_string(diff);
        r.fail(os.str());
      }
    }
  r.points = checked;
  return r;
}

LinComb InfinityClosedForm::left(int n1, int n2) {
  return LinComb(Symbol({Argument::atom("x1")}, {n1 + n2}), sign(n2) * fields::binomial(n1 + n2 - 1, n1 - 1));
}
LinComb InfinityClosedForm::right(int n1, int n2) {
  return LinComb(Symbol({Argument::atom("x2")}, {n1 + n2}), -sign(n1) * fields::binomial(n1 + n2 - 1, n2 - 1));
}
LinComb InfinityClosedForm::left_shifted(int n1, int n2) {
  return LinComb(Symbol({Argument::atom("x1")}, {n1 + n2}), sign(n2) * fields::binomial(n1 + n2, n1 - 1));
}
LinComb InfinityClosedForm::right_shifted(int n1, int n2) {
  return LinComb(Symbol({Argument::atom("x2")}, {n1 + n2}), -sign(n1) * fields::binomial(n1 + n2, n2 - 1));
}

Report verify_infinity_closed_forms(int weight_bound) {
  Report r;
  r.name = "infinity closed forms weight<=" + std::to_string(weight_bound);
  Argument x1 = Argument::atom("x1");
  Argument x2 = Argument::atom("x2");
  Argument inf = Argument::infinity();
  bool shifted_ok = true;
  long checked = 0;
  for (int n = 2; n <= weight_bound; ++n)
    for (int n1 = 1; n1 < n; ++n1) {
      int n2 = n - n1;
      LinComb a = depth1_inversion_normal_form(infinity_reduce(Symbol({x1, inf}, {n1, n2})));
      LinComb b = depth1_inversion_normal_form(infinity_reduce(Symbol({inf, x2}, {n1, n2})));
      checked += 2;
      std::string at = "(n1,n2)=(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
      if (a != InfinityClosedForm::left(n1, n2)) r.fail("[x1,inf]" + at + " = " + symbolic::to_string(a));
      if (b != InfinityClosedForm::right(n1, n2)) r.fail("[inf,x2]" + at + " = " + symbolic::to_string(b));
      if (a != InfinityClosedForm::left_shifted(n1, n2) || b != InfinityClosedForm::right_shifted(n1, n2)) shifted_ok = false;
    }
  r.points = checked;
  r.note("derived_binomial", "C(n1+n2-1, .)");
  r.note("display_with_C(n1+n2, .)_matches", shifted_ok ? "yes" : "no");
  return r;
}

}  // namespace polylie::inversion
