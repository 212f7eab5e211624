#include <polylie/error.hpp>
#include <polylie/shuffle/shuffle.hpp>

#include <functional>

namespace polylie::shuffle {

using coalgebra::SeriesWedge;
using symbolic::Symbol;
using symbolic::TMap;
using symbolic::Wedge2;

namespace {

void require_admissible(const std::vector<Argument>& args) {
  if (auto why = symbolic::admissibility_violation(args)) {
    std::string tuple;
    for (const auto& a : args) tuple += (tuple.empty() ? "" : ",") + a.to_string();
    throw AdmissibilityError("shuffle term (" + tuple + "): " + *why);
  }
}

// One letter of a quasi-shuffle word: an entry of a, of b, or a contraction.
struct Letter {
  int a = -1;
  int b = -1;
};

void words(int i, int j, int na, int nb, std::vector<Letter>& cur, std::vector<std::vector<Letter>>& out) {
  if (i == na && j == nb) {
    out.push_back(cur);
    return;
  }
  if (i < na) {
    cur.push_back({i, -1});
    words(i + 1, j, na, nb, cur, out);
    cur.pop_back();
  }
  if (j < nb) {
    cur.push_back({-1, j});
    words(i, j + 1, na, nb, cur, out);
    cur.pop_back();
  }
  if (i < na && j < nb) {
    cur.push_back({i, j});
    words(i + 1, j + 1, na, nb, cur, out);
    cur.pop_back();
  }
}

TMap<Wedge2> difference(TMap<Wedge2> a, const TMap<Wedge2>& b) {
  symbolic::tmap_add(a, b, Rational(-1));
  return a;
}

}  // namespace

SeriesSum shuffle(const SeriesTerm& a, const SeriesTerm& b) {
  if (a.kind != SeriesTerm::Kind::Li || b.kind != SeriesTerm::Kind::Li) throw Error("shuffle applies to Li series terms");
  std::vector<std::vector<Letter>> all;
  std::vector<Letter> cur;
  words(0, 0, a.depth(), b.depth(), cur, all);
  SeriesSum out;
  for (const auto& word : all) {
    std::vector<Argument> args;
    std::vector<std::size_t> contractions;
    for (const auto& l : word) {
      if (l.a >= 0 && l.b >= 0) {
        contractions.push_back(args.size());
        args.push_back(a.args[static_cast<std::size_t>(l.a)] * b.args[static_cast<std::size_t>(l.b)]);
      } else if (l.a >= 0) {
        args.push_back(a.args[static_cast<std::size_t>(l.a)]);
      } else {
        args.push_back(b.args[static_cast<std::size_t>(l.b)]);
      }
    }
    require_admissible(args);
    std::size_t m = contractions.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::vector<TForm> slots;
      std::vector<TForm> denominators;
      int sign = 1;
      std::size_t c = 0;
      for (const auto& l : word) {
        if (l.a >= 0 && l.b >= 0) {
          const TForm& ta = a.slots[static_cast<std::size_t>(l.a)];
          const TForm& tb = b.slots[static_cast<std::size_t>(l.b)];
          denominators.push_back(ta - tb);
          bool take_b = (mask >> c) & 1;
          slots.push_back(take_b ? tb : ta);
          if (take_b) sign = -sign;
          ++c;
        } else if (l.a >= 0) {
          slots.push_back(a.slots[static_cast<std::size_t>(l.a)]);
        } else {
          slots.push_back(b.slots[static_cast<std::size_t>(l.b)]);
        }
      }
      SeriesTerm t = SeriesTerm::li(args, slots, a.scalar * b.scalar * sign);
      t.denominators = std::move(denominators);
      out.push_back(std::move(t));
    }
  }
  return out;
}

SeriesSum shuffle_1_1(const Argument& x1, const Argument& x2, const TForm& l1, const TForm& l2) {
  return shuffle(SeriesTerm::li({x1}, {l1}), SeriesTerm::li({x2}, {l2}));
}

SeriesSum shuffle_2_1(const Argument& x1, const Argument& x2, const Argument& x3, const TForm& l1, const TForm& l2,
                      const TForm& l3) {
  return shuffle(SeriesTerm::li({x1, x2}, {l1, l2}), SeriesTerm::li({x3}, {l3}));
}

SeriesWedgeSum shuffle_delta_rhs(int kind, const std::vector<Argument>& x) {
  auto t = [](int i) { return TForm::var(i - 1); };
  auto w = [](SeriesSum left, SeriesSum right, int sign = 1) {
    SeriesWedge out;
    out.scalar = sign;
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
  };
  auto li1 = [](const Argument& a, const TForm& l) { return SeriesTerm::li({a}, {l}); };
  SeriesWedgeSum out;
  if (kind == 11) {
    out.push_back(w(shuffle_1_1(x[0], x[1], t(1), t(2)), {SeriesTerm::log(x[0], t(1)), SeriesTerm::log(x[1], t(2))}));
    return out;
  }
  if (kind != 21) throw Error("shuffle kind must be 11 or 21");
  const Argument &x1 = x[0], &x2 = x[1], &x3 = x[2];
  SeriesSum logs = {SeriesTerm::log(x1, t(1)), SeriesTerm::log(x2, t(2)), SeriesTerm::log(x3, t(3))};
  out.push_back(w(shuffle_2_1(x1, x2, x3, t(1), t(2), t(3)), logs));
  out.push_back(w({li1(x1, t(1))}, shuffle_1_1(x2, x3, t(2), t(3)), -1));
  out.push_back(w({li1(x2, t(2))}, shuffle_1_1(x1, x3, t(1), t(3))));
  out.push_back(w(shuffle_1_1(x1 * x2, x3, t(1), t(3)), {li1(x2, t(2) - t(1))}));
  out.push_back(w(shuffle_1_1(x1 * x2, x3, t(2), t(3)), {li1(x1, t(1) - t(2)), SeriesTerm::log(x1)}, -1));
  out.push_back(w({li1(x1 * x2 * x3, t(1))}, shuffle_1_1(x2, x3, t(2) - t(1), t(3) - t(1))));
  out.push_back(w({li1(x1 * x2 * x3, t(2))}, shuffle_1_1(x1, x3, t(1) - t(2), t(3) - t(2)), -1));
  return out;
}

Report verify_shuffle_delta(int kind, int weight_bound, Variant variant) {
  Report r;
  r.name = std::string(variant == Variant::Prime ? "delta'" : "delta") + " of shuffle " + std::to_string(kind) +
           " weight<=" + std::to_string(weight_bound);
  int d = kind == 11 ? 2 : 3;
  std::vector<Argument> x;
  for (int i = 1; i <= d; ++i) x.push_back(Argument::atom("x" + std::to_string(i)));
  int D = weight_bound - d;
  if (D < 0) return r;
  SeriesSum s = kind == 11 ? shuffle_1_1(x[0], x[1], TForm::var(0), TForm::var(1))
                           : shuffle_2_1(x[0], x[1], x[2], TForm::var(0), TForm::var(1), TForm::var(2));
  auto lhs = coalgebra::delta(symbolic::expand(s, D), variant);
  auto rhs = coalgebra::expand(shuffle_delta_rhs(kind, x), D);
  auto diff = difference(lhs, rhs);
  std::size_t terms = 0;
  for (const auto& [k, p] : lhs) terms += p.terms().size();
  r.note("lhs_coefficients", std::to_string(terms));
  bool integral = true;
  for (const auto& [k, p] : lhs)
    for (const auto& [m, c] : p.terms()) integral = integral && c.get_den() == 1;
  r.note("integer_coefficients", integral ? "yes" : "no");
  if (!diff.empty()) {
    const auto& [w, p] = *diff.begin();
    r.fail("coefficient of " + symbolic::monomial_to_string(p.terms().begin()->first) + " at " + w.to_string() +
           " differs by " + fields::to_string(p.terms().begin()->second));
  }
  return r;
}

Report verify_generic_shuffle(int a, int b, int weight_bound) {
  Report r;
  r.name = "generic shuffle (" + std::to_string(a) + "," + std::to_string(b) + ") weight<=" + std::to_string(weight_bound);
  r.label = "CONJECTURAL";
  std::vector<Argument> x, y;
  std::vector<TForm> tx, ty;
  for (int i = 0; i < a; ++i) {
    x.push_back(Argument::atom("x" + std::to_string(i + 1)));
    tx.push_back(TForm::var(i));
  }
  for (int j = 0; j < b; ++j) {
    y.push_back(Argument::atom("y" + std::to_string(j + 1)));
    ty.push_back(TForm::var(a + j));
  }
  int D = weight_bound - a - b;
  if (D < 0) return r;
  SeriesTerm X = SeriesTerm::li(x, tx);
  SeriesTerm Y = SeriesTerm::li(y, ty);
  auto forward = symbolic::expand(shuffle(X, Y), D);
  auto backward = symbolic::expand(shuffle(Y, X), D);
  std::size_t terms = 0;
  for (const auto& [k, p] : forward) {
    symbolic::check_symbol(k);
    terms += p.terms().size();
  }
  r.note("coefficients", std::to_string(terms));
  if (forward != backward) r.fail("the product is not symmetric");
  return r;
}

}  // namespace polylie::shuffle
