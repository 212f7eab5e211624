#include <polylie/error.hpp>
#include <polylie/inversion/inv.hpp>
#include <polylie/symbolic/memo.hpp>

namespace polylie::inversion {

using symbolic::TMonomial;
using symbolic::TPoly;

namespace {

SeriesTerm with_prefactors(SeriesTerm t, const SeriesTerm& from) {
  t.scalar *= from.scalar;
  t.numerators.insert(t.numerators.end(), from.numerators.begin(), from.numerators.end());
  t.denominators.insert(t.denominators.end(), from.denominators.begin(), from.denominators.end());
  return t;
}

std::vector<TForm> shifted(const std::vector<TForm>& slots, std::size_t from, std::size_t to, const TForm& by) {
  std::vector<TForm> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(slots[i] - by);
  return out;
}

Rational sign(long e) { return Rational(fields::sign_power(e)); }

}  // namespace

SeriesSum inv(const SeriesTerm& x) {
  if (x.kind != SeriesTerm::Kind::Li) throw Error("inv applies to Li series terms");
  const auto& a = x.args;
  const auto& L = x.slots;
  std::size_t d = a.size();
  SeriesSum out;
  if (d == 1) {
    out.push_back(with_prefactors(SeriesTerm::li(a, L), x));
    out.push_back(with_prefactors(SeriesTerm::log(a[0]), x));
    return out;
  }
  Rational s = sign(static_cast<long>(d));
  std::vector<Argument> tail(a.begin() + 1, a.end());
  std::vector<Argument> head(a.begin(), a.end() - 1);
  std::vector<TForm> tail_slots(L.begin() + 1, L.end());
  std::vector<TForm> head_slots(L.begin(), L.end() - 1);
  out.push_back(with_prefactors(SeriesTerm::li(a, L, -s), x));
  out.push_back(with_prefactors(SeriesTerm::li(tail, tail_slots, s).over(L[0]), x));
  out.push_back(with_prefactors(SeriesTerm::li(tail, shifted(L, 1, d, L[0]), -s).over(L[0]), x));
  out.push_back(with_prefactors(SeriesTerm::inv(head, head_slots, Rational(-1)).over(L[d - 1]), x));
  out.push_back(with_prefactors(SeriesTerm::inv(head, shifted(L, 0, d - 1, L[d - 1]), Rational(1)).over(L[d - 1]), x));
  return out;
}

const TMap<Symbol>& inv_template(int d, int max_degree) {
  static symbolic::Memo<std::pair<int, int>, TMap<Symbol>> memo;
  return memo.get({d, max_degree}, [&] {
    SeriesTerm x = SeriesTerm::li(symbolic::placeholder_args(d), symbolic::standard_slots(d));
    return symbolic::expand_raw(inv(x), max_degree);
  });
}

TMap<Symbol> expand_inv(const std::vector<Argument>& args, const std::vector<TForm>& slots, int max_degree) {
  TMap<Symbol> out;
  if (max_degree < 0) return out;
  int d = static_cast<int>(args.size());
  std::map<symbolic::Atom, Argument> values;
  for (int i = 0; i < d; ++i) values[symbolic::placeholder(i + 1)] = args[static_cast<std::size_t>(i)];
  bool identity_slots = slots == symbolic::standard_slots(d);
  for (const auto& [key, poly] : inv_template(d, max_degree)) {
    Symbol s = key;
    for (auto& arg : s.args) arg = arg.substitute(values);
    symbolic::tmap_add(out, s, identity_slots ? poly : poly.substituted(slots, max_degree));
  }
  return out;
}

LinComb inv_coefficient(const std::vector<Argument>& args, const std::vector<int>& index) {
  std::vector<int> excess;
  int degree = 0;
  for (int n : index) {
    if (n < 1) throw Error("inv coefficient needs a positive index");
    excess.push_back(n - 1);
    degree += n - 1;
  }
  auto raw = expand_inv(args, symbolic::standard_slots(static_cast<int>(args.size())), degree);
  return symbolic::normalize(symbolic::coefficient(raw, symbolic::monomial_from(excess)));
}

SeriesTerm inverted(const SeriesTerm& x) {
  SeriesTerm out = x;
  std::size_t d = x.args.size();
  for (std::size_t i = 0; i < d; ++i) {
    out.args[i] = x.args[d - 1 - i].inverse();
    out.slots[i] = -x.slots[d - 1 - i];
  }
  return out;
}

LinComb infinity_reduce(const Symbol& s) {
  if (s.weight() <= 1) throw UndefinedSymbolError(s.to_string() + " with an infinite entry is not defined in weight 1");
  if (auto why = symbolic::admissibility_violation(s.args)) throw AdmissibilityError(s.to_string() + ": " + *why);
  std::size_t d = s.args.size();
  std::vector<Argument> args;
  std::vector<int> index;
  for (std::size_t i = 0; i < d; ++i) {
    args.push_back(s.args[d - 1 - i].inverse());
    index.push_back(s.index[d - 1 - i]);
  }
  LinComb out = inv_coefficient(args, index);
  out *= sign(static_cast<long>(d) + s.weight());
  return out;
}

TermClass classify(const Symbol& s) {
  if (s.is_log()) return TermClass::Regular;
  bool regular = true;
  bool inverted_all = true;
  for (const auto& a : s.args) {
    if (!a.is_group()) continue;
    if (!a.all_exponents_nonnegative()) regular = false;
    if (!a.all_exponents_nonpositive() || a.exponents().empty()) inverted_all = false;
  }
  if (regular) return TermClass::Regular;
  if (inverted_all) return TermClass::Inverted;
  throw ClassificationError(s.to_string() + " mixes inverted and regular entries");
}

LinComb INV(const Symbol& s) {
  if (classify(s) == TermClass::Regular) return LinComb(s);
  std::size_t k = s.args.size();
  std::vector<Argument> args;
  std::vector<int> index;
  for (std::size_t i = 0; i < k; ++i) {
    args.push_back(s.args[k - 1 - i].inverse());
    index.push_back(s.index[k - 1 - i]);
  }
  LinComb out = inv_coefficient(args, index);
  out *= sign(static_cast<long>(k) + s.weight());
  return out;
}

LinComb INV(const LinComb& e) {
  LinComb out;
  for (const auto& [s, c] : e) out.add(INV(s), c);
  return out;
}

WedgeElement INV(const WedgeElement& w) {
  WedgeElement out;
  for (const auto& [key, c] : w) out.add(symbolic::wedge(INV(key.first), INV(key.second)), c);
  return out;
}

TMap<Wedge2> INV(const TMap<Wedge2>& w) {
  TMap<Wedge2> out;
  for (const auto& [key, poly] : w) {
    WedgeElement image = symbolic::wedge(INV(key.first), INV(key.second));
    for (const auto& [k, c] : image) symbolic::tmap_add(out, k, poly, c);
  }
  return out;
}

LinComb depth1_inversion_normal_form(const LinComb& e) {
  LinComb out;
  for (const auto& [s, c] : e) {
    if (s.depth() == 1 && !s.is_log() && s.index[0] >= 2 && s.args[0].is_group() &&
        !s.args[0].exponents().empty() && s.args[0].all_exponents_nonpositive() && s.args[0].constant() == 1) {
      out.add(Symbol({s.args[0].inverse()}, s.index), c * sign(s.index[0] + 1));
    } else {
      out.add(s, c);
    }
  }
  return out;
}

}  // namespace polylie::inversion
