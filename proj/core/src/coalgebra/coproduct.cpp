#include <polylie/coalgebra/coproduct.hpp>
#include <polylie/error.hpp>
#include <polylie/inversion/inv.hpp>
#include <polylie/symbolic/memo.hpp>

#include <algorithm>
#include <functional>

namespace polylie::coalgebra {

using symbolic::Argument;
using symbolic::TMonomial;
using symbolic::TPoly;

namespace {

using ProductSeries = TMap<Product>;
using ProductComb = symbolic::LinearCombination<Product>;

void extend(std::vector<IndexSequence>& out, IndexSequence& cur, int d) {
  int j = cur.j.back();
  for (int next = j + 1; next <= d + 1; ++next) {
    cur.i.push_back(next);
    if (next == d + 1) {
      out.push_back(cur);
    } else {
      for (int jn = next; jn <= d; ++jn) {
        cur.j.push_back(jn);
        extend(out, cur, d);
        cur.j.pop_back();
      }
    }
    cur.i.pop_back();
  }
}

ProductSeries times(const ProductSeries& a, const ProductSeries& b, int max_degree) {
  ProductSeries out;
  for (const auto& [ka, pa] : a)
    for (const auto& [kb, pb] : b) symbolic::tmap_add(out, multiply(ka, kb), TPoly::multiply(pa, pb, max_degree));
  return out;
}

ProductSeries singletons(const TMap<Symbol>& m) {
  ProductSeries out;
  for (const auto& [s, p] : m) out.emplace(Product{s}, p);
  return out;
}

ProductSeries unit() { return {{Product{}, TPoly(Rational(1))}}; }

// exp(slot * log(base)) = sum_n slot^n / n! [base]_0^n.
ProductSeries exponential(const Argument& base, const TForm& slot, int max_degree) {
  ProductSeries out;
  auto powers = symbolic::form_powers(slot, max_degree);
  Product logs;
  Rational factorial(1);
  for (int n = 0; n <= max_degree; ++n) {
    if (n > 0) {
      factorial *= n;
      logs.push_back(Symbol::log(base));
    }
    TPoly p = powers[static_cast<std::size_t>(n)];
    p *= 1 / factorial;
    symbolic::tmap_add(out, logs, p);
  }
  return out;
}

TMap<Tensor2> expand_term(const CoproductTerm& term, int max_degree) {
  ProductSeries left = term.left.args.empty() ? unit() : singletons(symbolic::expand_li(term.left.args, term.left.slots, max_degree));
  ProductSeries right = unit();
  for (const auto& [base, slot] : term.exponentials) right = times(right, exponential(base, slot, max_degree), max_degree);
  for (const auto& r : term.right) right = times(right, singletons(symbolic::expand_li(r.args, r.slots, max_degree)), max_degree);
  TMap<Tensor2> out;
  for (const auto& [kl, pl] : left)
    for (const auto& [kr, pr] : right)
      symbolic::tmap_add(out, Tensor2{kl, kr}, TPoly::multiply(pl, pr, max_degree), Rational(term.sign));
  return out;
}

using Template = std::map<TMonomial, symbolic::LinearCombination<Tensor2>>;

const Template& coproduct_template(int d, int degree) {
  static symbolic::Memo<std::pair<int, int>, Template> memo;
  return memo.get({d, degree}, [&] {
    SeriesTerm x = SeriesTerm::li(symbolic::placeholder_args(d), symbolic::standard_slots(d));
    TMap<Tensor2> all;
    for (const auto& term : coproduct_terms(x)) symbolic::tmap_add(all, expand_term(term, degree));
    Template out;
    for (auto& [mono, lc] : symbolic::by_monomial(all))
      if (symbolic::degree(mono) == degree) out.emplace(mono, std::move(lc));
    return out;
  });
}

ProductComb normalize_product(const Product& raw) {
  ProductComb out(Product{});
  for (const auto& f : raw) {
    ProductComb next;
    for (const auto& [key, c] : out)
      for (const auto& [g, cg] : normalize_factor(f)) next.add(multiply(key, Product{g}), c * cg);
    out = std::move(next);
  }
  return out;
}

CoproductElement tensor(const ProductComb& a, const ProductComb& b) {
  CoproductElement out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add(Tensor2{ka, kb}, ca * cb);
  return out;
}

}  // namespace

std::string IndexSequence::to_string() const {
  std::string out = "(";
  for (std::size_t a = 0; a < i.size(); ++a) {
    if (a) out += "|";
    out += std::to_string(i[a]);
    if (a < j.size()) out += "," + std::to_string(j[a]);
  }
  return out + ")";
}

std::vector<IndexSequence> coproduct_sequences(int d) {
  std::vector<IndexSequence> out;
  IndexSequence cur{{0}, {0}};
  extend(out, cur, d);
  return out;
}

Product multiply(const Product& a, const Product& b) {
  Product out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const Product& p) {
  if (p.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "*" : "") + p[i].to_string();
  return out;
}

std::string key_to_string(const Tensor2& t) { return to_string(t.left) + " (x) " + to_string(t.right); }
std::string key_to_string(const Tensor3& t) {
  return to_string(t.parts[0]) + " (x) " + to_string(t.parts[1]) + " (x) " + to_string(t.parts[2]);
}

std::string CoproductTerm::to_string() const {
  std::string out = left.args.empty() ? "1" : left.to_string();
  out += " (x) ";
  if (sign < 0) out += "-";
  std::vector<std::string> factors;
  for (const auto& [base, slot] : exponentials) factors.push_back("(" + base.to_string() + ")^(" + slot.to_string() + ")");
  for (const auto& r : right) factors.push_back(r.to_string());
  if (factors.empty()) return out + "1";
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  return out;
}

std::vector<CoproductTerm> coproduct_terms(const SeriesTerm& x) {
  if (x.kind != SeriesTerm::Kind::Li) throw Error("coproduct applies to Li series terms");
  int d = x.depth();
  auto a = [&](int r) { return x.args[static_cast<std::size_t>(r - 1)]; };
  auto L = [&](int r) { return r == 0 ? TForm() : x.slots[static_cast<std::size_t>(r - 1)]; };
  auto contraction = [&](int from, int to) {
    Argument out;
    for (int r = from; r < to; ++r) out = out * a(r);
    return out;
  };
  std::vector<CoproductTerm> out;
  for (const auto& seq : coproduct_sequences(d)) {
    CoproductTerm term;
    term.sequence = seq;
    int k = seq.k();
    std::vector<Argument> largs;
    std::vector<TForm> lslots;
    for (int al = 1; al <= k; ++al) {
      largs.push_back(contraction(seq.i[al], seq.i[al + 1]));
      lslots.push_back(L(seq.j[al]));
    }
    if (k > 0) term.left = SeriesTerm::li(largs, lslots);
    for (int al = 0; al <= k; ++al) {
      int i = seq.i[al], j = seq.j[al], next = seq.i[al + 1];
      term.sign *= fields::sign_power(j - i);
      if (al > 0) term.exponentials.emplace_back(contraction(i, next), L(j));
      std::vector<Argument> inv_args;
      std::vector<TForm> inv_slots;
      for (int r = j - 1; r >= std::max(i, 1); --r) {
        inv_args.push_back(a(r).inverse());
        inv_slots.push_back(L(j) - L(r));
      }
      if (!inv_args.empty()) term.right.push_back(SeriesTerm::li(inv_args, inv_slots));
      std::vector<Argument> fwd_args;
      std::vector<TForm> fwd_slots;
      for (int r = j + 1; r < next; ++r) {
        fwd_args.push_back(a(r));
        fwd_slots.push_back(L(r) - L(j));
      }
      if (!fwd_args.empty()) term.right.push_back(SeriesTerm::li(fwd_args, fwd_slots));
    }
    out.push_back(std::move(term));
  }
  return out;
}

CoproductElement coproduct(const Symbol& s) {
  symbolic::check_symbol(s);
  CoproductElement out;
  if (s.is_log()) {
    for (const auto& [g, c] : symbolic::normalize_symbol(s)) {
      out.add(Tensor2{{g}, {}}, c);
      out.add(Tensor2{{}, {g}}, c);
    }
    return out;
  }
  if (s.has_zero()) return out;
  if (s.has_infinity()) return coproduct(inversion::infinity_reduce(s));
  int d = s.depth();
  std::vector<int> excess;
  for (int n : s.index) excess.push_back(n - 1);
  const Template& tpl = coproduct_template(d, s.weight() - d);
  auto it = tpl.find(symbolic::monomial_from(excess));
  if (it == tpl.end()) return out;
  std::map<symbolic::Atom, Argument> values;
  for (int i = 0; i < d; ++i) values[symbolic::placeholder(i + 1)] = s.args[static_cast<std::size_t>(i)];
  auto substitute = [&](Product p) {
    for (auto& f : p)
      for (auto& arg : f.args) arg = arg.substitute(values);
    return p;
  };
  for (const auto& [raw, c] : it->second)
    out.add(tensor(normalize_product(substitute(raw.left)), normalize_product(substitute(raw.right))), c);
  return out;
}

CoproductElement coproduct(const LinComb& e) {
  CoproductElement out;
  for (const auto& [s, c] : e) out.add(coproduct(s), c);
  return out;
}

CoproductElement coproduct(const Product& p) {
  CoproductElement out(Tensor2{});
  for (const auto& f : p) {
    CoproductElement next;
    for (const auto& [a, ca] : out)
      for (const auto& [b, cb] : coproduct(f)) next.add(Tensor2{multiply(a.left, b.left), multiply(a.right, b.right)}, ca * cb);
    out = std::move(next);
  }
  return out;
}

WedgeElement coproduct_mod_products(const Symbol& s) {
  WedgeElement out;
  for (const auto& [t, c] : coproduct(s))
    if (t.left.size() == 1 && t.right.size() == 1) out.add(symbolic::wedge(LinComb(t.left[0]), LinComb(t.right[0])), c);
  return out;
}

WedgeElement coproduct_mod_products(const LinComb& e) {
  WedgeElement out;
  for (const auto& [s, c] : e) out.add(coproduct_mod_products(s), c);
  return out;
}

Coproduct3Element coassociativity_defect(const Symbol& s) {
  Coproduct3Element out;
  for (const auto& [t, c] : coproduct(s)) {
    for (const auto& [l, cl] : coproduct(t.left)) out.add(Tensor3{{l.left, l.right, t.right}}, c * cl);
    for (const auto& [r, cr] : coproduct(t.right)) out.add(Tensor3{{t.left, r.left, r.right}}, -c * cr);
  }
  return out;
}

}  // namespace polylie::coalgebra
