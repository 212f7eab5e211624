#include <polylie/error.hpp>
#include <polylie/inversion/inv.hpp>
#include <polylie/symbolic/series.hpp>

namespace polylie::symbolic {

namespace detail {

TPoly product_of_forms(const std::vector<TForm>& forms, int max_degree) {
  TPoly out(Rational(1));
  for (const TForm& f : forms) out = TPoly::multiply(out, TPoly::from_form(f), max_degree);
  return out;
}

}  // namespace detail

SeriesTerm SeriesTerm::li(std::vector<Argument> args, std::vector<TForm> slots, const Rational& scalar) {
  if (args.size() != slots.size() || args.empty()) throw Error("series term needs one slot per argument");
  SeriesTerm t;
  t.kind = Kind::Li;
  t.scalar = scalar;
  t.args = std::move(args);
  t.slots = std::move(slots);
  return t;
}

SeriesTerm SeriesTerm::inv(std::vector<Argument> args, std::vector<TForm> slots, const Rational& scalar) {
  SeriesTerm t = li(std::move(args), std::move(slots), scalar);
  t.kind = Kind::Inv;
  return t;
}

SeriesTerm SeriesTerm::log(const Argument& x, const Rational& scalar) {
  SeriesTerm t;
  t.kind = Kind::Log;
  t.scalar = scalar;
  t.args = {x};
  return t;
}

SeriesTerm SeriesTerm::log(const Argument& x, const TForm& multiplier, const Rational& scalar) {
  SeriesTerm t = log(x, scalar);
  t.numerators = {multiplier};
  return t;
}

int SeriesTerm::homogeneity() const {
  int base = kind == Kind::Log ? 1 : depth();
  return base + static_cast<int>(denominators.size()) - static_cast<int>(numerators.size());
}

SeriesTerm SeriesTerm::scaled(const Rational& c) const {
  SeriesTerm t = *this;
  t.scalar *= c;
  return t;
}

SeriesTerm SeriesTerm::over(const TForm& denominator) const {
  SeriesTerm t = *this;
  t.denominators.push_back(denominator);
  return t;
}

namespace {

TForm substitute_form(const TForm& f, const std::vector<TForm>& images) {
  TForm out;
  for (int i = 0; i < kMaxTVars; ++i) {
    if (f[i] == 0) continue;
    if (static_cast<std::size_t>(i) < images.size()) out = out + f[i] * images[static_cast<std::size_t>(i)];
    else out = out + TForm::var(i, f[i]);
  }
  return out;
}

}  // namespace

SeriesTerm SeriesTerm::with_slots_substituted(const std::vector<TForm>& images) const {
  SeriesTerm t = *this;
  for (auto& f : t.slots) f = substitute_form(f, images);
  for (auto& f : t.numerators) f = substitute_form(f, images);
  for (auto& f : t.denominators) f = substitute_form(f, images);
  return t;
}

SeriesTerm SeriesTerm::with_args_substituted(const std::map<Atom, Argument>& values) const {
  SeriesTerm t = *this;
  for (auto& a : t.args) a = a.substitute(values);
  return t;
}

std::string SeriesTerm::to_string() const {
  std::string out;
  if (scalar != 1) out += fields::to_string(scalar) + "*";
  for (const auto& f : numerators) out += "(" + f.to_string() + ")*";
  for (const auto& f : denominators) out += "1/(" + f.to_string() + ")*";
  if (kind == Kind::Log) return out + "[" + args[0].to_string() + ";0]";
  if (kind == Kind::Inv) out += "inv";
  out += "[";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i].to_string();
  out += "|";
  for (std::size_t i = 0; i < slots.size(); ++i) out += (i ? "," : "") + slots[i].to_string();
  return out + "]";
}

std::string to_string(const SeriesSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " + " : "") + s[i].to_string();
  return out;
}

SeriesSum scaled(const SeriesSum& s, const Rational& c) {
  SeriesSum out;
  for (const auto& t : s) out.push_back(t.scaled(c));
  return out;
}

SeriesSum operator+(SeriesSum a, const SeriesSum& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<TForm> standard_slots(int d) {
  std::vector<TForm> out;
  for (int i = 0; i < d; ++i) out.push_back(TForm::var(i));
  return out;
}

Atom placeholder(int i) { return "#" + std::to_string(i); }

std::vector<Argument> placeholder_args(int d) {
  std::vector<Argument> out;
  for (int i = 1; i <= d; ++i) out.push_back(Argument::atom(placeholder(i)));
  return out;
}

TMap<Symbol> expand_li(const std::vector<Argument>& args, const std::vector<TForm>& slots, int max_degree) {
  TMap<Symbol> out;
  if (max_degree < 0) return out;
  int d = static_cast<int>(args.size());
  std::vector<std::vector<TPoly>> powers;
  for (const auto& f : slots) powers.push_back(form_powers(f, max_degree));
  std::vector<int> excess(static_cast<std::size_t>(d), 0);
  while (true) {
    TPoly p(Rational(1));
    for (int i = 0; i < d && !p.is_zero(); ++i)
      p = TPoly::multiply(p, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(excess[static_cast<std::size_t>(i)])],
                          max_degree);
    if (!p.is_zero()) {
      std::vector<int> index;
      for (int e : excess) index.push_back(e + 1);
      tmap_add(out, Symbol(args, index), p);
    }
    int i = d - 1;
    int total = 0;
    for (int e : excess) total += e;
    while (i >= 0) {
      if (total < max_degree) {
        ++excess[static_cast<std::size_t>(i)];
        break;
      }
      total -= excess[static_cast<std::size_t>(i)];
      excess[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

TMap<Symbol> expand_factor(const SeriesTerm& s, int max_degree) {
  switch (s.kind) {
    case SeriesTerm::Kind::Li:
      return expand_li(s.args, s.slots, max_degree);
    case SeriesTerm::Kind::Log: {
      TMap<Symbol> out;
      if (max_degree >= 0) tmap_add(out, Symbol::log(s.args[0]), TPoly(Rational(1)));
      return out;
    }
    case SeriesTerm::Kind::Inv:
      return inversion::expand_inv(s.args, s.slots, max_degree);
  }
  return {};
}

TMap<Symbol> normalize(const TMap<Symbol>& m) {
  TMap<Symbol> out;
  for (const auto& [s, p] : m) {
    for (const auto& [t, c] : normalize_symbol(s)) tmap_add(out, t, p, c);
  }
  return out;
}

TMap<Symbol> expand_raw(const SeriesSum& s, int max_degree) {
  std::vector<SeriesPiece<Symbol>> pieces;
  pieces.reserve(s.size());
  for (const auto& term : s) {
    SeriesPiece<Symbol> piece;
    piece.scalar = term.scalar;
    piece.numerators = term.numerators;
    piece.denominators = term.denominators;
    piece.body = [&term](int n) { return expand_factor(term, n); };
    pieces.push_back(std::move(piece));
  }
  return combine_series(pieces, max_degree);
}

TMap<Symbol> expand(const SeriesSum& s, int max_degree) { return normalize(expand_raw(s, max_degree)); }

TMap<Symbol> expand(const SeriesTerm& s, int max_degree) { return expand(SeriesSum{s}, max_degree); }

TMap<Symbol> expand_to_weight(const SeriesTerm& s, int weight_bound) {
  return expand(s, weight_bound - s.homogeneity());
}

std::string to_string(const TMap<Symbol>& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [s, p] : m) {
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")*" + s.to_string();
  }
  return out;
}

}  // namespace polylie::symbolic
