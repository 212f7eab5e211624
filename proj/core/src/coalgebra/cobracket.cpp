#include <polylie/coalgebra/cobracket.hpp>
#include <polylie/error.hpp>
#include <polylie/inversion/inv.hpp>
#include <polylie/symbolic/memo.hpp>

#include <tuple>

namespace polylie::coalgebra {

using symbolic::Argument;
using symbolic::TMonomial;
using symbolic::TPoly;

namespace {

Argument product(const std::vector<Argument>& a, std::size_t from, std::size_t to) {
  Argument out;
  for (std::size_t i = from; i <= to; ++i) out = out * a[i];
  return out;
}

SeriesWedge make(const SeriesTerm& x, SeriesSum left, SeriesSum right, const Rational& sign = Rational(1)) {
  SeriesWedge w;
  w.scalar = x.scalar * sign;
  w.numerators = x.numerators;
  w.denominators = x.denominators;
  w.left = std::move(left);
  w.right = std::move(right);
  return w;
}

// Left factor shared by delta_3 and delta_4: x_p..x_q contracted (1-based p < q).
std::vector<Argument> contracted(const std::vector<Argument>& a, std::size_t p, std::size_t q) {
  std::vector<Argument> out(a.begin(), a.begin() + static_cast<long>(p - 1));
  out.push_back(product(a, p - 1, q - 1));
  out.insert(out.end(), a.begin() + static_cast<long>(q), a.end());
  return out;
}

}  // namespace

std::string SeriesWedge::to_string() const {
  std::string out = fields::to_string(scalar);
  for (const auto& f : numerators) out += "*(" + f.to_string() + ")";
  for (const auto& f : denominators) out += "/(" + f.to_string() + ")";
  out += " * (" + symbolic::to_string(left) + ") ^ (" + symbolic::to_string(right) + ")";
  return out;
}

SeriesWedgeSum delta_part(int part, const SeriesTerm& x, Variant variant) {
  if (x.kind != SeriesTerm::Kind::Li) throw Error("delta_part applies to Li series terms");
  const auto& a = x.args;
  const auto& L = x.slots;
  std::size_t d = a.size();
  SeriesTerm bare = SeriesTerm::li(a, L);
  SeriesWedgeSum out;
  switch (part) {
    case 1: {
      SeriesSum logs;
      for (std::size_t p = 0; p < d; ++p) logs.push_back(SeriesTerm::log(a[p], L[p]));
      out.push_back(make(x, {bare}, logs));
      break;
    }
    case 2:
      for (std::size_t p = 2; p <= d; ++p) {
        SeriesTerm left = SeriesTerm::li({a.begin() + static_cast<long>(p - 1), a.end()},
                                         {L.begin() + static_cast<long>(p - 1), L.end()});
        SeriesTerm right = SeriesTerm::li({a.begin(), a.begin() + static_cast<long>(p - 1)},
                                          {L.begin(), L.begin() + static_cast<long>(p - 1)});
        out.push_back(make(x, {left}, {right}));
      }
      break;
    case 3:
      for (std::size_t p = 1; p <= d; ++p)
        for (std::size_t q = p + 1; q <= d; ++q) {
          std::vector<TForm> slots(L.begin(), L.begin() + static_cast<long>(p));
          slots.insert(slots.end(), L.begin() + static_cast<long>(q), L.end());
          std::vector<Argument> rargs(a.begin() + static_cast<long>(p), a.begin() + static_cast<long>(q));
          std::vector<TForm> rslots;
          for (std::size_t r = p + 1; r <= q; ++r) rslots.push_back(L[r - 1] - L[p - 1]);
          out.push_back(make(x, {SeriesTerm::li(contracted(a, p, q), slots)}, {SeriesTerm::li(rargs, rslots)}));
        }
      break;
    case 4:
      for (std::size_t p = 1; p <= d; ++p)
        for (std::size_t q = p + 1; q <= d; ++q) {
          std::vector<TForm> slots(L.begin(), L.begin() + static_cast<long>(p - 1));
          slots.insert(slots.end(), L.begin() + static_cast<long>(q - 1), L.end());
          SeriesTerm right;
          if (variant == Variant::Standard) {
            std::vector<Argument> rargs;
            std::vector<TForm> rslots;
            for (std::size_t r = q - 1; r >= p; --r) {
              rargs.push_back(a[r - 1].inverse());
              rslots.push_back(L[q - 1] - L[r - 1]);
            }
            right = SeriesTerm::li(rargs, rslots);
          } else {
            std::vector<Argument> rargs(a.begin() + static_cast<long>(p - 1), a.begin() + static_cast<long>(q - 1));
            std::vector<TForm> rslots;
            for (std::size_t r = p; r < q; ++r) rslots.push_back(L[r - 1] - L[q - 1]);
            right = SeriesTerm::inv(rargs, rslots);
          }
          Rational sign(fields::sign_power(static_cast<long>(q - p)));
          out.push_back(make(x, {SeriesTerm::li(contracted(a, p, q), slots)}, {right}, sign));
        }
      break;
    default:
      throw Error("delta part must be 1..4");
  }
  return out;
}

SeriesWedgeSum delta_series(const SeriesTerm& x, Variant variant) {
  SeriesWedgeSum out;
  if (x.kind == SeriesTerm::Kind::Log) return out;
  if (x.kind == SeriesTerm::Kind::Inv) return delta_series(inversion::inv(x), variant);
  for (int part = 1; part <= 4; ++part) {
    auto p = delta_part(part, x, variant);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

SeriesWedgeSum delta_series(const SeriesSum& s, Variant variant) {
  SeriesWedgeSum out;
  for (const auto& t : s) {
    auto p = delta_series(t, variant);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

TMap<RawWedge> expand_raw(const SeriesWedgeSum& s, int max_degree) {
  std::vector<symbolic::SeriesPiece<RawWedge>> pieces;
  for (const auto& w : s) {
    symbolic::SeriesPiece<RawWedge> piece;
    piece.scalar = w.scalar;
    piece.numerators = w.numerators;
    piece.denominators = w.denominators;
    piece.body = [&w](int top) {
      TMap<RawWedge> out;
      auto left = symbolic::expand_raw(w.left, top);
      auto right = symbolic::expand_raw(w.right, top);
      for (const auto& [a, pa] : left)
        for (const auto& [b, pb] : right) symbolic::tmap_add(out, RawWedge{a, b}, TPoly::multiply(pa, pb, top));
      return out;
    };
    pieces.push_back(std::move(piece));
  }
  return symbolic::combine_series(pieces, max_degree);
}

LinComb normalize_factor(const Symbol& s) {
  if (s.has_zero()) return symbolic::normalize_symbol(s);
  if (s.has_infinity()) return inversion::infinity_reduce(s);
  return symbolic::normalize_symbol(s);
}

WedgeElement normalize_wedge(const RawWedge& w) {
  return symbolic::wedge(normalize_factor(w.first), normalize_factor(w.second));
}

TMap<Wedge2> expand(const SeriesWedgeSum& s, int max_degree) {
  TMap<Wedge2> out;
  for (const auto& [raw, poly] : expand_raw(s, max_degree))
    for (const auto& [key, c] : normalize_wedge(raw)) symbolic::tmap_add(out, key, poly, c);
  return out;
}

namespace {

using Template = std::map<TMonomial, symbolic::LinearCombination<RawWedge>>;

const Template& delta_template(int d, int degree, Variant variant) {
  static symbolic::Memo<std::tuple<int, int, int>, Template> memo;
  return memo.get({d, degree, static_cast<int>(variant)}, [&] {
    SeriesTerm x = SeriesTerm::li(symbolic::placeholder_args(d), symbolic::standard_slots(d));
    Template out;
    for (auto& [mono, lc] : symbolic::by_monomial(expand_raw(delta_series(x, variant), degree)))
      if (symbolic::degree(mono) == degree) out.emplace(mono, std::move(lc));
    return out;
  });
}

}  // namespace

WedgeElement delta(const Symbol& s, Variant variant) {
  symbolic::check_symbol(s);
  if (s.weight() <= 1 || s.has_zero()) return {};
  if (s.has_infinity()) return delta(inversion::infinity_reduce(s), variant);
  int d = s.depth();
  std::vector<int> excess;
  for (int n : s.index) excess.push_back(n - 1);
  const Template& tpl = delta_template(d, s.weight() - d, variant);
  auto it = tpl.find(symbolic::monomial_from(excess));
  WedgeElement out;
  if (it == tpl.end()) return out;
  std::map<symbolic::Atom, Argument> values;
  for (int i = 0; i < d; ++i) values[symbolic::placeholder(i + 1)] = s.args[static_cast<std::size_t>(i)];
  auto substitute = [&](Symbol f) {
    for (auto& arg : f.args) arg = arg.substitute(values);
    return f;
  };
  for (const auto& [raw, c] : it->second) out.add(normalize_wedge({substitute(raw.first), substitute(raw.second)}), c);
  return out;
}

WedgeElement delta(const LinComb& e, Variant variant) {
  WedgeElement out;
  for (const auto& [s, c] : e) out.add(delta(s, variant), c);
  return out;
}

TMap<Wedge2> delta(const TMap<Symbol>& m, Variant variant) {
  TMap<Wedge2> out;
  for (const auto& [s, p] : m)
    for (const auto& [key, c] : delta(s, variant)) symbolic::tmap_add(out, key, p, c);
  return out;
}

Wedge3Element delta_squared(const LinComb& e, Variant variant) {
  std::map<Symbol, WedgeElement> cache;
  auto cached = [&](const Symbol& s) -> const WedgeElement& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, delta(s, variant)).first;
    return it->second;
  };
  Wedge3Element out;
  for (const auto& [w, c] : delta(e, variant)) {
    out.add(symbolic::wedge(cached(w.first), LinComb(w.second)), c);
    out.add(symbolic::wedge(LinComb(w.first), cached(w.second)), -c);
  }
  return out;
}

Wedge3Element delta_squared(const Symbol& s, Variant variant) { return delta_squared(LinComb(s), variant); }

std::string to_string(const SeriesWedgeSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& w : s) {
    if (!out.empty()) out += " + ";
    out += w.to_string();
  }
  return out;
}

std::string to_string(const TMap<Wedge2>& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [w, p] : m) {
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")*" + w.to_string();
  }
  return out;
}

}  // namespace polylie::coalgebra
