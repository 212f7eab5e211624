#include <polylie/error.hpp>
#include <polylie/fields/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace polylie::fields {

bool lex_less(const PowerProduct& a, const PowerProduct& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) return false;
    if (b[j].first < a[i].first) return true;
    if (a[i].second != b[j].second) return a[i].second < b[j].second;
    ++i;
    ++j;
  }
  return i == a.size() && j < b.size();
}

namespace {

PowerProduct multiply(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int pp_degree(const PowerProduct& pp) {
  int d = 0;
  for (const auto& [v, e] : pp) d += e;
  return d;
}

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in polynomial '" + std::string(text_) + "'", pos_);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial total;
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    Polynomial t = term();
    total = negative ? -t : t;
    while (true) {
      if (accept('+')) total += term();
      else if (accept('-')) total -= term();
      else break;
    }
    return total;
  }

  Polynomial term() {
    Polynomial p = unary();
    while (true) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p *= Rational(1) / d.constant_term();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip();
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    if (negative) {
      if (!base.is_constant() || base.is_zero()) fail("negative power of a non-constant");
      return Polynomial(Rational(1) / base.constant_term()).pow(e);
    }
    return base.pow(e);
  }

  Polynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string pp_to_string(const PowerProduct& pp) {
  std::string out;
  for (const auto& [v, e] : pp) {
    if (!out.empty()) out += '*';
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial content_in(const Polynomial& p, const std::string& var) {
  Polynomial g;
  for (const Polynomial& c : p.coefficients_in(var)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, const std::string& var) {
  int db = b.degree_in(var);
  Polynomial lb = b.coefficients_in(var).back();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    Polynomial la = a.coefficients_in(var).back();
    Polynomial shift = Polynomial::monomial({{var, da - db}}, Rational(1));
    a = a * lb - la * shift * b;
  }
  return a;
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_term().second);
}

std::string first_shared_variable(const Polynomial& a, const Polynomial& b) {
  std::set<std::string> vars;
  for (const auto& v : a.variables()) vars.insert(v);
  for (const auto& v : b.variables()) vars.insert(v);
  return vars.empty() ? std::string() : *vars.begin();
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(PowerProduct{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
  return monomial({{name, 1}}, Rational(1));
}

Polynomial Polynomial::monomial(const PowerProduct& pp, const Rational& coeff) {
  Polynomial p;
  PowerProduct clean;
  for (const auto& [v, e] : pp)
    if (e != 0) clean.emplace_back(v, e);
  std::sort(clean.begin(), clean.end());
  p.add_term(clean, coeff);
  return p;
}

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse_all(); }

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(PowerProduct{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> Polynomial::variables() const {
  std::set<std::string> vars;
  for (const auto& [pp, c] : terms_)
    for (const auto& [v, e] : pp) vars.insert(v);
  return {vars.begin(), vars.end()};
}

int Polynomial::degree_in(const std::string& var) const {
  int d = 0;
  for (const auto& [pp, c] : terms_)
    for (const auto& [v, e] : pp)
      if (v == var) d = std::max(d, e);
  return d;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [pp, c] : terms_) d = std::max(d, pp_degree(pp));
  return d;
}

std::pair<PowerProduct, Rational> Polynomial::leading_term() const {
  if (terms_.empty()) return {{}, Rational(0)};
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (lex_less(best->first, it->first)) best = it;
  return *best;
}

std::vector<Polynomial> Polynomial::coefficients_in(const std::string& var) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const auto& [pp, c] : terms_) {
    PowerProduct rest;
    int e = 0;
    for (const auto& entry : pp) {
      if (entry.first == var) e = entry.second;
      else rest.push_back(entry);
    }
    out[static_cast<std::size_t>(e)].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients_in(const std::string& var,
                                            const std::vector<Polynomial>& coeffs) {
  Polynomial out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out += coeffs[i] * monomial({{var, static_cast<int>(i)}}, Rational(1));
  }
  return out;
}

void Polynomial::add_term(const PowerProduct& pp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(pp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [pp, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [pp, c] : other.terms_) add_term(pp, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [pp, c] : other.terms_) add_term(pp, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add_term(multiply(pa, pb), ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [pp, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::pair<Rational, Polynomial> Polynomial::integer_primitive() const {
  if (is_zero()) return {Rational(0), *this};
  BigInt lcm_den = 1;
  for (const auto& [pp, c] : terms_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  BigInt g = 0;
  for (const auto& [pp, c] : terms_) {
    BigInt scaled = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scalar(g, lcm_den);
  scalar.canonicalize();
  Rational ct = constant_term();
  bool flip = ct != 0 ? ct < 0 : leading_term().second < 0;
  if (flip) scalar = -scalar;
  Polynomial prim = *this * (Rational(1) / scalar);
  return {scalar, prim};
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<PowerProduct, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = pp_degree(a.first);
    int db = pp_degree(b.first);
    if (da != db) return da < db;
    return lex_less(b.first, a.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [pp, c] : ordered) {
    Rational mag = abs(c);
    if (c < 0) out += '-';
    else if (!first) out += '+';
    first = false;
    if (pp.empty()) {
      out += fields::to_string(mag);
    } else {
      if (mag != 1) out += fields::to_string(mag) + "*";
      out += pp_to_string(pp);
    }
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw SpecializationError("polynomial division by zero");
  if (a.is_zero()) return Polynomial();
  if (b.is_constant()) return a * (Rational(1) / b.constant_term());
  std::string var = b.variables().front();
  int db = b.degree_in(var);
  Polynomial lb = b.coefficients_in(var).back();
  Polynomial quotient;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    int dr = rest.degree_in(var);
    if (dr < db) return std::nullopt;
    auto qc = divide_exact(rest.coefficients_in(var).back(), lb);
    if (!qc) return std::nullopt;
    Polynomial step = *qc * Polynomial::monomial({{var, dr - db}}, Rational(1));
    quotient += step;
    rest -= step * b;
  }
  return quotient;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  std::string var = first_shared_variable(a, b);
  if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
  if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);
  Polynomial ca = content_in(a, var);
  Polynomial cb = content_in(b, var);
  Polynomial c = gcd(ca, cb);
  Polynomial pa = *divide_exact(a, ca);
  Polynomial pb = *divide_exact(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = pb;
    if (r.is_zero()) {
      pb = Polynomial();
    } else if (r.degree_in(var) == 0) {
      pa = Polynomial(1);
      pb = Polynomial();
    } else {
      pb = *divide_exact(r, content_in(r, var));
    }
  }
  return make_monic(c * pa);
}

}  // namespace polylie::fields
