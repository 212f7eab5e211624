#include <polylie/error.hpp>
#include <polylie/symbolic/tpoly.hpp>

#include <cstdlib>
#include <numeric>

namespace polylie::symbolic {

TForm TForm::var(int i, int coeff) {
  if (i < 0 || i >= kMaxTVars) throw Error("t-variable index out of range");
  TForm f;
  f.c_[static_cast<std::size_t>(i)] = coeff;
  return f;
}

bool TForm::is_zero() const {
  for (int v : c_)
    if (v != 0) return false;
  return true;
}

int TForm::top_variable() const {
  for (int i = kMaxTVars - 1; i >= 0; --i)
    if (c_[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

TForm TForm::operator-() const {
  TForm out = *this;
  for (int& v : out.c_) v = -v;
  return out;
}

TForm operator+(TForm a, const TForm& b) {
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

TForm operator*(int k, TForm a) {
  for (int& v : a.c_) v *= k;
  return a;
}

std::pair<int, TForm> TForm::normalized() const {
  int g = 0;
  int lead = 0;
  for (int v : c_) {
    g = std::gcd(g, std::abs(v));
    if (lead == 0) lead = v;
  }
  if (g == 0) throw ExpansionError("division by the zero form");
  int s = lead < 0 ? -g : g;
  TForm out = *this;
  for (int& v : out.c_) v /= s;
  return {s, out};
}

std::string TForm::to_string(const std::string& prefix) const {
  std::string out;
  for (int i = 0; i < kMaxTVars; ++i) {
    int v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (v < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (std::abs(v) != 1) out += std::to_string(std::abs(v)) + "*";
    out += prefix + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

int exponent(TMonomial m, int var) { return static_cast<int>((m >> (8 * var)) & 0xFFU); }

int degree(TMonomial m) {
  int d = 0;
  for (int i = 0; i < kMaxTVars; ++i) d += exponent(m, i);
  return d;
}

TMonomial monomial_var(int var, int e) {
  if (e < 0 || e > 255) throw Error("t-exponent out of range");
  return static_cast<TMonomial>(e) << (8 * var);
}

TMonomial monomial_from(const std::vector<int>& exponents) {
  TMonomial m = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) m += monomial_var(static_cast<int>(i), exponents[i]);
  return m;
}

std::string monomial_to_string(TMonomial m, const std::string& prefix) {
  std::string out;
  for (int i = 0; i < kMaxTVars; ++i) {
    int e = exponent(m, i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += prefix + std::to_string(i + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

TPoly::TPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

TPoly TPoly::from_form(const TForm& f) {
  TPoly p;
  for (int i = 0; i < kMaxTVars; ++i)
    if (f[i] != 0) p.terms_.emplace(monomial_var(i), Rational(f[i]));
  return p;
}

TPoly TPoly::monomial(TMonomial m, const Rational& c) {
  TPoly p;
  p.add(m, c);
  return p;
}

Rational TPoly::coefficient(TMonomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int TPoly::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

void TPoly::add(TMonomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TPoly& TPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TPoly TPoly::multiply(const TPoly& a, const TPoly& b, int max_degree) {
  TPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    int da = degree(ma);
    if (da > max_degree) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (da + degree(mb) > max_degree) continue;
      out.add(ma + mb, ca * cb);
    }
  }
  return out;
}

TPoly TPoly::truncated(int max_degree) const {
  TPoly out;
  for (const auto& [m, c] : terms_)
    if (degree(m) <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

TPoly TPoly::divided_by(const TForm& f) const {
  int v = f.top_variable();
  if (v < 0) throw ExpansionError("division by the zero form");
  Rational lead = f[v];
  TPoly rest = *this;
  TPoly quotient;
  TMonomial unit = monomial_var(v);
  while (!rest.is_zero()) {
    auto pick = rest.terms_.begin();
    int best = -1;
    for (auto it = rest.terms_.begin(); it != rest.terms_.end(); ++it) {
      int e = exponent(it->first, v);
      if (e > best) {
        best = e;
        pick = it;
      }
    }
    if (best == 0)
      throw ExpansionError("divided difference does not cancel: remainder " + rest.to_string() +
                           " modulo " + f.to_string());
    TMonomial qm = pick->first - unit;
    Rational qc = pick->second / lead;
    quotient.add(qm, qc);
    for (int i = 0; i < kMaxTVars; ++i)
      if (f[i] != 0) rest.add(qm + monomial_var(i), -qc * f[i]);
  }
  return quotient;
}

std::vector<TPoly> form_powers(const TForm& f, int n) {
  std::vector<TPoly> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)) + 1);
  out.emplace_back(Rational(1));
  TPoly base = TPoly::from_form(f);
  for (int k = 1; k <= n; ++k) out.push_back(TPoly::multiply(out.back(), base, k));
  return out;
}

TPoly TPoly::substituted(const std::vector<TForm>& images, int max_degree) const {
  std::vector<std::vector<TPoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i] = form_powers(images[i], max_degree);
  TPoly out;
  for (const auto& [m, c] : terms_) {
    if (degree(m) > max_degree) continue;
    TPoly term(c);
    for (int i = 0; i < kMaxTVars; ++i) {
      int e = exponent(m, i);
      if (e == 0) continue;
      if (static_cast<std::size_t>(i) < images.size()) {
        term = TPoly::multiply(term, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)], max_degree);
      } else {
        term = TPoly::multiply(term, TPoly::monomial(monomial_var(i, e)), max_degree);
      }
    }
    out += term;
  }
  return out;
}

std::string TPoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (m == 0) {
      out += fields::to_string(mag);
    } else {
      if (mag != 1) out += fields::to_string(mag) + "*";
      out += monomial_to_string(m, prefix);
    }
  }
  return out;
}

}  // namespace polylie::symbolic
