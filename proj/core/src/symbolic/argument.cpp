#include <polylie/error.hpp>
#include <polylie/symbolic/argument.hpp>

#include <algorithm>
#include <cctype>

namespace polylie::symbolic {

namespace {

Rational rational_pow(const Rational& c, int e) {
  Rational out = 1;
  Rational base = e < 0 ? Rational(1 / c) : c;
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

class ArgumentParser {
 public:
  explicit ArgumentParser(std::string_view text) : text_(text) {}

  Argument parse_all() {
    Argument out = product();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in argument '" + std::string(text_) + "'", pos_);
  }
  void skip() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Argument product() {
    Argument out;
    if (accept('-')) out = Argument::constant(-1);
    out = out * power();
    while (true) {
      if (accept('*')) out = out * power();
      else if (accept('/')) out = out * power().inverse();
      else break;
    }
    return out;
  }

  Argument power() {
    Argument base = primary();
    if (!accept('^')) return base;
    skip();
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return base.pow(negative ? -e : e);
  }

  Argument primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      std::size_t start = pos_;
      int depth = 0;
      for (; pos_ < text_.size(); ++pos_) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')' && --depth == 0) break;
      }
      if (pos_ >= text_.size()) fail("unbalanced parenthesis");
      ++pos_;
      auto inner = text_.substr(start + 1, pos_ - start - 2);
      fields::Polynomial p;
      try {
        p = fields::Polynomial::parse(inner);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad polynomial factor: ") + e.what(), start + 1 + e.position());
      }
      return Argument::from_polynomial(p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      BigInt n(std::string(text_.substr(start, pos_ - start)));
      if (n == 0) return Argument::zero();
      return Argument::constant(Rational(n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name == "inf") return Argument::infinity();
      return Argument::atom(name);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_compound_atom(const Atom& a) { return !a.empty() && a.front() == '('; }

fields::Polynomial atom_polynomial(const Atom& a) {
  if (is_compound_atom(a)) return fields::Polynomial::parse(std::string_view(a).substr(1, a.size() - 2));
  return fields::Polynomial::variable(a);
}

Argument Argument::zero() {
  Argument a;
  a.kind_ = Kind::Zero;
  return a;
}

Argument Argument::infinity() {
  Argument a;
  a.kind_ = Kind::Infinity;
  return a;
}

Argument Argument::atom(const Atom& name, int exponent) {
  Argument a;
  if (exponent != 0) a.exponents_.emplace_back(name, exponent);
  return a;
}

Argument Argument::constant(const Rational& c) {
  if (c == 0) return zero();
  Argument a;
  a.constant_ = c;
  return a;
}

Argument Argument::parse(std::string_view text) { return ArgumentParser(text).parse_all(); }

Argument Argument::from_polynomial(const fields::Polynomial& p) {
  if (p.is_zero()) return zero();
  auto [scalar, prim] = p.integer_primitive();
  Argument out = constant(scalar);
  if (prim.is_constant()) return out;
  if (prim.terms().size() == 1) {
    for (const auto& [var, e] : prim.terms().begin()->first) out = out * atom(var, e);
    return out;
  }
  return out * atom("(" + prim.to_string() + ")");
}

int Argument::exponent_of(const Atom& a) const {
  for (const auto& [name, e] : exponents_)
    if (name == a) return e;
  return 0;
}

bool Argument::all_exponents_nonnegative() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](const auto& p) { return p.second > 0; });
}

bool Argument::all_exponents_nonpositive() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](const auto& p) { return p.second < 0; });
}

Argument Argument::pow(int e) const {
  if (e == 0) return Argument();
  if (kind_ == Kind::Zero) return e > 0 ? zero() : infinity();
  if (kind_ == Kind::Infinity) return e > 0 ? infinity() : zero();
  Argument out;
  out.constant_ = rational_pow(constant_, e);
  for (const auto& [name, x] : exponents_) out.exponents_.emplace_back(name, x * e);
  return out;
}

Argument operator*(const Argument& a, const Argument& b) {
  using Kind = Argument::Kind;
  if ((a.kind_ == Kind::Zero && b.kind_ == Kind::Infinity) || (a.kind_ == Kind::Infinity && b.kind_ == Kind::Zero))
    throw UndefinedSymbolError("product 0*inf is undefined");
  if (a.kind_ != Kind::Group) return a;
  if (b.kind_ != Kind::Group) return b;
  Argument out;
  out.constant_ = a.constant_ * b.constant_;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.exponents_.size() || j < b.exponents_.size()) {
    if (j == b.exponents_.size() || (i < a.exponents_.size() && a.exponents_[i].first < b.exponents_[j].first)) {
      out.exponents_.push_back(a.exponents_[i++]);
    } else if (i == a.exponents_.size() || b.exponents_[j].first < a.exponents_[i].first) {
      out.exponents_.push_back(b.exponents_[j++]);
    } else {
      int e = a.exponents_[i].second + b.exponents_[j].second;
      if (e != 0) out.exponents_.emplace_back(a.exponents_[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Argument Argument::substitute(const std::map<Atom, Argument>& values) const {
  if (kind_ != Kind::Group) return *this;
  Argument out = constant(constant_);
  for (const auto& [name, e] : exponents_) {
    auto it = values.find(name);
    out = out * (it == values.end() ? atom(name, e) : it->second.pow(e));
  }
  return out;
}

std::string Argument::to_string() const {
  if (kind_ == Kind::Zero) return "0";
  if (kind_ == Kind::Infinity) return "inf";
  if (exponents_.empty()) return fields::to_string(constant_);
  std::string out;
  if (constant_ != 1) out = fields::to_string(constant_) + "*";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i > 0) out += '*';
    out += exponents_[i].first;
    if (exponents_[i].second != 1) out += "^" + std::to_string(exponents_[i].second);
  }
  return out;
}

bool operator<(const Argument& a, const Argument& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.exponents_ != b.exponents_) return a.exponents_ < b.exponents_;
  return a.constant_ < b.constant_;
}

}  // namespace polylie::symbolic
