#include <polylie/error.hpp>
#include <polylie/fields/rational_function.hpp>

namespace polylie::fields {

namespace {

Rational evaluate_at(const Polynomial& p, const std::map<std::string, Rational>& point) {
  return p.evaluate<Rational>(
      [&](const std::string& v) {
        auto it = point.find(v);
        if (it == point.end()) throw SpecializationError("no value for variable '" + v + "'");
        return it->second;
      },
      [](const Rational& c) { return c; });
}

std::string wrap(const Polynomial& p) {
  std::string s = p.to_string();
  bool simple = p.terms().size() == 1 &&
                (p.terms().begin()->second == 1 || p.terms().begin()->first.empty());
  return simple ? s : "(" + s + ")";
}

}  // namespace

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw SpecializationError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!(g == Polynomial(1))) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  Rational lead = den_.leading_term().second;
  if (lead != 1) {
    num_ *= Rational(1) / lead;
    den_ *= Rational(1) / lead;
  }
}

RationalFunction RationalFunction::parse(std::string_view text) {
  std::size_t depth = 0;
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '/' && depth == 0) {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] == ' ') ++j;
      if (j < text.size() && text[j] == '(') {
        split = i;
        break;
      }
    }
  }
  if (split == std::string_view::npos) return RationalFunction(Polynomial::parse(text));
  return RationalFunction(Polynomial::parse(text.substr(0, split)),
                          Polynomial::parse(text.substr(split + 1)));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw SpecializationError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

Rational RationalFunction::specialize(const std::map<std::string, Rational>& point) const {
  Rational d = evaluate_at(den_, point);
  if (d == 0) throw SpecializationError("pole: denominator " + den_.to_string() + " vanishes");
  return evaluate_at(num_, point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace polylie::fields
