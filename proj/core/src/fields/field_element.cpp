#include <polylie/error.hpp>
#include <polylie/fields/field_element.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

namespace polylie::fields {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

void same_kind(const FieldElement& a, const FieldElement& b) {
  if (a.index() != b.index()) throw Error("field elements from different fields");
  if (auto* fa = std::get_if<FqElement>(&a)) {
    const auto& fb = std::get<FqElement>(b);
    if (fa->field->order() != fb.field->order() || fa->field->modulus() != fb.field->modulus())
      throw Error("finite field elements from different fields");
  }
}

int fq_from_rational(const Rational& c, const FiniteField& f) {
  long p = f.characteristic();
  BigInt num = c.get_num() % p;
  BigInt den = c.get_den() % p;
  if (den == 0) throw SpecializationError("coefficient denominator divisible by " + std::to_string(p));
  int n = f.from_integer(num.get_si());
  int d = f.from_integer(den.get_si());
  return f.mul(n, f.inv(d));
}

struct FqValue {
  const FiniteField* field;
  int v;
  friend FqValue operator+(const FqValue& a, const FqValue& b) { return {a.field, a.field->add(a.v, b.v)}; }
  friend FqValue operator*(const FqValue& a, const FqValue& b) { return {a.field, a.field->mul(a.v, b.v)}; }
};

int evaluate_fq(const Polynomial& p, const FiniteField& field,
                const std::function<int(const std::string&)>& value) {
  return p
      .evaluate<FqValue>([&](const std::string& v) { return FqValue{&field, value(v)}; },
                         [&](const Rational& c) { return FqValue{&field, fq_from_rational(c, field)}; })
      .v;
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  same_kind(a, b);
  return std::visit(Overload{
                        [&](const Rational& x) -> FieldElement { return Rational(x + std::get<Rational>(b)); },
                        [&](const FqElement& x) -> FieldElement {
                          return FqElement{x.field, x.field->add(x.value, std::get<FqElement>(b).value)};
                        },
                        [&](const RationalFunction& x) -> FieldElement { return x + std::get<RationalFunction>(b); }},
                    a);
}

FieldElement neg(const FieldElement& a) {
  return std::visit(Overload{[](const Rational& x) -> FieldElement { return Rational(-x); },
                             [](const FqElement& x) -> FieldElement { return FqElement{x.field, x.field->neg(x.value)}; },
                             [](const RationalFunction& x) -> FieldElement { return -x; }},
                    a);
}

FieldElement sub(const FieldElement& a, const FieldElement& b) { return add(a, neg(b)); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  same_kind(a, b);
  return std::visit(Overload{
                        [&](const Rational& x) -> FieldElement { return Rational(x * std::get<Rational>(b)); },
                        [&](const FqElement& x) -> FieldElement {
                          return FqElement{x.field, x.field->mul(x.value, std::get<FqElement>(b).value)};
                        },
                        [&](const RationalFunction& x) -> FieldElement { return x * std::get<RationalFunction>(b); }},
                    a);
}

FieldElement inv(const FieldElement& a) {
  return std::visit(Overload{[](const Rational& x) -> FieldElement {
                               if (x == 0) throw SpecializationError("inverse of zero");
                               return Rational(1 / x);
                             },
                             [](const FqElement& x) -> FieldElement { return FqElement{x.field, x.field->inv(x.value)}; },
                             [](const RationalFunction& x) -> FieldElement { return x.inverse(); }},
                    a);
}

bool is_zero(const FieldElement& a) {
  return std::visit(Overload{[](const Rational& x) { return x == 0; },
                             [](const FqElement& x) { return x.value == 0; },
                             [](const RationalFunction& x) { return x.is_zero(); }},
                    a);
}

bool is_one(const FieldElement& a) {
  return std::visit(Overload{[](const Rational& x) { return x == 1; },
                             [](const FqElement& x) { return x.value == 1; },
                             [](const RationalFunction& x) { return x.is_one(); }},
                    a);
}

std::string to_string(const FieldElement& a) {
  return std::visit(Overload{[](const Rational& x) { return fields::to_string(x); },
                             [](const FqElement& x) { return x.field->element_to_string(x.value); },
                             [](const RationalFunction& x) { return x.to_string(); }},
                    a);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(); }

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s(text);
  FieldSpec spec;
  if (s == "Q") return spec;
  if (s.rfind("Q(", 0) == 0 && s.back() == ')') {
    spec.kind_ = Kind::FunctionField;
    std::string inner = s.substr(2, s.size() - 3);
    std::string cur;
    for (char c : inner + ",") {
      if (c == ',') {
        if (cur.empty()) throw ParseError("empty variable name in field spec '" + s + "'", 0);
        spec.variables_.push_back(cur);
        cur.clear();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        cur += c;
      } else if (c != ' ') {
        throw ParseError("invalid character in field spec '" + s + "'", 0);
      }
    }
    return spec;
  }
  if (s.rfind("Fq:", 0) == 0) {
    spec.kind_ = Kind::Finite;
    std::string rest = s.substr(3);
    std::string order = rest;
    std::optional<std::vector<int>> modulus;
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      order = rest.substr(0, colon);
      std::string opt = rest.substr(colon + 1);
      if (opt.rfind("poly=", 0) != 0) throw ParseError("expected poly= in field spec '" + s + "'", 3 + colon);
      Polynomial poly = Polynomial::parse(opt.substr(5));
      for (const auto& v : poly.variables())
        if (v != "t") throw ParseError("defining polynomial must be in t", 3 + colon);
      std::vector<int> coeffs;
      for (const Polynomial& c : poly.coefficients_in("t")) {
        Rational r = c.constant_term();
        if (!is_integer(r)) throw ParseError("defining polynomial needs integer coefficients", 3 + colon);
        coeffs.push_back(static_cast<int>(r.get_num().get_si()));
      }
      modulus = coeffs;
    }
    int q = 0;
    try {
      q = std::stoi(order);
    } catch (const std::exception&) {
      throw ParseError("invalid field order in '" + s + "'", 3);
    }
    spec.finite_ = FiniteField::of_order(q, modulus);
    return spec;
  }
  throw ParseError("unknown field spec '" + s + "'", 0);
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::Rationals:
      return "Q";
    case Kind::Finite: {
      std::string out = "Fq:" + std::to_string(finite_->order());
      if (finite_->degree() > 1) out += ":poly=" + finite_->modulus_string();
      return out;
    }
    case Kind::FunctionField: {
      std::string out = "Q(";
      for (std::size_t i = 0; i < variables_.size(); ++i) out += (i ? "," : "") + variables_[i];
      return out + ")";
    }
  }
  return "Q";
}

FieldElement FieldSpec::from_integer(long n) const {
  switch (kind_) {
    case Kind::Rationals:
      return Rational(n);
    case Kind::Finite:
      return FqElement{finite_, finite_->from_integer(n)};
    case Kind::FunctionField:
      return RationalFunction(Rational(n));
  }
  return Rational(n);
}

FieldElement FieldSpec::parse_element(std::string_view text) const {
  switch (kind_) {
    case Kind::Rationals:
      return parse_rational(text);
    case Kind::Finite: {
      Polynomial p = Polynomial::parse(text);
      int value = 0;
      int t = finite_->degree() > 1 ? finite_->characteristic() : 0;
      for (const auto& v : p.variables())
        if (v != "t" || t == 0) throw ParseError("unknown symbol '" + v + "' in finite field element", 0);
      value = evaluate_fq(p, *finite_, [&](const std::string&) { return t; });
      return FqElement{finite_, value};
    }
    case Kind::FunctionField: {
      RationalFunction f = RationalFunction::parse(text);
      for (const auto& v : f.numerator().variables())
        if (std::find(variables_.begin(), variables_.end(), v) == variables_.end())
          throw ParseError("variable '" + v + "' not in field", 0);
      for (const auto& v : f.denominator().variables())
        if (std::find(variables_.begin(), variables_.end(), v) == variables_.end())
          throw ParseError("variable '" + v + "' not in field", 0);
      return f;
    }
  }
  return Rational(0);
}

Rational specialize(const RationalFunction& f, const std::map<std::string, Rational>& point) {
  return f.specialize(point);
}

FqElement specialize(const RationalFunction& f, const std::map<std::string, int>& point,
                     const std::shared_ptr<const FiniteField>& field) {
  auto eval = [&](const Polynomial& p) {
    return evaluate_fq(p, *field, [&](const std::string& v) {
      auto it = point.find(v);
      if (it == point.end()) throw SpecializationError("no value for variable '" + v + "'");
      return field->from_integer(it->second);
    });
  };
  int den = eval(f.denominator());
  if (den == 0) throw SpecializationError("pole: denominator " + f.denominator().to_string() + " vanishes");
  return FqElement{field, field->mul(eval(f.numerator()), field->inv(den))};
}

}  // namespace polylie::fields
