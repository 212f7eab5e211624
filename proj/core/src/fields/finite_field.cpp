#include <polylie/error.hpp>
#include <polylie/fields/finite_field.hpp>

#include <algorithm>

namespace polylie::fields {

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  int inv_lead = 1;
  for (int x = 1; x < p; ++x)
    if ((x * m.back()) % p == 1) inv_lead = x;
  while (a.size() >= m.size()) {
    int factor = (a.back() * inv_lead) % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[i + shift] = ((a[i + shift] - factor * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly from_index(long index, int p, int len) {
  Poly out(static_cast<std::size_t>(len), 0);
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % p);
    index /= p;
  }
  return out;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(long q) {
  if (q < 2) return std::nullopt;
  long p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), k);
}

bool is_irreducible(const Poly& monic, int p) {
  int k = static_cast<int>(monic.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  for (int d = 1; d <= k / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly f = from_index(idx, p, d);
      f.push_back(1);
      if (poly_mod(monic, f, p).empty()) return false;
    }
  }
  return true;
}

Poly first_irreducible(int p, int k) {
  long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    Poly f = from_index(idx, p, k);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");
}

std::shared_ptr<const FiniteField> FiniteField::make(int p, int k, std::optional<Poly> modulus) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw Error("field degree must be positive");
  long q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  if (q > (1L << 22)) throw Error("finite field too large");
  Poly m;
  if (modulus) {
    m = *modulus;
    for (int& c : m) c = ((c % p) + p) % p;
    trim(m);
    if (static_cast<int>(m.size()) != k + 1 || m.back() != 1)
      throw Error("defining polynomial must be monic of degree " + std::to_string(k));
    if (!is_irreducible(m, p)) throw Error("defining polynomial is reducible");
  } else {
    m = first_irreducible(p, k);
  }
  return std::shared_ptr<const FiniteField>(new FiniteField(p, k, std::move(m)));
}

std::shared_ptr<const FiniteField> FiniteField::of_order(int q, std::optional<Poly> modulus) {
  auto pk = prime_power(q);
  if (!pk) throw Error(std::to_string(q) + " is not a prime power");
  return make(pk->first, pk->second, std::move(modulus));
}

FiniteField::FiniteField(int p, int k, Poly modulus) : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
  log_.assign(static_cast<std::size_t>(q_), -1);
  for (int g = 1; g < q_; ++g) {
    int x = 1;
    bool primitive = true;
    for (int e = 0; e < q_ - 1; ++e) {
      if (e > 0 && x == 1) {
        primitive = false;
        break;
      }
      exp_[static_cast<std::size_t>(e)] = x;
      x = slow_mul(x, g);
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }
  for (int e = 0; e < q_ - 1; ++e) log_[static_cast<std::size_t>(exp_[static_cast<std::size_t>(e)])] = e;
}

int FiniteField::slow_mul(int a, int b) const {
  Poly pa = from_index(a, p_, k_);
  Poly pb = from_index(b, p_, k_);
  Poly prod(static_cast<std::size_t>(2 * k_), 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  int out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

int FiniteField::add(int a, int b) const {
  int out = 0;
  int scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

int FiniteField::neg(int a) const {
  int out = 0;
  int scale = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  int e = (log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

int FiniteField::inv(int a) const {
  if (a == 0) throw SpecializationError("inverse of zero in F_" + std::to_string(q_));
  int e = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
  return exp_[static_cast<std::size_t>(e)];
}

int FiniteField::pow(int a, long e) const {
  if (a == 0) {
    if (e < 0) throw SpecializationError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long m = q_ - 1;
  long r = ((log_[static_cast<std::size_t>(a)] * (e % m)) % m + m) % m;
  return exp_[static_cast<std::size_t>(r)];
}

int FiniteField::from_integer(long n) const { return static_cast<int>(((n % p_) + p_) % p_); }

int FiniteField::log(int a) const {
  if (a == 0) throw SpecializationError("logarithm of zero");
  return log_[static_cast<std::size_t>(a)];
}

std::string FiniteField::element_to_string(int a) const {
  if (k_ == 1) return std::to_string(a);
  Poly c = from_index(a, p_, k_);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    int v = c[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || v != 1) out += std::to_string(v);
    if (i > 0) {
      if (v != 1) out += '*';
      out += 't';
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string FiniteField::modulus_string() const {
  std::string out;
  for (int i = k_; i >= 0; --i) {
    int v = modulus_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || v != 1) out += std::to_string(v);
    if (i > 0) {
      if (v != 1) out += '*';
      out += 't';
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace polylie::fields
