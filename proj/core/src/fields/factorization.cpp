#include <polylie/error.hpp>
#include <polylie/fields/factorization.hpp>

namespace polylie::fields {

namespace {

BigInt pollard_rho(const BigInt& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt x = 2;
    BigInt y = 2;
    BigInt d = 1;
    auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      BigInt diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split(const BigInt& n, std::map<BigInt, long>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  BigInt d = pollard_rho(n);
  split(d, out);
  split(BigInt(n / d), out);
}

}  // namespace

std::map<BigInt, long> factor_integer(BigInt n) {
  std::map<BigInt, long> out;
  n = abs(n);
  if (n == 0) throw SpecializationError("cannot factor zero");
  for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[BigInt(p)];
      n /= p;
    }
  }
  split(n, out);
  return out;
}

Factorization factor(const Rational& r) {
  if (r == 0) throw SpecializationError("cannot factor zero");
  Factorization f;
  f.sign = r < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_integer(r.get_num())) f.primes[p] += e;
  for (const auto& [p, e] : factor_integer(r.get_den())) f.primes[p] -= e;
  return f;
}

Rational Factorization::recompose() const {
  Rational out = sign;
  for (const auto& [p, e] : primes) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) out /= power;
    else out *= power;
  }
  return out;
}

std::map<std::pair<BigInt, BigInt>, Rational> wedge_coordinates(const std::vector<WedgeInput>& terms) {
  std::map<std::pair<BigInt, BigInt>, Rational> coords;
  for (const auto& t : terms) {
    if (is_zero(t.a) || is_zero(t.b)) throw SpecializationError("zero argument in wedge of units");
    const auto* a = std::get_if<Rational>(&t.a);
    const auto* b = std::get_if<Rational>(&t.b);
    if (!a || !b) throw Error("prime coordinates exist only over Q");
    Factorization fa = factor(*a);
    Factorization fb = factor(*b);
    for (const auto& [p, e] : fa.primes) {
      for (const auto& [q, f] : fb.primes) {
        if (p == q) continue;
        Rational c = t.coeff * Rational(e) * Rational(f);
        auto key = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
        Rational& slot = coords[key];
        slot += p < q ? c : Rational(-c);
        if (slot == 0) coords.erase(key);
      }
    }
  }
  return coords;
}

bool wedge_exact_check(const std::vector<WedgeInput>& terms) {
  bool finite = false;
  for (const auto& t : terms) {
    if (is_zero(t.a) || is_zero(t.b)) throw SpecializationError("zero argument in wedge of units");
    if (std::holds_alternative<FqElement>(t.a)) finite = true;
  }
  if (finite) return true;
  return wedge_coordinates(terms).empty();
}

}  // namespace polylie::fields
