#include <polylie/error.hpp>
#include <polylie/numerics/polylog.hpp>

#include <cmath>
#include <deque>
#include <mutex>
#include <numbers>
#include <vector>

namespace polylie::numerics {

namespace {

constexpr int kMaxTerms = 400;
constexpr int kLogTerms = 90;

std::mutex& coefficient_mutex() {
  static std::mutex m;
  return m;
}

// zeta(n - k) / k! for k = 0..kLogTerms, skipping k = n - 1.
const std::vector<double>& log_coefficients(int n) {
  static std::deque<std::vector<double>> cache;
  std::lock_guard lock(coefficient_mutex());
  if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
  auto& out = cache[n];
  if (!out.empty()) return out;
  out.assign(kLogTerms + 1, 0.0);
  double factorial = 1;
  for (int k = 0; k <= kLogTerms; ++k) {
    if (k > 0) factorial *= k;
    int s = n - k;
    if (s == 1) continue;
    double zeta;
    if (s >= 2) {
      zeta = std::riemann_zeta(static_cast<double>(s));
    } else if (s == 0) {
      zeta = -0.5;
    } else {
      // zeta(-m) = (-1)^m B_{m+1} / (m+1)
      int m = -s;
      Rational b = bernoulli(m + 1) / (m + 1);
      if (m % 2 == 1) b = -b;
      zeta = b.get_d();
    }
    out[k] = zeta / factorial;
  }
  return out;
}

Complex direct_series(int n, Complex z) {
  Complex sum = 0;
  Complex power = 1;
  for (int k = 1; k <= kMaxTerms; ++k) {
    power *= z;
    Complex term = power / std::pow(static_cast<double>(k), n);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) return sum;
  }
  throw Error("polylog series did not converge at |z| = " + std::to_string(std::abs(z)));
}

Complex log_series(int n, Complex z) {
  Complex mu = std::log(z);
  const auto& c = log_coefficients(n);
  double harmonic = 0;
  for (int j = 1; j < n; ++j) harmonic += 1.0 / j;
  double factorial = 1;
  for (int j = 2; j < n; ++j) factorial *= j;
  Complex sum = std::pow(mu, n - 1) / factorial * (harmonic - std::log(-mu));
  Complex power = 1;
  for (int k = 0; k <= kLogTerms; ++k) {
    if (k > 0) power *= mu;
    if (k == n - 1) continue;
    Complex term = c[k] * power;
    sum += term;
  }
  return sum;
}

Complex bernoulli_polynomial(int n, Complex x) {
  Complex sum = 0;
  for (int k = 0; k <= n; ++k)
    sum += fields::binomial(n, k).get_d() * bernoulli(k).get_d() * std::pow(x, n - k);
  return sum;
}

}  // namespace

const Rational& bernoulli(int n) {
  static std::deque<Rational> table{Rational(1)};
  static std::mutex m;
  std::lock_guard lock(m);
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    Rational sum = 0;
    for (int k = 0; k < m; ++k) sum += Rational(fields::binomial(m + 1, k)) * table[k];
    Rational b = -sum / (m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

Complex polylog(int n, Complex z) {
  if (n < 1) throw Error("polylog needs n >= 1");
  if (z == Complex(0)) return 0;
  // Points on the cut are taken as limits from above.
  if (z.imag() == 0) z = Complex(z.real(), 0.0);
  if (n == 1) return -std::log(Complex(1 - z.real(), -z.imag()));
  double r = std::abs(z);
  if (r <= 0.5) return direct_series(n, z);
  if (r < 2) return log_series(n, z);
  constexpr double two_pi = 2 * std::numbers::pi;
  Complex two_pi_i(0, two_pi);
  double factorial = 1;
  for (int j = 2; j <= n; ++j) factorial *= j;
  Complex u = 0.5 + std::log(-z) / two_pi_i;
  Complex rest = -std::pow(two_pi_i, n) / factorial * bernoulli_polynomial(n, u);
  double sign = (n % 2 == 0) ? -1 : 1;
  return sign * direct_series(n, Complex(1) / z) + rest;
}

double single_valued_L(int n, Complex z) {
  if (n < 1) throw Error("single-valued polylog needs n >= 1");
  if (z == Complex(0)) return 0;
  double log_abs = std::log(std::abs(z));
  Complex sum = 0;
  double factor = 1;  // 2^r / r!
  double power = 1;   // log^r |z|
  for (int r = 0; r < n; ++r) {
    if (r > 0) {
      factor *= 2.0 / r;
      power *= log_abs;
    }
    const Rational& b = bernoulli(r);
    if (b == 0) continue;
    sum += factor * b.get_d() * power * polylog(n - r, z);
  }
  return (n % 2 == 1) ? sum.real() : sum.imag();
}

}  // namespace polylie::numerics
