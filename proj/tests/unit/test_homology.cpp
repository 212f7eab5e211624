#include <doctest.h>

#include <polylie/error.hpp>
#include <polylie/homology/bloch.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace polylie;
using namespace polylie::homology;

namespace {

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    BigInt term = m[0][j] * determinant(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors as quotients of gcds of k x k minors.
std::vector<BigInt> determinantal_factors(const Matrix& m, std::size_t cols) {
  std::size_t rows = m.size();
  std::vector<BigInt> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> sub;
        for (auto i : r) {
          std::vector<BigInt> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        BigInt det = determinant(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
      }
    d.push_back(g);
  }
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] == 0 ? BigInt(0) : BigInt(d[k] / d[k - 1]));
  return out;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-6, 6);
  Matrix m(rows, std::vector<BigInt>(cols));
  for (auto& row : m)
    for (auto& v : row) v = entry(rng);
  return m;
}

Matrix permuted(const Matrix& m, std::mt19937& rng) {
  std::vector<std::size_t> rp(m.size()), cp(m.front().size());
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  Matrix out(m.size(), std::vector<BigInt>(cp.size()));
  for (std::size_t i = 0; i < rp.size(); ++i)
    for (std::size_t j = 0; j < cp.size(); ++j) out[i][j] = m[rp[i]][cp[j]];
  return out;
}

// Five-term rows over the prime field F_p, by plain modular arithmetic.
std::set<std::vector<long>> prime_field_rows(int p) {
  auto inv = [p](long a) {
    for (long b = 1; b < p; ++b)
      if (a * b % p == 1) return b;
    return 0L;
  };
  std::set<std::vector<long>> rows;
  auto ok = [](long v) { return v != 0 && v != 1; };
  for (long x = 2; x < p; ++x)
    for (long y = 2; y < p; ++y) {
      long xy = x * y % p;
      long d = ((1 - xy) % p + p) % p;
      if (d == 0) continue;
      long a4 = y * ((1 - x + p) % p) % p * inv(d) % p;
      long a5 = x * ((1 - y + p) % p) % p * inv(d) % p;
      if (!ok(xy) || !ok(a4) || !ok(a5)) continue;
      std::vector<long> row(p - 2, 0);
      row[x - 2] += 1;
      row[y - 2] += 1;
      row[xy - 2] -= 1;
      row[a4 - 2] -= 1;
      row[a5 - 2] -= 1;
      rows.insert(row);
    }
  return rows;
}

}  // namespace

TEST_CASE("snf examples") {
  auto r = snf({{2, 0}, {0, 3}});
  CHECK(r.invariant_factors == std::vector<BigInt>{1, 6});
  CHECK(r.order_string() == "6");
  auto z = snf({{0, 0}, {0, 0}});
  CHECK(z.invariant_factors == std::vector<BigInt>{0, 0});
  CHECK(z.infinite());
  CHECK(z.order_string() == "INFINITE");
  auto id = snf({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(id.invariant_factors == std::vector<BigInt>{1, 1, 1});
  CHECK(*id.order == 1);
  CHECK(snf({}, 2).infinite());
}

TEST_CASE("snf agrees with determinantal divisors") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    Matrix m = random_matrix(rng, rows, cols);
    if (trial % 5 == 0)
      for (auto& row : m) row[0] = 2 * row[cols - 1];
    auto r = snf(m);
    CHECK(r.invariant_factors == determinantal_factors(m, cols));
    for (std::size_t k = 1; k < r.invariant_factors.size(); ++k)
      if (r.invariant_factors[k - 1] != 0) CHECK(r.invariant_factors[k] % r.invariant_factors[k - 1] == 0);
  }
}

TEST_CASE("snf is invariant under permutations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 6, 4);
    auto base = snf(m).invariant_factors;
    for (int k = 0; k < 3; ++k) CHECK(snf(permuted(m, rng)).invariant_factors == base);
  }
}

TEST_CASE("b2 presentation") {
  CHECK(build_b2_presentation(5).generators.size() == 3);
  CHECK(build_b2_presentation(4).generators.size() == 2);
  CHECK_THROWS_AS(build_b2_presentation(3), Error);
  CHECK_THROWS_AS(build_b2_presentation(6), Error);
  for (int p : {5, 7, 11, 13}) {
    auto pres = build_b2_presentation(p);
    CHECK(pres.generators.size() == static_cast<std::size_t>(p - 2));
    std::set<std::vector<long>> got(pres.relations.begin(), pres.relations.end());
    CHECK(got.size() == pres.relations.size());
    CHECK(got == prime_field_rows(p));
  }
}

TEST_CASE("h1 order for small q matches the minor oracle") {
  for (int p : {5, 7}) {
    auto pres = build_b2_presentation(p);
    auto factors = determinantal_factors(pres.matrix(), pres.generators.size());
    BigInt order = 1;
    for (const auto& d : factors) order *= d;
    auto row = h1_order(p);
    REQUIRE(row.snf.order);
    CHECK(*row.snf.order == order);
    CHECK(*row.snf.order == p + 1);
  }
}

TEST_CASE("h1 order is independent of generator order") {
  std::mt19937 rng(5);
  for (int q : {9, 11, 13}) {
    auto m = build_b2_presentation(q).matrix();
    auto base = snf(m).order_string();
    CHECK(snf(permuted(m, rng)).order_string() == base);
  }
}

TEST_CASE("h1 order equals q + 1") {
  for (int q : {5, 7, 9, 11, 13, 17, 19, 23}) {
    auto row = h1_order(q);
    CHECK_MESSAGE(row.match_up_to_2_3, q);
    CHECK_MESSAGE(row.exact_match, q);
  }
}

TEST_CASE("2,3 units") {
  CHECK(is_23_unit(Rational(1)));
  CHECK(is_23_unit(Rational(4, 3)));
  CHECK(!is_23_unit(Rational(5, 6)));
  CHECK(!is_23_unit(Rational(0)));
}
