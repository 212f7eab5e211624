#include <polylie/error.hpp>
#include <polylie/fields/finite_field.hpp>
#include <polylie/homology/bloch.hpp>

#include <chrono>
#include <map>
#include <set>

namespace polylie::homology {

Matrix Presentation::matrix() const {
  Matrix out;
  out.reserve(relations.size());
  for (const auto& row : relations) out.emplace_back(row.begin(), row.end());
  return out;
}

Presentation build_b2_presentation(int q) {
  if (q <= 3) throw Error("the weight-two presentation needs q > 3");
  auto field = fields::FiniteField::of_order(q);
  const int one = field->from_integer(1);
  std::vector<int> elements;
  std::map<int, std::size_t> column;
  Presentation out;
  for (int a = 0; a < q; ++a) {
    if (a == 0 || a == one) continue;
    column[a] = elements.size();
    elements.push_back(a);
    out.generators.push_back("[" + field->element_to_string(a) + "]_2");
  }
  auto usable = [&](int v) { return v != 0 && v != one; };
  std::set<std::vector<long>> seen;
  for (int x : elements)
    for (int y : elements) {
      int xy = field->mul(x, y);
      int d = field->sub(one, xy);
      if (d == 0) continue;
      int dinv = field->inv(d);
      int a4 = field->mul(field->mul(y, field->sub(one, x)), dinv);
      int a5 = field->mul(field->mul(x, field->sub(one, y)), dinv);
      if (!usable(xy) || !usable(a4) || !usable(a5)) continue;
      std::vector<long> row(elements.size(), 0);
      row[column[x]] += 1;
      row[column[y]] += 1;
      row[column[xy]] -= 1;
      row[column[a4]] -= 1;
      row[column[a5]] -= 1;
      if (seen.insert(row).second) out.relations.push_back(std::move(row));
    }
  return out;
}

bool is_23_unit(const Rational& r) {
  if (r == 0) return false;
  for (BigInt n : {BigInt(abs(r.get_num())), BigInt(r.get_den())}) {
    for (int p : {2, 3})
      while (n % p == 0) n /= p;
    if (n != 1) return false;
  }
  return true;
}

H1Row h1_order(int q) {
  auto start = std::chrono::steady_clock::now();
  Presentation p = build_b2_presentation(q);
  H1Row row;
  row.q = q;
  row.generators = static_cast<long>(p.generators.size());
  row.relations = static_cast<long>(p.relations.size());
  row.snf = snf(p.matrix(), row.generators);
  if (row.snf.order) {
    Rational ratio(*row.snf.order, q + 1);
    ratio.canonicalize();
    row.ratio = ratio;
    row.exact_match = ratio == 1;
    row.match_up_to_2_3 = is_23_unit(ratio);
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string tsv_header() {
  return "q\tgenerators\trelations\tinvariant_factors\th1_order\tq_plus_1\tratio\tmatch_up_to_2_3\texact_match";
}

std::string to_tsv(const H1Row& row) {
  std::string factors;
  for (const auto& d : row.snf.invariant_factors) {
    if (d == 1) continue;
    if (!factors.empty()) factors += ",";
    factors += d.get_str();
  }
  if (factors.empty()) factors = "-";
  return std::to_string(row.q) + "\t" + std::to_string(row.generators) + "\t" + std::to_string(row.relations) + "\t" +
         factors + "\t" + row.snf.order_string() + "\t" + std::to_string(row.q + 1) + "\t" +
         (row.ratio ? fields::to_string(*row.ratio) : "-") + "\t" + (row.match_up_to_2_3 ? "yes" : "no") + "\t" +
         (row.exact_match ? "yes" : "no");
}

}  // namespace polylie::homology
