#pragma once

#include <polylie/symbolic/series.hpp>

namespace polylie::symbolic {

namespace detail {

TPoly product_of_forms(const std::vector<TForm>& forms, int max_degree);

}  // namespace detail

template <class Key>
TMap<Key> combine_series(const std::vector<SeriesPiece<Key>>& pieces, int max_degree) {
  std::map<TForm, int> lcm;
  std::vector<std::pair<Rational, std::map<TForm, int>>> normalized;
  normalized.reserve(pieces.size());
  for (const auto& piece : pieces) {
    Rational scale = piece.scalar;
    std::map<TForm, int> own;
    for (const TForm& f : piece.denominators) {
      auto [s, g] = f.normalized();
      scale /= s;
      ++own[g];
    }
    for (const auto& [g, k] : own) lcm[g] = std::max(lcm[g], k);
    normalized.emplace_back(scale, std::move(own));
  }
  int lcm_degree = 0;
  for (const auto& [g, k] : lcm) lcm_degree += k;
  int top = max_degree + lcm_degree;

  TMap<Key> numerator;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& piece = pieces[i];
    const auto& [scale, own] = normalized[i];
    if (scale == 0) continue;
    std::vector<TForm> factors = piece.numerators;
    for (const auto& [g, k] : lcm) {
      auto it = own.find(g);
      int have = it == own.end() ? 0 : it->second;
      for (int r = have; r < k; ++r) factors.push_back(g);
    }
    TPoly multiplier = detail::product_of_forms(factors, top);
    if (multiplier.is_zero()) continue;
    TMap<Key> body = piece.body(top);
    for (const auto& [k, p] : body) {
      TPoly q = TPoly::multiply(p, multiplier, top);
      tmap_add(numerator, k, q, scale);
    }
  }
  if (lcm_degree == 0) {
    TMap<Key> out;
    for (const auto& [k, p] : numerator) {
      TPoly q = p.truncated(max_degree);
      if (!q.is_zero()) out.emplace(k, std::move(q));
    }
    return out;
  }
  TMap<Key> out;
  for (const auto& [k, p] : numerator) {
    TPoly q = p;
    for (const auto& [g, mult] : lcm)
      for (int r = 0; r < mult; ++r) q = q.divided_by(g);
    q = q.truncated(max_degree);
    if (!q.is_zero()) out.emplace(k, std::move(q));
  }
  return out;
}

}  // namespace polylie::symbolic
