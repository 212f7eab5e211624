#pragma once

#include <polylie/coalgebra/cobracket.hpp>

#include <array>
#include <string>
#include <vector>

namespace polylie::coalgebra {

/// Index data i_0..i_{k+1}, j_0..j_k with i_a <= j_a < i_{a+1},
/// i_0 = j_0 = 0 and i_{k+1} = d+1.
struct IndexSequence {
  std::vector<int> i;
  std::vector<int> j;

  int k() const { return static_cast<int>(j.size()) - 1; }
  /// "(0,0|1,1|2)".
  std::string to_string() const;
  friend bool operator==(const IndexSequence&, const IndexSequence&) = default;
};

std::vector<IndexSequence> coproduct_sequences(int d);

/// A commutative product of generators, kept sorted; empty means 1.
using Product = std::vector<Symbol>;

Product multiply(const Product& a, const Product& b);
std::string to_string(const Product& p);

/// left (x) right. For the coproduct of a generator, left has at most one factor.
struct Tensor2 {
  Product left;
  Product right;
  friend bool operator<(const Tensor2& a, const Tensor2& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  }
  friend bool operator==(const Tensor2&, const Tensor2&) = default;
};

struct Tensor3 {
  std::array<Product, 3> parts;
  friend bool operator<(const Tensor3& a, const Tensor3& b) { return a.parts < b.parts; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

std::string key_to_string(const Tensor2& t);
std::string key_to_string(const Tensor3& t);

using CoproductElement = symbolic::LinearCombination<Tensor2>;
using Coproduct3Element = symbolic::LinearCombination<Tensor3>;

/// One summand of the coproduct of [x_1..x_d | t_1..t_d]:
///   left (x) sign * prod exp(base_a * slot_a) * prod right_a.
struct CoproductTerm {
  IndexSequence sequence;
  int sign = 1;
  /// Empty args when k = 0 (the unit).
  SeriesTerm left;
  std::vector<std::pair<symbolic::Argument, TForm>> exponentials;
  std::vector<SeriesTerm> right;

  std::string to_string() const;
};

std::vector<CoproductTerm> coproduct_terms(const SeriesTerm& x);

/// Coefficient-extracted coproduct of a generator, factors normalized.
/// Logarithms are primitive.
CoproductElement coproduct(const Symbol& s);
CoproductElement coproduct(const LinComb& e);
/// Multiplicative extension to products of generators.
CoproductElement coproduct(const Product& p);

/// Terms whose left side is a generator and right side a single generator,
/// read as wedges left ^ right.
WedgeElement coproduct_mod_products(const Symbol& s);
WedgeElement coproduct_mod_products(const LinComb& e);

/// (Delta (x) id) Delta - (id (x) Delta) Delta.
Coproduct3Element coassociativity_defect(const Symbol& s);

}  // namespace polylie::coalgebra
