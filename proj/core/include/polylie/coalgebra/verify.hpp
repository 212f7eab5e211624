#pragma once

#include <polylie/coalgebra/cobracket.hpp>
#include <polylie/report.hpp>

#include <vector>

namespace polylie::coalgebra {

/// [x1..xd]_{n1..nd} with distinct atoms, every n_i >= 1, d <= max_depth and
/// weight <= max_weight, ordered by depth, then weight, then index.
std::vector<Symbol> formal_symbols(int max_depth, int max_weight);

/// delta^2 (or delta'^2) is zero on every formal symbol in the bounds.
Report verify_delta_squared(int max_depth, int max_weight, Variant variant = Variant::Standard);

/// The coassociativity defect vanishes on every formal symbol in the bounds.
Report verify_coassociativity(int max_depth, int max_weight);

/// coproduct_mod_products equals delta on every formal symbol in the bounds.
Report verify_mod_products(int max_depth, int max_weight);

}  // namespace polylie::coalgebra
