#include <polylie/coalgebra/coproduct.hpp>
#include <polylie/coalgebra/verify.hpp>
#include <polylie/error.hpp>

#include <functional>

namespace polylie::coalgebra {

namespace {

void check_bounds(int max_depth, int max_weight) {
  if (max_depth < 1 || max_weight < 1) throw Error("depth and weight bounds must be positive");
}

Report run(const std::string& name, int max_depth, int max_weight, const std::function<bool(const Symbol&)>& zero) {
  check_bounds(max_depth, max_weight);
  Report report;
  report.name = name;
  auto symbols = formal_symbols(max_depth, max_weight);
  long failing = 0;
  for (const auto& s : symbols)
    if (!zero(s)) {
      ++failing;
      report.fail("nonzero on " + s.to_string());
    }
  report.points = static_cast<long>(symbols.size());
  report.note("max_depth", std::to_string(max_depth));
  report.note("max_weight", std::to_string(max_weight));
  report.note("failing_symbols", std::to_string(failing));
  return report;
}

}  // namespace

std::vector<Symbol> formal_symbols(int max_depth, int max_weight) {
  std::vector<Symbol> out;
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<symbolic::Argument> args;
    for (int i = 1; i <= d; ++i) args.push_back(symbolic::Argument::atom("x" + std::to_string(i)));
    for (int w = d; w <= max_weight; ++w) {
      std::vector<int> idx(static_cast<std::size_t>(d), 1);
      std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
        if (pos + 1 == idx.size()) {
          idx[pos] = left;
          out.emplace_back(args, idx);
          return;
        }
        for (int n = 1; n <= left - static_cast<int>(idx.size() - pos - 1); ++n) {
          idx[pos] = n;
          rec(pos + 1, left - n);
        }
      };
      rec(0, w);
    }
  }
  return out;
}

Report verify_delta_squared(int max_depth, int max_weight, Variant variant) {
  auto name = variant == Variant::Prime ? "verify_delta_prime_squared" : "verify_delta_squared";
  return run(name, max_depth, max_weight, [variant](const Symbol& s) { return delta_squared(s, variant).is_zero(); });
}

Report verify_coassociativity(int max_depth, int max_weight) {
  return run("verify_coassociativity", max_depth, max_weight,
             [](const Symbol& s) { return coassociativity_defect(s).is_zero(); });
}

Report verify_mod_products(int max_depth, int max_weight) {
  return run("verify_mod_products", max_depth, max_weight,
             [](const Symbol& s) { return coproduct_mod_products(s) == delta(s); });
}

}  // namespace polylie::coalgebra
