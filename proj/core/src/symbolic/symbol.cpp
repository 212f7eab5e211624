#include <polylie/error.hpp>
#include <polylie/symbolic/symbol.hpp>

namespace polylie::symbolic {

Symbol::Symbol(std::vector<Argument> a, std::vector<int> n) : args(std::move(a)), index(std::move(n)) {
  if (args.size() != index.size() || args.empty()) throw Error("symbol needs matching, nonempty argument and index lists");
}

int Symbol::weight() const {
  if (is_log()) return 1;
  int w = 0;
  for (int n : index) w += n;
  return w;
}

bool Symbol::has_zero() const {
  for (const auto& a : args)
    if (a.is_zero()) return true;
  return false;
}

bool Symbol::has_infinity() const {
  for (const auto& a : args)
    if (a.is_infinity()) return true;
  return false;
}

std::string Symbol::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i].to_string();
  out += ";";
  for (std::size_t i = 0; i < index.size(); ++i) out += (i ? "," : "") + std::to_string(index[i]);
  return out + "]";
}

bool operator<(const Symbol& a, const Symbol& b) {
  int wa = a.weight();
  int wb = b.weight();
  if (wa != wb) return wa < wb;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size();
  if (a.index != b.index) return a.index < b.index;
  return a.args < b.args;
}

std::optional<std::string> admissibility_violation(const std::vector<Argument>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    Argument prod;
    bool zero = false;
    bool inf = false;
    for (std::size_t j = i; j < args.size(); ++j) {
      zero = zero || args[j].is_zero();
      inf = inf || args[j].is_infinity();
      std::string span = "x" + std::to_string(i + 1) + (j > i ? "..x" + std::to_string(j + 1) : std::string());
      if (zero && inf) return "product " + span + " involves 0*inf";
      if (!zero && !inf) {
        prod = prod * args[j];
        if (prod.is_one()) return "product " + span + " equals 1";
      }
    }
  }
  return std::nullopt;
}

bool admissible(const std::vector<Argument>& args) { return !admissibility_violation(args).has_value(); }

void check_symbol(const Symbol& s) {
  if (s.is_log()) {
    const Argument& x = s.args[0];
    if (x.is_zero() || x.is_infinity()) throw UndefinedSymbolError("[" + x.to_string() + "]_0 is not defined");
    return;
  }
  for (int n : s.index)
    if (n < 1) throw AdmissibilityError("index entries must be positive in " + s.to_string());
  if (auto why = admissibility_violation(s.args)) throw AdmissibilityError(s.to_string() + ": " + *why);
  if (s.weight() == 1 && s.args[0].is_infinity())
    throw UndefinedSymbolError("[inf]_1 is not defined");
}

}  // namespace polylie::symbolic
