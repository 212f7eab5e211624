#include <polylie/error.hpp>
#include <polylie/fields/rational.hpp>

#include <cctype>

namespace polylie::fields {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("invalid rational '" + s + "'", i);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw ParseError("invalid rational '" + s + "'", 0);
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  r.set_str(s, 10);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  r.canonicalize();
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace polylie::fields
