#include "hypforms/rat.hpp"

#include <cctype>
#include <cmath>

namespace hypforms {

Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw DomainError("malformed rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(parse_int(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den)) throw DomainError("malformed rational: '" + std::string(text) + "'");
  Int d = parse_int(den);
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rat r(parse_int(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_fraction_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat from_double(double v) {
  if (!std::isfinite(v)) throw DomainError("from_double: non-finite value");
  return Rat(v);
}

Rat pow(const Rat& base, unsigned exp) {
  Rat result(1);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  result = Rat(num, den);
  result.canonicalize();
  return result;
}

}  // namespace hypforms
