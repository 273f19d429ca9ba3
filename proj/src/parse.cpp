#include <cctype>
#include <map>
#include <utility>

#include "hypforms/binary_form.hpp"

namespace hypforms {

namespace {

// Sparse bivariate polynomial keyed by (x power, y power).
using Poly = std::map<std::pair<int, int>, Rat>;

constexpr int kMaxExponent = 4096;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      auto& slot = out[{ea.first + eb.first, ea.second + eb.second}];
      slot += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void poly_add_into(Poly& acc, const Poly& b, int sign) {
  for (const auto& [e, c] : b) acc[e] += sign > 0 ? c : Rat(-c);
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Poly parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty input");
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("parse_form: " + what + " at offset " + std::to_string(pos_) + " in '" +
                      std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc;
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    poly_add_into(acc, term(), sign);
    while (true) {
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        break;
      poly_add_into(acc, term(), sign);
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc = poly_mul(acc, factor());
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (accept('^')) {
      skip_ws();
      Int e = integer();
      if (e > kMaxExponent) fail("exponent too large");
      Poly acc{{{0, 0}, Rat(1)}};
      for (long i = 0; i < e.get_si(); ++i) acc = poly_mul(acc, base);
      return acc;
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      return Poly{{c == 'x' ? std::pair{1, 0} : std::pair{0, 1}, Rat(1)}};
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      Rat value(num);
      if (accept('/')) {
        skip_ws();
        Int den = integer();
        if (den == 0) fail("zero denominator");
        value = Rat(num, den);
        value.canonicalize();
      }
      if (value == 0) return {};
      return Poly{{{0, 0}, value}};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Int integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

BinaryForm parse_coeff_vector(std::string_view text) {
  const auto colon = text.find(':');
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  std::string_view head = trim(text.substr(0, colon));
  if (head.empty()) throw DomainError("parse_form: missing degree before ':'");
  for (char ch : head)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw DomainError("parse_form: bad degree '" + std::string(head) + "'");
  const int degree = std::stoi(std::string(head));
  std::vector<Rat> coeffs;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    if (item.empty()) throw DomainError("parse_form: empty coefficient in '" + std::string(text) + "'");
    coeffs.push_back(parse_rat(item));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return BinaryForm(degree, std::move(coeffs));
}

}  // namespace

BinaryForm parse_form(std::string_view text) {
  if (text.find(':') != std::string_view::npos) return parse_coeff_vector(text);
  const Poly p = Parser(text).parse();
  if (p.empty()) throw DomainError("parse_form: polynomial is identically zero; use the 'D: a_0, ..., a_D' format");
  const int degree = p.begin()->first.first + p.begin()->first.second;
  std::vector<Rat> coeffs(degree + 1, Rat(0));
  for (const auto& [e, c] : p) {
    if (e.first + e.second != degree)
      throw DomainError("parse_form: mixed-degree monomials (degree " + std::to_string(degree) + " and " +
                        std::to_string(e.first + e.second) + ") in '" + std::string(text) + "'");
    coeffs[e.second] = c;
  }
  return BinaryForm(degree, std::move(coeffs));
}

}  // namespace hypforms
