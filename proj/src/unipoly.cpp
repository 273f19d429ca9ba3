#include "hypforms/unipoly.hpp"

#include <sstream>

namespace hypforms {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(unsigned power, const Rat& c) {
  std::vector<Rat> v(power + 1, Rat(0));
  v[power] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const Rat> roots) {
  UniPoly p = constant(Rat(1));
  for (const auto& r : roots) p = p * UniPoly{-r, Rat(1)};
  return p;
}

const Rat& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat UniPoly::operator()(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v(coeffs_);
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rat& c, const UniPoly& p) {
  std::vector<Rat> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rat> q(a.degree() - db + 1, Rat(0));
  const Rat lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rat factor = r[i] * lead_inv;
    q[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= factor * b.coeffs()[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly remainder(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Int den_lcm(1), num_gcd(0);
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  return scale * p;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = primitive_part(a), y = primitive_part(b);
  while (!y.is_zero()) {
    UniPoly r = primitive_part(remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return (1 / x.leading()) * x;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  UniPoly g = gcd(p, p.derivative());
  UniPoly q = divmod(p, g).first;
  return primitive_part(q);
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeffs()[i];
    if (c == 0) continue;
    Rat mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) os << mag.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace hypforms
