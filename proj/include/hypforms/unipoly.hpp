#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypforms/rat.hpp"

namespace hypforms {

/// Dense univariate polynomial over the rationals; coeffs()[i] multiplies t^i.
/// The coefficient vector never has a zero leading entry; the zero polynomial
/// is the empty vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs) : UniPoly(std::vector<Rat>(coeffs)) {}

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(unsigned power, const Rat& c = Rat(1));
  /// Monic polynomial with the given roots, each listed once per multiplicity.
  static UniPoly from_roots(std::span<const Rat> roots);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const Rat& leading() const;

  Rat operator()(const Rat& t) const;
  double operator()(double t) const;

  UniPoly derivative() const;
  UniPoly operator-() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rat& c, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly remainder(const UniPoly& a, const UniPoly& b);

/// Positive rational multiple of p with coprime integer coefficients.
/// The sign of p is preserved, which Sturm chains rely on.
UniPoly primitive_part(const UniPoly& p);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p / gcd(p, p'), same roots without multiplicity, primitive and sign-preserving.
UniPoly squarefree_part(const UniPoly& p);

std::string to_string(const UniPoly& p, char var = 't');

}  // namespace hypforms
