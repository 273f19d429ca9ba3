#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hypforms/rat.hpp"
#include "hypforms/unipoly.hpp"

namespace hypforms {

/// Homogeneous polynomial sum_i a_i x^{D-i} y^i of nominal degree D.
///
/// The zero form keeps its nominal degree so that add/mul stay total; the
/// calculus and certification layers reject it where it has no meaning.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0, {Rat(0)}) {}
  /// coeffs must have exactly degree + 1 entries (a_0 .. a_D).
  BinaryForm(int degree, std::vector<Rat> coeffs);

  static BinaryForm zero(int degree);
  /// c x^{D-i} y^i.
  static BinaryForm monomial(int degree, int y_power, const Rat& c = Rat(1));

  int degree() const { return degree_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of x^{D-i} y^i.
  const Rat& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  bool is_zero() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  int degree_;
  std::vector<Rat> coeffs_;
};

/// The linear form a x + b y, (a, b) != (0, 0).
class LinearForm {
 public:
  LinearForm(Rat a, Rat b);
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  BinaryForm form() const;

 private:
  Rat a_, b_;
};

Rat eval(const BinaryForm& f, const Rat& x, const Rat& y);

BinaryForm add(const BinaryForm& f, const BinaryForm& g);
BinaryForm sub(const BinaryForm& f, const BinaryForm& g);
BinaryForm scale(const BinaryForm& f, const Rat& c);
BinaryForm mul(const BinaryForm& f, const BinaryForm& g);
BinaryForm power(const BinaryForm& f, unsigned k);

inline BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) { return add(f, g); }
inline BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return sub(f, g); }
inline BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) { return mul(f, g); }
inline BinaryForm operator*(const Rat& c, const BinaryForm& f) { return scale(f, c); }
inline BinaryForm operator-(const BinaryForm& f) { return scale(f, Rat(-1)); }

BinaryForm partial_x(const BinaryForm& f);
BinaryForm partial_y(const BinaryForm& f);

/// x f_y - y f_x. On the unit circle this is dF/dphi for F(phi) = f(cos phi, sin phi).
BinaryForm rotational_derivative(const BinaryForm& f);

/// x f_x + y f_y == D f, checked exactly.
bool euler_check(const BinaryForm& f);

enum class Chart { y_equals_1, x_equals_1 };

/// y=1: t -> f(t, 1); x=1: t -> f(1, t).
UniPoly restrict(const BinaryForm& f, Chart chart);

/// f(m00 x + m01 y, m10 x + m11 y).
BinaryForm compose_linear(const BinaryForm& f, const Rat& m00, const Rat& m01, const Rat& m10,
                          const Rat& m11);

/// Polynomial text such as "x^3 - x*y^2"; the zero form falls back to the
/// coefficient-vector format so that parse_form(format_form(f)) == f always.
std::string format_form(const BinaryForm& f);

/// "D: a_0, a_1, ..., a_D".
std::string format_coeffs(const BinaryForm& f);

/// Accepts the polynomial grammar (sums of signed terms, `*`, `^`, parentheses,
/// rationals p/q, variables x and y) or the coefficient-vector format.
/// Throws DomainError on malformed text, empty input or mixed degrees.
BinaryForm parse_form(std::string_view text);

}  // namespace hypforms
