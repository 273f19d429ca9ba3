#pragma once

#include <array>
#include <vector>

#include "hypforms/binary_form.hpp"

namespace hypforms {

/// Double-precision copy of an exact form. Coefficients are rounded once,
/// after all symbolic work has been done exactly.
class FloatForm {
 public:
  FloatForm() = default;
  explicit FloatForm(const BinaryForm& f);

  int degree() const { return degree_; }
  double operator()(double x, double y) const;

 private:
  int degree_ = 0;
  std::vector<double> coeffs_;
};

/// f_xx, f_xy, f_yy of a form of degree >= 2, ready for repeated evaluation.
class SecondPartials {
 public:
  explicit SecondPartials(const BinaryForm& f);
  /// (f_xx, f_xy, f_yy) at (x, y).
  std::array<double, 3> operator()(double x, double y) const;

 private:
  FloatForm xx_, xy_, yy_;
};

}  // namespace hypforms
