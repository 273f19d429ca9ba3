#include "hypforms/float_eval.hpp"

namespace hypforms {

FloatForm::FloatForm(const BinaryForm& f) : degree_(f.degree()) {
  coeffs_.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) coeffs_.push_back(c.get_d());
}

double FloatForm::operator()(double x, double y) const {
  double acc = 0.0, xp = 1.0;
  for (int i = degree_; i >= 0; --i) {
    acc = acc * y + coeffs_[i] * xp;
    xp *= x;
  }
  return acc;
}

SecondPartials::SecondPartials(const BinaryForm& f) {
  if (f.degree() < 2) throw DomainError("SecondPartials: degree must be at least 2");
  const BinaryForm fx = partial_x(f), fy = partial_y(f);
  xx_ = FloatForm(partial_x(fx));
  xy_ = FloatForm(partial_y(fx));
  yy_ = FloatForm(partial_y(fy));
}

std::array<double, 3> SecondPartials::operator()(double x, double y) const {
  return {xx_(x, y), xy_(x, y), yy_(x, y)};
}

}  // namespace hypforms
