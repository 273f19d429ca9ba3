#include "hypforms/binary_form.hpp"

#include <sstream>

namespace hypforms {

BinaryForm::BinaryForm(int degree, std::vector<Rat> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw DomainError("BinaryForm: negative degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw DomainError("BinaryForm: expected " + std::to_string(degree + 1) + " coefficients, got " +
                      std::to_string(coeffs_.size()));
}

BinaryForm BinaryForm::zero(int degree) {
  if (degree < 0) throw DomainError("BinaryForm: negative degree");
  return BinaryForm(degree, std::vector<Rat>(degree + 1, Rat(0)));
}

BinaryForm BinaryForm::monomial(int degree, int y_power, const Rat& c) {
  if (y_power < 0 || y_power > degree) throw DomainError("BinaryForm::monomial: bad y power");
  BinaryForm f = zero(degree);
  f.coeffs_[y_power] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

LinearForm::LinearForm(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 && b_ == 0) throw DomainError("LinearForm: (a, b) = (0, 0)");
}

BinaryForm LinearForm::form() const { return BinaryForm(1, {a_, b_}); }

Rat eval(const BinaryForm& f, const Rat& x, const Rat& y) {
  // Horner in y from the top, carrying the matching power of x.
  const int d = f.degree();
  Rat acc(0), xp(1);
  for (int i = d; i >= 0; --i) {
    acc = acc * y;
    acc += f.coeff(i) * xp;
    xp *= x;
  }
  return acc;
}

BinaryForm add(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree())
    throw DomainError("add: degree mismatch (" + std::to_string(f.degree()) + " vs " +
                      std::to_string(g.degree()) + ")");
  std::vector<Rat> c(f.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += g.coeffs()[i];
  return BinaryForm(f.degree(), std::move(c));
}

BinaryForm sub(const BinaryForm& f, const BinaryForm& g) { return add(f, scale(g, Rat(-1))); }

BinaryForm scale(const BinaryForm& f, const Rat& c) {
  std::vector<Rat> v(f.coeffs());
  for (auto& a : v) a *= c;
  return BinaryForm(f.degree(), std::move(v));
}

BinaryForm mul(const BinaryForm& f, const BinaryForm& g) {
  const int d = f.degree() + g.degree();
  std::vector<Rat> c(d + 1, Rat(0));
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; j <= g.degree(); ++j) c[i + j] += f.coeff(i) * g.coeff(j);
  }
  return BinaryForm(d, std::move(c));
}

BinaryForm power(const BinaryForm& f, unsigned k) {
  BinaryForm result(0, {Rat(1)});
  for (unsigned i = 0; i < k; ++i) result = mul(result, f);
  return result;
}

namespace {

void require_positive_degree(const BinaryForm& f, const char* op) {
  if (f.degree() < 1) throw DomainError(std::string(op) + ": degree 0 form");
}

}  // namespace

BinaryForm partial_x(const BinaryForm& f) {
  require_positive_degree(f, "partial_x");
  const int d = f.degree();
  std::vector<Rat> c(d);
  for (int i = 0; i < d; ++i) c[i] = f.coeff(i) * (d - i);
  return BinaryForm(d - 1, std::move(c));
}

BinaryForm partial_y(const BinaryForm& f) {
  require_positive_degree(f, "partial_y");
  const int d = f.degree();
  std::vector<Rat> c(d);
  for (int i = 1; i <= d; ++i) c[i - 1] = f.coeff(i) * i;
  return BinaryForm(d - 1, std::move(c));
}

BinaryForm rotational_derivative(const BinaryForm& f) {
  require_positive_degree(f, "rotational_derivative");
  static const BinaryForm x(1, {Rat(1), Rat(0)});
  static const BinaryForm y(1, {Rat(0), Rat(1)});
  return mul(x, partial_y(f)) - mul(y, partial_x(f));
}

bool euler_check(const BinaryForm& f) {
  require_positive_degree(f, "euler_check");
  static const BinaryForm x(1, {Rat(1), Rat(0)});
  static const BinaryForm y(1, {Rat(0), Rat(1)});
  return mul(x, partial_x(f)) + mul(y, partial_y(f)) == scale(f, Rat(f.degree()));
}

UniPoly restrict(const BinaryForm& f, Chart chart) {
  const int d = f.degree();
  std::vector<Rat> c(d + 1);
  for (int i = 0; i <= d; ++i) {
    // x=1: a_i t^i.  y=1: a_i t^{D-i}.
    if (chart == Chart::x_equals_1)
      c[i] = f.coeff(i);
    else
      c[d - i] = f.coeff(i);
  }
  return UniPoly(std::move(c));
}

BinaryForm compose_linear(const BinaryForm& f, const Rat& m00, const Rat& m01, const Rat& m10,
                          const Rat& m11) {
  const BinaryForm lx(1, {m00, m01});
  const BinaryForm ly(1, {m10, m11});
  const int d = f.degree();
  BinaryForm acc = BinaryForm::zero(d);
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(i) == 0) continue;
    acc = acc + scale(mul(power(lx, d - i), power(ly, i)), f.coeff(i));
  }
  return acc;
}

std::string format_form(const BinaryForm& f) {
  if (f.is_zero()) return format_coeffs(f);
  const int d = f.degree();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    const Rat& c = f.coeff(i);
    if (c == 0) continue;
    const int xp = d - i, yp = i;
    Rat mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool need_star = false;
    if (mag != 1 || d == 0) {
      os << mag.get_str();
      need_star = true;
    }
    if (xp > 0) {
      os << (need_star ? "*" : "") << 'x';
      if (xp > 1) os << '^' << xp;
      need_star = true;
    }
    if (yp > 0) {
      os << (need_star ? "*" : "") << 'y';
      if (yp > 1) os << '^' << yp;
    }
    first = false;
  }
  return os.str();
}

std::string format_coeffs(const BinaryForm& f) {
  std::ostringstream os;
  os << f.degree() << ':';
  for (int i = 0; i <= f.degree(); ++i) os << (i ? ", " : " ") << f.coeff(i).get_str();
  return os.str();
}

}  // namespace hypforms
