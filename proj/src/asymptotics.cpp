#include "hypforms/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hypforms/certify.hpp"
#include "hypforms/float_eval.hpp"
#include "hypforms/index_classify.hpp"
#include "hypforms/sturm.hpp"

namespace hypforms {

namespace {

constexpr double kPi = std::numbers::pi;

using Vec2 = std::array<double, 2>;

// Wraps an angle difference between lines into (-pi/2, pi/2].
double wrap_line(double a) {
  a = std::remainder(a, kPi);
  return a <= -kPi / 2 ? a + kPi : a;
}

double reduce_line(double a) {
  a = std::fmod(a, kPi);
  return a < 0 ? a + kPi : a;
}

QuadFormAt make_q(const std::array<double, 3>& abc, double x, double y) {
  return QuadFormAt{abc[0], abc[1], abc[2], {x, y}};
}

}  // namespace

double QuadFormAt::residual(double u, double v) const {
  const double scale = std::sqrt(a * a + 4 * b * b + c * c);
  return scale > 0 ? std::abs((*this)(u, v)) / scale : 0.0;
}

QuadFormAt second_fundamental_form(const BinaryForm& f, double x, double y) {
  if (x == 0.0 && y == 0.0) throw DomainError("second_fundamental_form: origin is singular");
  if (f.degree() < 2) throw DomainError("second_fundamental_form: degree must be at least 2");
  const BinaryForm fx = partial_x(f), fy = partial_y(f);
  const Rat rx = from_double(x), ry = from_double(y);
  return QuadFormAt{eval(partial_x(fx), rx, ry).get_d(), eval(partial_y(fx), rx, ry).get_d(),
                    eval(partial_y(fy), rx, ry).get_d(), {x, y}};
}

std::string to_string(FieldChoice c) { return c == FieldChoice::F1 ? "F1" : "F2"; }

double AsymptoticDirections::separation() const {
  const double d = std::abs(wrap_line(f1 - f2));
  return d;
}

AsymptoticDirections asymptotic_directions(const QuadFormAt& q) {
  if (!(q.discriminant() > 0)) throw DomainError("asymptotic_directions: form is not hyperbolic (b^2 - ac <= 0)");
  const double half_diff = 0.5 * (q.a - q.c);
  const double rho = std::hypot(half_diff, q.b);
  const double psi = std::atan2(q.b, half_diff);
  const double beta = std::acos(std::clamp(-0.5 * (q.a + q.c) / rho, -1.0, 1.0));
  return {reduce_line(0.5 * (psi + beta)), reduce_line(0.5 * (psi - beta))};
}

FieldChoice field_along(const BinaryForm& f, double x, double y, double angle) {
  const auto dirs = asymptotic_directions(second_fundamental_form(f, x, y));
  return std::abs(wrap_line(dirs.f1 - angle)) <= std::abs(wrap_line(dirs.f2 - angle)) ? FieldChoice::F1
                                                                                       : FieldChoice::F2;
}

std::string HalfInt::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

namespace {

class LineTracker {
 public:
  explicit LineTracker(const BinaryForm& f) : second_(f) {}

  PoincareResult run(int degree) {
    const int n = std::max(256, 32 * degree);
    const double h = 2 * kPi / n;
    AsymptoticDirections prev = at(0.0);
    const double start = prev.f1;
    double theta = start;
    for (int i = 1; i <= n; ++i) {
      const double phi0 = (i - 1) * h, phi1 = (i == n) ? 2 * kPi : i * h;
      AsymptoticDirections next = at(phi1);
      theta = advance(phi0, prev, phi1, next, theta, 0);
      prev = next;
    }
    PoincareResult r;
    r.turns = (theta - start) / (2 * kPi);
    r.index.twice = static_cast<int>(std::lround(2 * r.turns));
    r.samples = samples_;
    if (std::abs(r.turns - r.index.value()) >= 0.1)
      throw NumericError("poincare_index_origin: residual turning too large");
    return r;
  }

 private:
  AsymptoticDirections at(double phi) {
    ++samples_;
    const double c = std::cos(phi), s = std::sin(phi);
    return asymptotic_directions(make_q(second_(c, s), c, s));
  }

  double advance(double phi0, const AsymptoticDirections& d0, double phi1, const AsymptoticDirections& d1,
                 double theta, int depth) {
    const double s1 = wrap_line(d1.f1 - theta), s2 = wrap_line(d1.f2 - theta);
    const double step = std::abs(s1) <= std::abs(s2) ? s1 : s2;
    const double budget = 0.5 * std::min(d0.separation(), d1.separation());
    if (std::abs(step) < budget) return theta + step;
    if (depth >= 24) throw NumericError("poincare_index_origin: lift incoherent beyond refinement budget");
    const double mid = 0.5 * (phi0 + phi1);
    const AsymptoticDirections dm = at(mid);
    const double theta_mid = advance(phi0, d0, mid, dm, theta, depth + 1);
    return advance(mid, dm, phi1, d1, theta_mid, depth + 1);
  }

  SecondPartials second_;
  std::size_t samples_ = 0;
};

}  // namespace

PoincareResult poincare_index_detail(const BinaryForm& f) {
  if (!is_hyperbolic(f).hyperbolic()) throw DomainError("poincare_index_origin: form is not hyperbolic");
  return LineTracker(f).run(f.degree());
}

HalfInt poincare_index_origin(const BinaryForm& f) { return poincare_index_detail(f).index; }

namespace {

class CurveTracer {
 public:
  CurveTracer(const BinaryForm& f, FieldChoice field, const CurveOptions& opts)
      : second_(f), field_(field), opts_(opts) {}

  Vec2 line_at(const Vec2& p) const {
    const QuadFormAt q = make_q(second_(p[0], p[1]), p[0], p[1]);
    if (!(q.discriminant() > 0))
      throw NumericError("integrate_curve: non-hyperbolic point encountered at (" + std::to_string(p[0]) + ", " +
                         std::to_string(p[1]) + ")");
    const double theta = asymptotic_directions(q)[field_];
    return {std::cos(theta), std::sin(theta)};
  }

  Vec2 direction(const Vec2& p, const Vec2& heading) const {
    Vec2 v = line_at(p);
    if (v[0] * heading[0] + v[1] * heading[1] < 0) v = {-v[0], -v[1]};
    return v;
  }

  // Points and tangents after the seed, in traversal order.
  void trace(const Vec2& seed, Vec2 heading, std::vector<Vec2>& pts, std::vector<Vec2>& tans) const {
    Vec2 p = seed;
    double len = 0.0;
    const std::size_t max_steps = static_cast<std::size_t>(std::ceil(opts_.max_len / opts_.step)) * 64 + 16;
    for (std::size_t n = 0; n < max_steps && len < opts_.max_len; ++n) {
      const double r = std::hypot(p[0], p[1]);
      if (r < opts_.standoff || std::abs(p[0]) > opts_.viewport || std::abs(p[1]) > opts_.viewport) break;
      const double h = std::min(opts_.step, 0.25 * r);
      const Vec2 k1 = direction(p, heading);
      const Vec2 k2 = direction({p[0] + 0.5 * h * k1[0], p[1] + 0.5 * h * k1[1]}, k1);
      const Vec2 k3 = direction({p[0] + 0.5 * h * k2[0], p[1] + 0.5 * h * k2[1]}, k2);
      const Vec2 k4 = direction({p[0] + h * k3[0], p[1] + h * k3[1]}, k3);
      const Vec2 next{p[0] + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
                      p[1] + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
      if (std::hypot(next[0], next[1]) == 0.0) break;
      const Vec2 t = direction(next, k1);
      pts.push_back(next);
      tans.push_back(t);
      len += std::hypot(next[0] - p[0], next[1] - p[1]);
      heading = t;
      p = next;
    }
  }

 private:
  SecondPartials second_;
  FieldChoice field_;
  CurveOptions opts_;
};

}  // namespace

CurvePolyline integrate_curve(const BinaryForm& f, std::array<double, 2> seed, FieldChoice field,
                              const CurveOptions& opts) {
  if (seed[0] == 0.0 && seed[1] == 0.0) throw DomainError("integrate_curve: seed at the singular origin");
  if (!(opts.step > 0) || !(opts.max_len > 0) || !(opts.viewport > 0))
    throw DomainError("integrate_curve: step, max_len and viewport must be positive");
  if (f.degree() < 2) throw DomainError("integrate_curve: degree must be at least 2");
  const CurveTracer tracer(f, field, opts);

  const Vec2 v0 = tracer.line_at(seed);
  std::vector<Vec2> back_pts, back_tans, fwd_pts, fwd_tans;
  tracer.trace(seed, {-v0[0], -v0[1]}, back_pts, back_tans);
  tracer.trace(seed, v0, fwd_pts, fwd_tans);

  CurvePolyline out;
  out.field_choice = field;
  out.seed = seed;
  out.points.reserve(back_pts.size() + fwd_pts.size() + 1);
  for (std::size_t i = back_pts.size(); i-- > 0;) {
    out.points.push_back(back_pts[i]);
    out.tangents.push_back({-back_tans[i][0], -back_tans[i][1]});
  }
  out.points.push_back(seed);
  out.tangents.push_back(v0);
  out.points.insert(out.points.end(), fwd_pts.begin(), fwd_pts.end());
  out.tangents.insert(out.tangents.end(), fwd_tans.begin(), fwd_tans.end());
  return out;
}

double max_tangent_residual(const BinaryForm& f, const CurvePolyline& c) {
  const SecondPartials second(f);
  double worst = 0.0;
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const auto& p = c.points[i];
    const QuadFormAt q = make_q(second(p[0], p[1]), p[0], p[1]);
    worst = std::max(worst, q.residual(c.tangents[i][0], c.tangents[i][1]));
  }
  return worst;
}

double max_chord_turn(const CurvePolyline& c) {
  double worst = 0.0;
  for (std::size_t i = 2; i < c.points.size(); ++i) {
    const Vec2 u{c.points[i - 1][0] - c.points[i - 2][0], c.points[i - 1][1] - c.points[i - 2][1]};
    const Vec2 v{c.points[i][0] - c.points[i - 1][0], c.points[i][1] - c.points[i - 1][1]};
    const double cross = u[0] * v[1] - u[1] * v[0], dot = u[0] * v[0] + u[1] * v[1];
    worst = std::max(worst, std::abs(std::atan2(cross, dot)));
  }
  return worst;
}

std::vector<std::array<double, 2>> zero_line_directions(const BinaryForm& f) {
  if (f.is_zero()) throw DomainError("zero_line_directions: zero form");
  std::vector<Vec2> out;
  const UniPoly u = restrict(f, Chart::x_equals_1);
  if (u.degree() >= 1) {
    const UniPoly q = squarefree_part(u);
    for (const auto& iv : isolate_roots(u)) {
      Rat a = iv.lo, b = iv.hi;
      // Simple roots of the squarefree part change sign, so plain bisection converges.
      const int sa = sgn(q(a));
      for (int i = 0; i < 64 && !iv.exact; ++i) {
        Rat m = (a + b) / 2;
        const int sm = sgn(q(m));
        if (sm == 0) {
          a = b = m;
          break;
        }
        (sm == sa ? a : b) = m;
      }
      const double t = Rat((a + b) / 2).get_d();
      const double n = std::hypot(1.0, t);
      out.push_back({1.0 / n, t / n});
    }
  }
  if (f.coeff(f.degree()) == 0) out.push_back({0.0, 1.0});
  return out;
}

std::vector<CurvePolyline> figure_curves(const BinaryForm& f, const CurveOptions& opts, int grid) {
  if (!is_hyperbolic(f).hyperbolic()) throw DomainError("figure_curves: form is not hyperbolic");
  std::vector<CurvePolyline> out;
  const double w = opts.viewport;
  for (const auto& d : zero_line_directions(f)) {
    const double angle = std::atan2(d[1], d[0]);
    for (double r : {0.5 * w, -0.5 * w}) {
      const Vec2 seed{r * d[0], r * d[1]};
      out.push_back(integrate_curve(f, seed, field_along(f, seed[0], seed[1], angle), opts));
    }
  }
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      const Vec2 seed{-w + (i + 0.5) * 2 * w / grid, -w + (j + 0.5) * 2 * w / grid};
      if (std::hypot(seed[0], seed[1]) < 0.1 * w) continue;
      for (FieldChoice fc : {FieldChoice::F1, FieldChoice::F2}) out.push_back(integrate_curve(f, seed, fc, opts));
    }
  return out;
}

// ---------------------------------------------------------------------------

QuadDiffForm second_fundamental_form(const BinaryForm& f) {
  if (f.degree() < 2) throw DomainError("second_fundamental_form: degree must be at least 2");
  const BinaryForm fx = partial_x(f), fy = partial_y(f);
  return {partial_x(fx), partial_y(fx), partial_y(fy)};
}

QuadDiffForm differential_product(const BinaryForm& p, const BinaryForm& q) {
  const BinaryForm px = partial_x(p), py = partial_y(p), qx = partial_x(q), qy = partial_y(q);
  return {px * qx, scale(px * qy + py * qx, Rat(1, 2)), py * qy};
}

QuadDiffForm operator+(const QuadDiffForm& l, const QuadDiffForm& r) { return {l.a + r.a, l.b + r.b, l.c + r.c}; }

QuadDiffForm operator*(const BinaryForm& w, const QuadDiffForm& q) { return {w * q.a, w * q.b, w * q.c}; }

QuadDiffForm operator*(const Rat& s, const QuadDiffForm& q) { return {scale(q.a, s), scale(q.b, s), scale(q.c, s)}; }

BinaryForm discriminant(const QuadDiffForm& q) { return q.b * q.b - q.a * q.c; }

BinaryForm t_polynomial(const BinaryForm& p, const BinaryForm& q) {
  const BinaryForm px = partial_x(p), py = partial_y(p), qx = partial_x(q), qy = partial_y(q);
  const BinaryForm pxx = partial_x(px), pxy = partial_y(px), pyy = partial_y(py);
  return pxx * py * qy + pyy * px * qx - pxy * (px * qy + py * qx);
}

namespace {

// Returns n for Q = x^{2n} + y^{2n}; throws otherwise.
int q_exponent(const BinaryForm& q) {
  const int d = q.degree();
  if (d < 2 || d % 2 != 0) throw DomainError("expected Q = x^{2n} + y^{2n} with n >= 1");
  BinaryForm expected = BinaryForm::monomial(d, 0) + BinaryForm::monomial(d, d);
  if (q != expected) throw DomainError("expected Q = x^{2n} + y^{2n}, got " + format_form(q));
  return d / 2;
}

void require_distinct_real_lines(const BinaryForm& p) {
  if (p.degree() < 2) throw DomainError("P must have degree at least 2");
  if (p.is_zero()) throw DomainError("P is the zero form");
  if (count_real_linear_factors(p) != p.degree())
    throw DomainError("P must be a product of distinct real linear forms: " + format_form(p));
}

bool positive_off_origin(const BinaryForm& delta) {
  if (delta.is_zero() || delta.degree() % 2 != 0) return false;
  return is_negative_form(-delta).negative;
}

}  // namespace

Rat t_identity_constant(const BinaryForm& p, const BinaryForm& q) {
  const int n = q_exponent(q);
  const int d = p.degree() + 2 * n;
  if (d - 2 * n - 1 < 1) throw DomainError("t_identity_constant: need D - 2n - 1 >= 1");
  return Rat(2 * n, d - 2 * n - 1);
}

BinaryForm discriminant_omega(const BinaryForm& p, const BinaryForm& q) {
  q_exponent(q);
  require_distinct_real_lines(p);
  const Rat c = t_identity_constant(p, q);
  const BinaryForm hess_p = hessian(p);
  const BinaryForm t = t_polynomial(p, q);
  if (t != scale(q * hess_p, c))
    throw DomainError("discriminant_omega: T identity fails for P = " + format_form(p));

  const QuadDiffForm omega = Rat(2) * differential_product(p, q) + q * second_fundamental_form(p);
  const BinaryForm delta = discriminant(omega);

  const BinaryForm cross = partial_x(p) * partial_y(q) - partial_y(p) * partial_x(q);
  const BinaryForm closed = -(q * q * hess_p) + cross * cross - scale(q * t, Rat(2));
  if (delta != closed) throw std::logic_error("discriminant_omega: closed form disagrees with b^2 - ac");
  return delta;
}

std::string to_string(IsotopyKind k) {
  switch (k) {
    case IsotopyKind::phi: return "phi";
    case IsotopyKind::psi: return "psi";
    case IsotopyKind::gamma_t: return "gamma_t";
  }
  return "unknown";
}

std::vector<IsotopyCheck> check_isotopies(const BinaryForm& p, const BinaryForm& q, const std::vector<Rat>& t_grid) {
  discriminant_omega(p, q);
  std::vector<Rat> grid = t_grid;
  for (auto& t : grid) {
    t.canonicalize();
    if (t < 0 || t > 1) throw DomainError("check_isotopies: t outside [0, 1]");
  }

  const QuadDiffForm ii_p = second_fundamental_form(p);
  const QuadDiffForm ii_q = second_fundamental_form(q);
  const QuadDiffForm dpdq = differential_product(p, q);
  const QuadDiffForm q_ii_p = q * ii_p;
  const QuadDiffForm omega = Rat(2) * dpdq + q_ii_p;
  const QuadDiffForm delta = p * ii_q;

  // Gamma_t = (t + (1-t) Q) II_P is not homogeneous; its discriminant is
  // (t + (1-t) Q)^2 (-Hess P), positive iff -Hess P is and the weight is.
  const bool ii_p_hyperbolic = positive_off_origin(-hessian(p));
  const bool q_positive = is_negative_form(-q).negative;

  std::vector<IsotopyCheck> out;
  for (IsotopyKind kind : {IsotopyKind::phi, IsotopyKind::psi, IsotopyKind::gamma_t}) {
    IsotopyCheck check{kind, grid, true, {}};
    for (const auto& t : grid) {
      bool ok = false;
      switch (kind) {
        case IsotopyKind::phi: ok = positive_off_origin(discriminant(omega + t * delta)); break;
        case IsotopyKind::psi: ok = positive_off_origin(discriminant(q_ii_p + (2 * t) * dpdq)); break;
        case IsotopyKind::gamma_t: ok = ii_p_hyperbolic && (t > 0 || q_positive); break;
      }
      if (!ok) {
        check.verdict = false;
        check.failed_at.push_back(t);
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace hypforms
