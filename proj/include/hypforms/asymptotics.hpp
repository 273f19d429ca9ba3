#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypforms/binary_form.hpp"

namespace hypforms {

/// II_f = a dx^2 + 2 b dx dy + c dy^2 evaluated at a point.
struct QuadFormAt {
  double a = 0.0, b = 0.0, c = 0.0;
  std::array<double, 2> at{};

  double discriminant() const { return b * b - a * c; }
  /// a u^2 + 2 b u v + c v^2.
  double operator()(double u, double v) const { return a * u * u + 2 * b * u * v + c * v * v; }
  /// Residual along a unit direction, normalised by the size of the form.
  double residual(double u, double v) const;
};

/// Exact second partials at the (exactly representable) double point, then rounded.
QuadFormAt second_fundamental_form(const BinaryForm& f, double x, double y);

enum class FieldChoice { F1, F2 };

std::string to_string(FieldChoice c);

/// The two null directions of q as angles in [0, pi).
///
/// With psi = atan2(b, (a - c)/2) and beta = arccos(-(a + c) / (2 rho)),
/// rho = |((a - c)/2, b)|, the lines are (psi + beta)/2 (F1) and
/// (psi - beta)/2 (F2). Both are continuous line fields wherever q is
/// hyperbolic, so the F1/F2 label is global on R^2 minus the origin for a
/// hyperbolic form.
struct AsymptoticDirections {
  double f1 = 0.0;
  double f2 = 0.0;
  /// Angular separation of the two lines, in (0, pi/2].
  double separation() const;
  double operator[](FieldChoice c) const { return c == FieldChoice::F1 ? f1 : f2; }
};

/// Throws DomainError when b^2 - a c <= 0.
AsymptoticDirections asymptotic_directions(const QuadFormAt& q);

/// Field whose line at (x, y) is closest to the given angle.
FieldChoice field_along(const BinaryForm& f, double x, double y, double angle);

/// A rational or half-integer value stored as twice its value.
struct HalfInt {
  int twice = 0;
  double value() const { return twice / 2.0; }
  std::string str() const;
  friend bool operator==(const HalfInt&, const HalfInt&) = default;
};

struct PoincareResult {
  HalfInt index;
  double turns = 0.0;  // total turning of the tracked line / 2 pi, before rounding
  std::size_t samples = 0;
};

/// Tracks one asymptotic line around the unit circle, choosing at each sample
/// the candidate closest to the previous line (mod pi), and refining where the
/// step would approach half the separation between the two lines.
PoincareResult poincare_index_detail(const BinaryForm& f);
HalfInt poincare_index_origin(const BinaryForm& f);

struct CurveOptions {
  double step = 1e-3;
  double max_len = 4.0;     // per direction from the seed
  double viewport = 2.0;    // integration stops outside [-viewport, viewport]^2
  double standoff = 1e-3;   // and inside this radius around the singular origin
};

/// Integral curve of one asymptotic field, traced both ways from the seed.
struct CurvePolyline {
  std::vector<std::array<double, 2>> points;
  /// Unit field direction at each point, oriented along the traversal.
  std::vector<std::array<double, 2>> tangents;
  FieldChoice field_choice = FieldChoice::F1;
  std::array<double, 2> seed{};
};

/// Classical fourth-order Runge-Kutta on the chosen line field, with each
/// stage's direction sign-matched to the current heading.
CurvePolyline integrate_curve(const BinaryForm& f, std::array<double, 2> seed, FieldChoice field,
                              const CurveOptions& opts = {});

/// Largest normalised residual |II(t)| over the polyline vertices.
double max_tangent_residual(const BinaryForm& f, const CurvePolyline& c);

/// Largest turn between consecutive chords of the polyline, in radians.
double max_chord_turn(const CurvePolyline& c);

/// Directions (unit vectors) of the real lines contained in f = 0.
std::vector<std::array<double, 2>> zero_line_directions(const BinaryForm& f);

/// Curves for a figure: both fields from a grid of seeds, plus the field
/// tangent to each zero line of f seeded on both of its rays.
std::vector<CurvePolyline> figure_curves(const BinaryForm& f, const CurveOptions& opts = {}, int grid = 5);

// ---------------------------------------------------------------------------
// Quadratic differential forms with exact polynomial coefficients.

/// A dx^2 + 2 B dx dy + C dy^2 with homogeneous coefficient forms.
struct QuadDiffForm {
  BinaryForm a, b, c;
};

QuadDiffForm second_fundamental_form(const BinaryForm& f);
/// dP dQ as a symmetric quadratic differential form.
QuadDiffForm differential_product(const BinaryForm& p, const BinaryForm& q);
QuadDiffForm operator+(const QuadDiffForm& l, const QuadDiffForm& r);
QuadDiffForm operator*(const BinaryForm& w, const QuadDiffForm& q);
QuadDiffForm operator*(const Rat& s, const QuadDiffForm& q);

/// b^2 - a c.
BinaryForm discriminant(const QuadDiffForm& q);

/// T = P_xx P_y Q_y + P_yy P_x Q_x - P_xy (P_x Q_y + P_y Q_x).
BinaryForm t_polynomial(const BinaryForm& p, const BinaryForm& q);

/// Constant 2n / (D - 2n - 1) with D = deg P + 2n.
Rat t_identity_constant(const BinaryForm& p, const BinaryForm& q);

/// Discriminant of omega = 2 dP dQ + Q II_P for P a product of distinct real
/// linear forms and Q = x^{2n} + y^{2n}. Checks T = c Q Hess P and
/// b^2 - ac = -Q^2 Hess P + (P_x Q_y - P_y Q_x)^2 - 2 Q T exactly.
BinaryForm discriminant_omega(const BinaryForm& p, const BinaryForm& q);

enum class IsotopyKind { phi, psi, gamma_t };

std::string to_string(IsotopyKind k);

struct IsotopyCheck {
  IsotopyKind kind;
  std::vector<Rat> t_grid;
  bool verdict = true;
  std::vector<Rat> failed_at;
};

/// Phi_t = omega + t P II_Q, Psi_t = Q II_P + 2t dP dQ, Gamma_t = t II_P + (1-t) Q II_P;
/// certifies a strictly positive discriminant off the origin at every grid t.
std::vector<IsotopyCheck> check_isotopies(const BinaryForm& p, const BinaryForm& q, const std::vector<Rat>& t_grid);

}  // namespace hypforms
