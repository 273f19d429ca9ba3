#pragma once

#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "hypforms/binary_form.hpp"
#include "hypforms/sturm.hpp"

namespace hypforms {

using Point = std::pair<Rat, Rat>;

enum class Verdict { hyperbolic, not_hyperbolic };
enum class Method { hessian, polar };

std::string to_string(Verdict v);
std::string to_string(Method m);

/// Outcome of an exact hyperbolicity decision. A witness, when present, is a
/// point off the origin where the Hessian form is >= 0.
struct Certificate {
  Verdict verdict = Verdict::not_hyperbolic;
  Method method = Method::hessian;
  std::optional<Point> witness;
  int degree = 0;

  bool hyperbolic() const { return verdict == Verdict::hyperbolic; }
};

/// {verdict, method, witness?, degree}; witness coordinates as "p/q" strings.
nlohmann::json to_json(const Certificate& c);

struct NegativityResult {
  bool negative = false;
  std::optional<Point> witness;  // point with h >= 0 when !negative, if a rational one was found
};

/// Decides h(x, y) < 0 on R^2 minus the origin for an even-degree form,
/// using the chart x = 1 plus the point (0, 1).
NegativityResult is_negative_form(const BinaryForm& h);

BinaryForm hessian(const BinaryForm& f);

Certificate is_hyperbolic(const BinaryForm& f);

/// D^2 f^2 + D f R(R f) - (D-1) (R f)^2, a form of degree 2D whose restriction
/// to the unit circle is D^2 F^2 + D F F'' - (D-1) F'^2.
/// Satisfies (D-1) polar_form(f) = hessian(f) * (x^2 + y^2)^2.
BinaryForm polar_form(const BinaryForm& f);

Certificate is_hyperbolic_polar(const BinaryForm& f);

/// ((D+1)/(D-1)) l^2 Hess f - (a f_y - b f_x)^2, equal to hessian(l * f).
BinaryForm hess_linear_product(const LinearForm& l, const BinaryForm& f);

/// For hyperbolic f: l * f is hyperbolic iff l does not divide a f_y - b f_x.
bool linear_extension_is_hyperbolic(const LinearForm& l, const BinaryForm& f);

/// p <= 0 (or < 0 when strict) for every x in [0, 1], decided exactly.
bool is_nonpositive_on_unit_interval(const UniPoly& p, bool strict);

}  // namespace hypforms
