#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hypforms/binary_form.hpp"

namespace hypforms {

/// Sample of the curves gamma_f and alpha_f at angle phi.
struct CurveSample {
  double phi = 0.0;
  std::array<double, 3> gamma{};  // (f_xx, f_xy, f_yy) at (cos phi, sin phi)
  std::array<double, 3> alpha{};  // (F, F', F'') at phi
};

CurveSample sample_curves(const BinaryForm& f, double phi);

struct ComponentReport {
  int degree = 0;
  int index = 0;
  int component_rank = 0;  // position of index in admissible_indices(degree)
  int factor_count = 0;
};

nlohmann::json to_json(const ComponentReport& r);

/// Distinct real lines through the origin contained in f = 0.
int count_real_linear_factors(const BinaryForm& f);

/// Exact index of gamma_f, 2 - (number of real linear factors). Requires a
/// certified hyperbolic f; throws DomainError otherwise.
int index_gamma(const BinaryForm& f);

/// Even D: {0, -2, ..., -(D-2)}; odd D: {-1, -3, ..., -(D-2)}. D >= 3.
std::vector<int> admissible_indices(int degree);

/// (D-1)/2 for odd D, D/2 for even D. At D = 4 this is only the index-count
/// upper bound: Hyp(4) is known to be connected.
int num_components(int degree);

/// True iff both (hyperbolic, same degree) forms have the same gamma index.
bool same_component(const BinaryForm& f, const BinaryForm& g);

ComponentReport classify(const BinaryForm& f);

/// Result of adaptive argument tracking around the unit circle.
struct WindingResult {
  int winding = 0;
  double revolutions = 0.0;  // before rounding
  double residual = 0.0;     // |revolutions - winding|
  std::size_t samples = 0;
};

/// Refinement contract for the numeric windings.
struct WindingOptions {
  int initial_samples = 256;  // raised to 32 * degree when larger
  int max_depth = 24;
  double max_step_arg = 1.5707963267948966;  // pi / 2
  double max_residual = 0.1;
};

WindingResult winding_gamma_detail(const BinaryForm& f, const WindingOptions& opts = {});
WindingResult winding_alpha_detail(const BinaryForm& f, const WindingOptions& opts = {});

/// Winding of (f_xx - f_yy, 2 f_xy) about the origin; a floating-point
/// cross-check of index_gamma.
int winding_gamma_numeric(const BinaryForm& f);

/// Winding of alpha_f = (F, F', F'') projected onto the plane 2Du + w = 0.
/// Satisfies winding_gamma_numeric = 2 + winding_alpha_numeric.
int winding_alpha_numeric(const BinaryForm& f);

/// (zeros of F on the circle, critical points of F on the circle).
std::pair<int, int> zeros_vs_critical_points(const BinaryForm& f);

}  // namespace hypforms
