#include "hypforms/index_classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hypforms/certify.hpp"
#include "hypforms/float_eval.hpp"
#include "hypforms/sturm.hpp"

namespace hypforms {

namespace {

void require_hyperbolic(const BinaryForm& f, const char* op) {
  if (!is_hyperbolic(f).hyperbolic()) throw DomainError(std::string(op) + ": form is not hyperbolic");
}

double wrap_angle(double a) {
  constexpr double two_pi = 2 * std::numbers::pi;
  a = std::remainder(a, two_pi);
  return a <= -std::numbers::pi ? a + two_pi : a;
}

using PlaneCurve = std::function<std::array<double, 2>(double)>;

class WindingTracker {
 public:
  WindingTracker(const PlaneCurve& curve, const WindingOptions& opts) : curve_(curve), opts_(opts) {}

  WindingResult run(int degree) {
    const int n = std::max(opts_.initial_samples, 32 * degree);
    const double h = 2 * std::numbers::pi / n;
    double total = 0.0;
    double prev_arg = arg_at(0.0);
    for (int i = 1; i <= n; ++i) {
      const double phi0 = (i - 1) * h, phi1 = (i == n) ? 2 * std::numbers::pi : i * h;
      const double next_arg = arg_at(phi1);
      total += span(phi0, prev_arg, phi1, next_arg, 0);
      prev_arg = next_arg;
    }
    WindingResult r;
    r.revolutions = total / (2 * std::numbers::pi);
    r.winding = static_cast<int>(std::lround(r.revolutions));
    r.residual = std::abs(r.revolutions - r.winding);
    r.samples = samples_;
    if (r.residual >= opts_.max_residual)
      throw NumericError("winding residual " + std::to_string(r.residual) + " exceeds " +
                         std::to_string(opts_.max_residual) + " revolutions");
    return r;
  }

 private:
  double arg_at(double phi) {
    ++samples_;
    const auto v = curve_(phi);
    if (!(std::hypot(v[0], v[1]) > 0.0)) throw NumericError("winding curve passes through the origin");
    return std::atan2(v[1], v[0]);
  }

  double span(double phi0, double arg0, double phi1, double arg1, int depth) {
    const double delta = wrap_angle(arg1 - arg0);
    if (std::abs(delta) < opts_.max_step_arg) return delta;
    if (depth >= opts_.max_depth) throw NumericError("winding refinement budget exhausted (near-degenerate input)");
    const double mid = 0.5 * (phi0 + phi1);
    const double arg_mid = arg_at(mid);
    return span(phi0, arg0, mid, arg_mid, depth + 1) + span(mid, arg_mid, phi1, arg1, depth + 1);
  }

  const PlaneCurve& curve_;
  WindingOptions opts_;
  std::size_t samples_ = 0;
};

}  // namespace

CurveSample sample_curves(const BinaryForm& f, double phi) {
  const SecondPartials second(f);
  const FloatForm f0(f), f1(rotational_derivative(f)), f2(rotational_derivative(rotational_derivative(f)));
  const double c = std::cos(phi), s = std::sin(phi);
  return CurveSample{phi, second(c, s), {f0(c, s), f1(c, s), f2(c, s)}};
}

nlohmann::json to_json(const ComponentReport& r) {
  return {{"degree", r.degree}, {"index", r.index}, {"component_rank", r.component_rank}, {"factor_count", r.factor_count}};
}

int count_real_linear_factors(const BinaryForm& f) {
  if (f.is_zero()) throw DomainError("count_real_linear_factors: zero form");
  const UniPoly u = restrict(f, Chart::x_equals_1);
  // Lines y = t x come from real roots of f(1, t); the line x = 0 is a factor
  // exactly when the y^D coefficient vanishes.
  const int affine = u.degree() >= 1 ? sturm_count(u) : 0;
  return affine + (f.coeff(f.degree()) == 0 ? 1 : 0);
}

int index_gamma(const BinaryForm& f) {
  require_hyperbolic(f, "index_gamma");
  return 2 - count_real_linear_factors(f);
}

std::vector<int> admissible_indices(int degree) {
  if (degree < 3) throw DomainError("admissible_indices: degree must be at least 3");
  std::vector<int> out;
  for (int v = (degree % 2 == 0 ? 0 : -1); v >= -(degree - 2); v -= 2) out.push_back(v);
  return out;
}

int num_components(int degree) {
  if (degree < 3) throw DomainError("num_components: degree must be at least 3");
  return degree % 2 == 0 ? degree / 2 : (degree - 1) / 2;
}

bool same_component(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw DomainError("same_component: degree mismatch");
  return index_gamma(f) == index_gamma(g);
}

ComponentReport classify(const BinaryForm& f) {
  ComponentReport r;
  r.degree = f.degree();
  r.index = index_gamma(f);
  r.factor_count = 2 - r.index;
  const auto adm = admissible_indices(f.degree());
  const auto it = std::find(adm.begin(), adm.end(), r.index);
  if (it == adm.end())
    throw DomainError("classify: index " + std::to_string(r.index) + " outside the admissible set");
  r.component_rank = static_cast<int>(it - adm.begin());
  return r;
}

WindingResult winding_gamma_detail(const BinaryForm& f, const WindingOptions& opts) {
  require_hyperbolic(f, "winding_gamma_numeric");
  const SecondPartials second(f);
  const PlaneCurve curve = [&](double phi) {
    const auto [a, b, c] = second(std::cos(phi), std::sin(phi));
    return std::array<double, 2>{a - c, 2 * b};
  };
  return WindingTracker(curve, opts).run(f.degree());
}

WindingResult winding_alpha_detail(const BinaryForm& f, const WindingOptions& opts) {
  require_hyperbolic(f, "winding_alpha_numeric");
  const FloatForm f0(f), f1(rotational_derivative(f)), f2(rotational_derivative(rotational_derivative(f)));
  const double d = f.degree();
  const double norm = std::sqrt(1 + 4 * d * d);
  // Orthonormal frame of the plane 2Du + w = 0, oriented by its normal (2D, 0, 1):
  // e1 = (1, 0, -2D)/|.|, e2 = (0, 1, 0).
  const PlaneCurve curve = [&](double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    const double u = f0(c, s), v = f1(c, s), w = f2(c, s);
    if (!(d * d * u * u + d * u * w - (d - 1) * v * v < 0))
      throw NumericError("alpha_f leaves the hyperbolicity region at phi = " + std::to_string(phi));
    return std::array<double, 2>{(u - 2 * d * w) / norm, v};
  };
  return WindingTracker(curve, opts).run(f.degree());
}

int winding_gamma_numeric(const BinaryForm& f) { return winding_gamma_detail(f).winding; }

int winding_alpha_numeric(const BinaryForm& f) { return winding_alpha_detail(f).winding; }

std::pair<int, int> zeros_vs_critical_points(const BinaryForm& f) {
  require_hyperbolic(f, "zeros_vs_critical_points");
  return {2 * count_real_linear_factors(f), 2 * count_real_linear_factors(rotational_derivative(f))};
}

}  // namespace hypforms
