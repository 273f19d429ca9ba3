#include "hypforms/certify.hpp"

namespace hypforms {

std::string to_string(Verdict v) { return v == Verdict::hyperbolic ? "hyperbolic" : "not_hyperbolic"; }

std::string to_string(Method m) { return m == Method::hessian ? "hessian" : "polar"; }

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j{{"verdict", to_string(c.verdict)}, {"method", to_string(c.method)}, {"degree", c.degree}};
  if (c.witness)
    j["witness"] = nlohmann::json::array({to_fraction_string(c.witness->first), to_fraction_string(c.witness->second)});
  return j;
}

NegativityResult is_negative_form(const BinaryForm& h) {
  if (h.is_zero()) throw DomainError("is_negative_form: zero form");
  if (h.degree() % 2 != 0) throw DomainError("is_negative_form: odd degree form cannot be sign-definite");

  const Point e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)};
  if (eval(h, e1.first, e1.second) >= 0) return {false, e1};
  if (eval(h, e2.first, e2.second) >= 0) return {false, e2};
  if (h.degree() == 0) return {true, std::nullopt};

  const UniPoly u = restrict(h, Chart::x_equals_1);
  const Rat bound = cauchy_root_bound(u);
  const auto roots = isolate_roots(u, -bound, bound);
  if (roots.empty()) return {true, std::nullopt};

  // Real roots exist, so h vanishes on some line. Look for a rational witness:
  // an exact root, a positive gap, or a rational touching root.
  for (const auto& r : roots)
    if (r.exact) return {false, Point{Rat(1), r.lo}};
  for (const auto& s : gap_samples(-bound, bound, roots))
    if (u(s) > 0) return {false, Point{Rat(1), s}};
  for (const auto& r : roots)
    if (auto t = rational_root_in(u, r)) return {false, Point{Rat(1), *t}};
  return {false, std::nullopt};
}

BinaryForm hessian(const BinaryForm& f) {
  if (f.degree() < 2) throw DomainError("hessian: degree must be at least 2");
  const BinaryForm fx = partial_x(f), fy = partial_y(f);
  const BinaryForm fxx = partial_x(fx), fxy = partial_y(fx), fyy = partial_y(fy);
  return fxx * fyy - fxy * fxy;
}

namespace {

void require_certifiable(const BinaryForm& f, const char* op) {
  if (f.degree() < 2) throw DomainError(std::string(op) + ": degree must be at least 2");
  if (f.is_zero()) throw DomainError(std::string(op) + ": zero form");
}

Certificate from_negativity(const NegativityResult& r, Method m, int degree) {
  Certificate c;
  c.verdict = r.negative ? Verdict::hyperbolic : Verdict::not_hyperbolic;
  c.method = m;
  c.degree = degree;
  if (!r.negative) c.witness = r.witness;
  return c;
}

}  // namespace

Certificate is_hyperbolic(const BinaryForm& f) {
  require_certifiable(f, "is_hyperbolic");
  const BinaryForm h = hessian(f);
  if (h.is_zero()) return Certificate{Verdict::not_hyperbolic, Method::hessian, Point{Rat(1), Rat(0)}, f.degree()};
  return from_negativity(is_negative_form(h), Method::hessian, f.degree());
}

BinaryForm polar_form(const BinaryForm& f) {
  if (f.is_zero()) throw DomainError("polar_form: zero form");
  if (f.degree() < 1) throw DomainError("polar_form: degree must be at least 1");
  const Rat d(f.degree());
  const BinaryForm rf = rotational_derivative(f);
  const BinaryForm rrf = rotational_derivative(rf);
  return scale(f * f, d * d) + scale(f * rrf, d) - scale(rf * rf, d - 1);
}

Certificate is_hyperbolic_polar(const BinaryForm& f) {
  require_certifiable(f, "is_hyperbolic_polar");
  const BinaryForm p = polar_form(f);
  if (p.is_zero()) return Certificate{Verdict::not_hyperbolic, Method::polar, Point{Rat(1), Rat(0)}, f.degree()};
  return from_negativity(is_negative_form(p), Method::polar, f.degree());
}

BinaryForm hess_linear_product(const LinearForm& l, const BinaryForm& f) {
  if (f.degree() < 2) throw DomainError("hess_linear_product: degree must be at least 2");
  const Rat d(f.degree());
  const BinaryForm lf = l.form();
  const BinaryForm cross = scale(partial_y(f), l.a()) - scale(partial_x(f), l.b());
  return scale(lf * lf * hessian(f), (d + 1) / (d - 1)) - cross * cross;
}

bool linear_extension_is_hyperbolic(const LinearForm& l, const BinaryForm& f) {
  if (f.degree() < 2) throw DomainError("linear_extension_is_hyperbolic: degree must be at least 2");
  if (!is_hyperbolic(f).hyperbolic())
    throw DomainError("linear_extension_is_hyperbolic: f must be hyperbolic");
  const BinaryForm cross = scale(partial_y(f), l.a()) - scale(partial_x(f), l.b());
  // l vanishes exactly on the direction (b, -a); l divides cross iff cross vanishes there.
  return eval(cross, l.b(), -l.a()) != 0;
}

bool is_nonpositive_on_unit_interval(const UniPoly& p, bool strict) {
  if (p.is_zero()) throw DomainError("is_nonpositive_on_unit_interval: zero polynomial");
  const Rat zero(0), one(1);
  const int s0 = sgn(p(zero)), s1 = sgn(p(one));
  if (strict) {
    if (s0 >= 0 || s1 >= 0) return false;
    return SturmChain(p).count_roots_open(zero, one) == 0;
  }
  if (s0 > 0 || s1 > 0) return false;
  const auto roots = isolate_roots(p, zero, one);
  for (const auto& s : gap_samples(zero, one, roots))
    if (p(s) > 0) return false;
  return true;
}

}  // namespace hypforms
