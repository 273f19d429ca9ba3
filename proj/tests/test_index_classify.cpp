#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hypforms/certify.hpp"
#include "hypforms/families.hpp"
#include "hypforms/index_classify.hpp"
#include "hypforms/verify.hpp"
#include "oracle.hpp"

using namespace hypforms;

namespace {
BinaryForm F(const char* s) { return parse_form(s); }
const BinaryForm kP9 = parse_form("x*(x^2-y^2)*(x^2-4*y^2)*(x^2-9*y^2)*(x^2-16*y^2)");
const BinaryForm kT3 = parse_form("x*(x^6+y^6)*(x^2-y^2)");
}  // namespace

TEST_CASE("count_real_linear_factors") {
  CHECK(count_real_linear_factors(F("x^3 - x*y^2")) == 3);
  CHECK(count_real_linear_factors(F("(x^2-y^2)*(x^4+y^4)")) == 2);
  CHECK(count_real_linear_factors(F("(x^2+y^2)^3")) == 0);
  CHECK(count_real_linear_factors(F("x^2*y*(x - y)^3")) == 3);
  CHECK(count_real_linear_factors(F("x^2 - 2*y^2")) == 2);
  CHECK_THROWS_AS(count_real_linear_factors(BinaryForm::zero(3)), DomainError);
}

TEST_CASE("index_gamma") {
  CHECK(index_gamma(F("x^3 - x*y^2")) == -1);
  CHECK(index_gamma(kP9) == -7);
  CHECK(index_gamma(kT3) == -1);
  CHECK(index_gamma(F("x*y")) == 0);
  CHECK_THROWS_AS(index_gamma(F("(x^2-y^2)*(x^2+y^2)")), DomainError);
}

TEST_CASE("admissible indices and component counts") {
  CHECK(admissible_indices(6) == std::vector<int>{0, -2, -4});
  CHECK(admissible_indices(9) == std::vector<int>{-1, -3, -5, -7});
  CHECK(admissible_indices(3) == std::vector<int>{-1});
  CHECK(num_components(9) == 4);
  CHECK(num_components(16) == 8);
  CHECK(num_components(4) == 2);
  CHECK_THROWS_AS(admissible_indices(2), DomainError);
  CHECK_THROWS_AS(num_components(2), DomainError);
  for (int d = 3; d <= 30; ++d) CHECK(static_cast<int>(admissible_indices(d).size()) == num_components(d));
}

TEST_CASE("same_component") {
  CHECK_THROWS_AS(same_component(arnold(5, 3).form, kT3), DomainError);
  CHECK(same_component(f_family(2, 2, false).form, arnold(9, 5).form));
  CHECK_FALSE(same_component(kP9, kT3));
  CHECK_THROWS_AS(same_component(F("(x^2-y^2)*(x^2+y^2)"), F("x^4 - x*y^3")), DomainError);
}

TEST_CASE("classify report") {
  const auto r = classify(kT3);
  CHECK(r.degree == 9);
  CHECK(r.index == -1);
  CHECK(r.component_rank == 0);
  CHECK(r.factor_count == 3);
  const auto j = to_json(classify(kP9));
  CHECK(j["index"] == -7);
  CHECK(j["component_rank"] == 3);
}

TEST_CASE("curve samples lie in the cones") {
  for (const auto& f : {F("x^3 - x*y^2"), kT3, F("x*y")}) {
    const int d = f.degree();
    for (int i = 0; i < 50; ++i) {
      const auto s = sample_curves(f, 0.1257 * i);
      CHECK(s.gamma[0] * s.gamma[2] - s.gamma[1] * s.gamma[1] < 0);
      const auto [u, v, w] = s.alpha;
      CHECK(d * d * u * u + d * u * w - (d - 1) * v * v < 0);
    }
  }
  // Oracle: direct partials at a circle point.
  const BinaryForm f = F("x^3 - x*y^2");
  const auto s = sample_curves(f, 0.7);
  const auto p = oracle::Poly::from(f);
  const double c = std::cos(0.7), sn = std::sin(0.7);
  CHECK(s.gamma[0] == doctest::Approx(p.dx().dx().at(c, sn)));
  CHECK(s.gamma[1] == doctest::Approx(p.dx().dy().at(c, sn)));
  CHECK(s.alpha[0] == doctest::Approx(p.at(c, sn)));
}

TEST_CASE("winding examples") {
  CHECK(winding_gamma_numeric(F("x*y")) == 0);
  CHECK(winding_gamma_numeric(F("x^3 - x*y^2")) == -1);
  CHECK(winding_gamma_numeric(arnold(5, 3).form) == -1);
  CHECK(winding_alpha_numeric(F("x^3 - x*y^2")) == -3);
  CHECK(winding_alpha_numeric(F("x*y")) == -2);
  CHECK(winding_alpha_numeric(kP9) == -9);
  const auto d = winding_gamma_detail(kP9);
  CHECK(d.residual < 0.1);
  CHECK(d.samples >= 288);
  CHECK_THROWS_AS(winding_alpha_numeric(F("x^2 + y^2")), DomainError);
}

TEST_CASE("zeros versus critical points") {
  CHECK(zeros_vs_critical_points(F("x^3 - x*y^2")) == std::pair{6, 6});
  CHECK(zeros_vs_critical_points(F("x*y")) == std::pair{4, 4});
  CHECK(zeros_vs_critical_points(F("(x^2-y^2)*(x^4+y^4)")) == std::pair{4, 4});
  CHECK_THROWS_AS(zeros_vs_critical_points(F("(x^2-y^2)*(x^2+y^2)")), DomainError);
}

TEST_CASE("rotation and scaling invariance") {
  std::mt19937_64 rng(43);
  const auto pool = hyperbolic_pool(rng, 40, 9);
  std::uniform_int_distribution<int> c(-9, 9);
  for (const auto& f : pool) {
    const BinaryForm rot = compose_linear(f, Rat(3, 5), Rat(-4, 5), Rat(4, 5), Rat(3, 5));
    CHECK(is_hyperbolic(rot).hyperbolic());
    CHECK(index_gamma(rot) == index_gamma(f));
    Rat s(c(rng));
    if (s == 0) s = 7;
    CHECK(index_gamma(scale(f, s)) == index_gamma(f));
  }
  // Non-hyperbolic forms stay rejected under rotation.
  const BinaryForm g4 = F("(x^2-y^2)*(x^2+y^2)");
  CHECK_FALSE(is_hyperbolic(compose_linear(g4, Rat(3, 5), Rat(-4, 5), Rat(4, 5), Rat(3, 5))).hyperbolic());
}

TEST_CASE("bounds and parity on hyperbolic corpus") {
  std::mt19937_64 rng(47);
  for (const auto& f : hyperbolic_pool(rng, 60, 10)) {
    const int d = f.degree(), idx = index_gamma(f);
    CHECK(2 - d <= idx);
    CHECK(idx <= (d % 2 == 0 ? 0 : -1));
    CHECK((idx - d) % 2 == 0);
  }
}
