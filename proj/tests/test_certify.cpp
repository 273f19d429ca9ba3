#include <random>
#include <set>

#include "doctest.h"
#include "hypforms/certify.hpp"
#include "hypforms/families.hpp"
#include "hypforms/inequalities.hpp"
#include "hypforms/sturm.hpp"
#include "hypforms/verify.hpp"
#include "oracle.hpp"

using namespace hypforms;

namespace {
BinaryForm F(const char* s) { return parse_form(s); }
}  // namespace

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(UniPoly({-1, 0, 1})) == 2);
  CHECK(sturm_count(UniPoly({-1, 0, 1}) * UniPoly({-1, 0, 1})) == 2);
  CHECK(sturm_count(UniPoly({1, 0, 1})) == 0);
  CHECK_THROWS_AS(sturm_count(UniPoly()), DomainError);
  // Half-open (a, b].
  const UniPoly p({-1, 0, 1});
  CHECK(sturm_count(p, Rat(-1), Rat(1)) == 1);
  CHECK(sturm_count(p, Rat(-2), Rat(1)) == 2);
  CHECK(SturmChain(p).count_roots_open(Rat(-1), Rat(1)) == 0);
}

TEST_CASE("sturm_count on constructed polynomials") {
  // Distinct rational roots with multiplicities, times positive quadratics:
  // the count is known by construction.
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7), mult(1, 3), nroots(0, 4), nquad(0, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<Rat> roots;
    UniPoly p = UniPoly::constant(Rat(1 + trial % 5));
    int deg = 0;
    const int want = nroots(rng);
    while (static_cast<int>(roots.size()) < want && deg < 10) {
      Rat r(num(rng), den(rng));
      r.canonicalize();
      if (!roots.insert(r).second) continue;
      const int e = std::min(mult(rng), 10 - deg);
      for (int i = 0; i < e; ++i) p = p * UniPoly({-r, 1});
      deg += e;
    }
    for (int q = nquad(rng); q > 0 && deg + 2 <= 12; --q, deg += 2) {
      Rat c(den(rng), den(rng)), s(num(rng), 5);
      c.canonicalize();
      s.canonicalize();
      p = p * UniPoly({s * s + c, -2 * s, 1});  // (t - s)^2 + c
    }
    CHECK(sturm_count(p) == static_cast<int>(roots.size()));
    const auto iso = isolate_roots(p);
    REQUIRE(iso.size() == roots.size());
    auto it = roots.begin();
    for (const auto& iv : iso) {
      if (iv.exact) {
        CHECK(iv.lo == *it);
      } else {
        CHECK(iv.lo < *it);
        CHECK(*it < iv.hi);
      }
      ++it;
    }
    // Counts on sub-intervals agree with the known roots.
    const Rat a(-7, 2), b(9, 4);
    int inside = 0;
    for (const auto& r : roots) inside += (a < r && r <= b);
    CHECK(sturm_count(p, a, b) == inside);
  }
}

TEST_CASE("simplest rational and gap samples") {
  CHECK(simplest_rational_between(Rat(1, 3), Rat(1, 2)) == Rat(1, 2));
  CHECK(simplest_rational_between(Rat(41, 100), Rat(9, 20)) == Rat(3, 7));
  CHECK(simplest_rational_between(Rat(3, 10), Rat(2, 5)) == Rat(1, 3));
  CHECK(simplest_rational_between(Rat(-1, 2), Rat(3)) == 0);
  const UniPoly p({-2, 0, 1});  // roots +-sqrt 2
  const auto iso = isolate_roots(p, Rat(-3), Rat(3));
  REQUIRE(iso.size() == 2);
  for (const auto& s : gap_samples(Rat(-3), Rat(3), iso)) CHECK(p(s) != 0);
}

TEST_CASE("hessian examples and oracle") {
  CHECK(hessian(F("x*y")) == BinaryForm(0, {-1}));
  CHECK(hessian(F("x^3 - x*y^2")) == F("-12*x^2 - 4*y^2"));
  CHECK(hessian(F("(x^2-y^2)*(x^2+y^2)")) == F("-144*x^2*y^2"));
  CHECK_THROWS_AS(hessian(F("x + y")), DomainError);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const BinaryForm f = random_form(rng, 2 + i % 9, 7);
    CHECK(oracle::same(oracle::hessian(oracle::Poly::from(f)), hessian(f)));
  }
}

TEST_CASE("is_negative_form examples") {
  CHECK(is_negative_form(F("-12*x^2 - 4*y^2")).negative);
  const auto r = is_negative_form(F("-144*x^2*y^2"));
  CHECK_FALSE(r.negative);
  REQUIRE(r.witness);
  CHECK(*r.witness == Point{Rat(1), Rat(0)});
  CHECK_FALSE(is_negative_form(F("x^2 + y^2")).negative);
  CHECK_THROWS_AS(is_negative_form(BinaryForm::zero(2)), DomainError);
  CHECK_THROWS_AS(is_negative_form(F("x^3")), DomainError);
  CHECK(is_negative_form(BinaryForm(0, {-3})).negative);
  CHECK_FALSE(is_negative_form(BinaryForm(0, {2})).negative);
  // Touching zero away from the axes: -(x - 2y)^2 (x^2 + y^2).
  const auto t = is_negative_form(F("-(x - 2*y)^2*(x^2 + y^2)"));
  CHECK_FALSE(t.negative);
  REQUIRE(t.witness);
  CHECK(eval(F("-(x - 2*y)^2*(x^2 + y^2)"), t.witness->first, t.witness->second) >= 0);
}

TEST_CASE("is_hyperbolic examples") {
  CHECK(is_hyperbolic(F("x^3 - x*y^2")).hyperbolic());
  const auto g4 = is_hyperbolic(F("(x^2-y^2)*(x^2+y^2)"));
  CHECK_FALSE(g4.hyperbolic());
  CHECK(g4.method == Method::hessian);
  CHECK_FALSE(is_hyperbolic(F("x^2 + y^2")).hyperbolic());
  CHECK(is_hyperbolic(F("x*y")).hyperbolic());
  CHECK_THROWS_AS(is_hyperbolic(F("x")), DomainError);
  CHECK_THROWS_AS(is_hyperbolic(BinaryForm::zero(3)), DomainError);
  const auto j = to_json(g4);
  CHECK(j["verdict"] == "not_hyperbolic");
  CHECK(j["witness"][0] == "1/1");
}

TEST_CASE("polar form examples") {
  CHECK(polar_form(F("x*y")) == F("-(x^2 + y^2)^2"));
  CHECK(polar_form(F("x")).is_zero());
  const BinaryForm q = polar_form(F("x^2 + y^2"));
  CHECK(q == scale(F("(x^2 + y^2)^2"), 4));
  CHECK(is_hyperbolic_polar(F("x*y")).hyperbolic());
  CHECK(is_hyperbolic_polar(F("x^3 - x*y^2")).hyperbolic());
  CHECK_FALSE(is_hyperbolic_polar(F("x^2 + y^2")).hyperbolic());
}

TEST_CASE("polar form is (D-1)^-1 Hess f (x^2+y^2)^2") {
  std::mt19937_64 rng(31);
  const BinaryForm r2 = F("x^2 + y^2");
  for (int i = 0; i < 40; ++i) {
    const BinaryForm f = random_form(rng, 2 + i % 9, 9);
    CHECK(scale(polar_form(f), f.degree() - 1) == hessian(f) * r2 * r2);
    CHECK(is_hyperbolic(f).verdict == is_hyperbolic_polar(f).verdict);
  }
}

TEST_CASE("witness validity on rejected forms") {
  std::mt19937_64 rng(37);
  int rejected = 0;
  for (int i = 0; i < 120; ++i) {
    const BinaryForm f = random_form(rng, 2 + i % 7, 5);
    const auto c = is_hyperbolic(f);
    if (c.hyperbolic()) continue;
    ++rejected;
    if (c.witness) CHECK(eval(hessian(f), c.witness->first, c.witness->second) >= 0);
  }
  CHECK(rejected > 50);
}

TEST_CASE("product with a linear form") {
  CHECK(hess_linear_product(LinearForm(1, 0), F("x^2 - y^2")) == F("-12*x^2 - 4*y^2"));
  CHECK(hess_linear_product(LinearForm(0, 1), F("x*y")) == F("-4*y^2"));
  CHECK(oracle::same(oracle::hessian(oracle::Poly::from(F("x*y^2"))), hess_linear_product(LinearForm(0, 1), F("x*y"))));
  CHECK(linear_extension_is_hyperbolic(LinearForm(1, 0), F("(x^2-y^2)*(x^4+y^4)")));
  CHECK(linear_extension_is_hyperbolic(LinearForm(1, -2), F("x*(x^2-y^2)")));
  CHECK_FALSE(linear_extension_is_hyperbolic(LinearForm(1, 0), F("x*y")));
  CHECK_THROWS_AS(linear_extension_is_hyperbolic(LinearForm(1, 0), F("x^2 + y^2")), DomainError);
  CHECK_THROWS_AS(hess_linear_product(LinearForm(1, 0), F("x")), DomainError);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const LinearForm l(Rat(i % 5 - 2), Rat(i % 3 + 1));
    const BinaryForm f = random_form(rng, 2 + i % 7, 9);
    CHECK(oracle::same(oracle::hessian(oracle::Poly::from(l.form() * f)), hess_linear_product(l, f)));
  }
  for (const auto& f : hyperbolic_pool(rng, 30, 7)) {
    const LinearForm l(Rat(1), Rat(-3));
    CHECK(linear_extension_is_hyperbolic(l, f) == is_hyperbolic(l.form() * f).hyperbolic());
  }
}

TEST_CASE("interval nonpositivity") {
  CHECK(is_nonpositive_on_unit_interval(UniPoly({-2, 0, 1}), true));
  CHECK(is_nonpositive_on_unit_interval(UniPoly({-1, 1}), false));
  CHECK_FALSE(is_nonpositive_on_unit_interval(UniPoly({-1, 1}), true));
  CHECK_FALSE(is_nonpositive_on_unit_interval(UniPoly({Rat(-1, 10), 0, 0, 1}), false));
  // Interior double root: -(x - 1/2)^2 is <= 0 but not < 0.
  const UniPoly touch = -(UniPoly({Rat(-1, 2), 1}) * UniPoly({Rat(-1, 2), 1}));
  CHECK(is_nonpositive_on_unit_interval(touch, false));
  CHECK_FALSE(is_nonpositive_on_unit_interval(touch, true));
  CHECK(is_nonpositive_on_unit_interval(s_polynomial(3), false));
  CHECK_THROWS_AS(is_nonpositive_on_unit_interval(UniPoly(), false), DomainError);
}
