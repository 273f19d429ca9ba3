#include <random>

#include "doctest.h"
#include "hypforms/binary_form.hpp"
#include "hypforms/unipoly.hpp"
#include "oracle.hpp"

using namespace hypforms;

namespace {

BinaryForm rnd(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> c(-6, 6);
  std::vector<Rat> v;
  for (int i = 0; i <= d; ++i) v.emplace_back(c(rng), 1 + (c(rng) + 6) % 3);
  for (auto& r : v) r.canonicalize();
  return BinaryForm(d, v);
}

BinaryForm F(const char* s) { return parse_form(s); }

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rat r = parse_rat("6/-4");
  CHECK(r.get_den() > 0);
  CHECK(r == Rat(-3, 2));
  CHECK(to_string(parse_rat("10/5")) == "2");
  CHECK(to_fraction_string(Rat(2)) == "2/1");
  CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rat("abc"), DomainError);
  CHECK(from_double(0.375) == Rat(3, 8));
}

TEST_CASE("parse_form examples") {
  const BinaryForm p3 = F("x^3 - x*y^2");
  CHECK(p3.degree() == 3);
  CHECK(p3.coeffs() == std::vector<Rat>{1, 0, -1, 0});

  const BinaryForm g6 = F("(x^2 - y^2)*(x^4 + y^4)");
  CHECK(g6.degree() == 6);
  CHECK(g6.coeffs() == std::vector<Rat>{1, 0, -1, 0, 1, 0, -1});

  CHECK_THROWS_AS(F("x + y^2"), DomainError);
  CHECK_THROWS_AS(F(""), DomainError);
  CHECK_THROWS_AS(F("x^2 +* y"), DomainError);
  CHECK_THROWS_AS(F("(x + y"), DomainError);

  CHECK(F("3: 1, 0, -1, 0") == p3);
  CHECK(F("1/2*x*y") == BinaryForm(2, {0, Rat(1, 2), 0}));
  CHECK(F(" x * y ") == F("x*y"));
}

TEST_CASE("parse/format round trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const BinaryForm f = rnd(rng, 1 + i % 10);
    CHECK(parse_form(format_form(f)) == f);
    CHECK(parse_form(format_coeffs(f)) == f);
  }
  const BinaryForm z = BinaryForm::zero(4);
  CHECK(parse_form(format_form(z)) == z);
}

TEST_CASE("eval examples") {
  const BinaryForm p3 = F("x^3 - x*y^2");
  CHECK(eval(p3, 1, 0) == 1);
  CHECK(eval(p3, 1, 1) == 0);
  CHECK(eval(F("(x^2-y^2)*(x^4+y^4)"), 2, 1) == 51);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    const BinaryForm f = rnd(rng, i % 9);
    const Rat x = Rat(i - 7) / 3, y = Rat(5 - i) / 4;
    CHECK(eval(f, x, y) == oracle::Poly::from(f).at(x, y));
  }
}

TEST_CASE("ring operations") {
  CHECK(F("x^2 - y^2") * F("x^2 + y^2") == F("x^4 - y^4"));
  const BinaryForm z = scale(F("x^3"), 0);
  CHECK(z.is_zero());
  CHECK(z.degree() == 3);
  CHECK(add(F("x^2"), F("y^2")) == F("x^2 + y^2"));
  CHECK_THROWS_AS(add(F("x^2"), F("y^3")), DomainError);
  CHECK(power(F("x+y"), 3) == F("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const int d = i % 11;
    const BinaryForm a = rnd(rng, d), b = rnd(rng, d), c = rnd(rng, (i * 7) % 11);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK(a - a == BinaryForm::zero(d));
    CHECK(oracle::same(oracle::Poly::from(a) * oracle::Poly::from(c), a * c));
  }
}

TEST_CASE("partial derivatives") {
  CHECK(partial_x(F("x^3 - x*y^2")) == F("3*x^2 - y^2"));
  CHECK(partial_y(F("x^3 - x*y^2")) == F("-2*x*y"));
  const BinaryForm py = partial_x(F("y^3"));
  CHECK(py.is_zero());
  CHECK(py.degree() == 2);
  CHECK_THROWS_AS(partial_x(BinaryForm(0, {5})), DomainError);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const BinaryForm f = rnd(rng, 1 + i % 9);
    CHECK(oracle::same(oracle::Poly::from(f).dx(), partial_x(f)));
    CHECK(oracle::same(oracle::Poly::from(f).dy(), partial_y(f)));
  }
}

TEST_CASE("rotational derivative") {
  CHECK(rotational_derivative(F("x^3 - x*y^2")) == F("y^3 - 5*x^2*y"));
  CHECK(rotational_derivative(F("x^2 + y^2")).is_zero());
  CHECK(rotational_derivative(F("x*y")) == F("x^2 - y^2"));
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const BinaryForm f = rnd(rng, 1 + i % 6), g = rnd(rng, 1 + (i * 5) % 7);
    CHECK(rotational_derivative(f * g) == rotational_derivative(f) * g + f * rotational_derivative(g));
  }
}

TEST_CASE("euler identity") {
  CHECK(euler_check(F("x^3 - x*y^2")));
  CHECK(euler_check(F("x^2 + y^2")));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) CHECK(euler_check(rnd(rng, 8)));
}

TEST_CASE("chart restriction") {
  CHECK(restrict(F("x^3 - x*y^2"), Chart::x_equals_1) == UniPoly({1, 0, -1}));
  CHECK(restrict(F("x^3 - x*y^2"), Chart::y_equals_1) == UniPoly({0, -1, 0, 1}));
  CHECK(restrict(F("x^2 + y^2"), Chart::x_equals_1) == UniPoly({1, 0, 1}));
  CHECK(restrict(F("x^2 + y^2"), Chart::y_equals_1) == UniPoly({1, 0, 1}));
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    const BinaryForm f = rnd(rng, i % 7), g = rnd(rng, (i * 3) % 8);
    for (Chart c : {Chart::x_equals_1, Chart::y_equals_1})
      CHECK(restrict(f * g, c) == restrict(f, c) * restrict(g, c));
  }
}

TEST_CASE("linear substitution") {
  // f(x + y, y) for f = x y.
  CHECK(compose_linear(F("x*y"), 1, 1, 0, 1) == F("x*y + y^2"));
  CHECK_THROWS_AS(LinearForm(0, 0), DomainError);
  CHECK(LinearForm(2, -1).form() == F("2*x - y"));
}

TEST_CASE("univariate algebra") {
  const UniPoly a({-1, 0, 1}), b({1, 1});
  const auto [q, r] = divmod(a, b);
  CHECK(q == UniPoly({-1, 1}));
  CHECK(r.is_zero());
  const UniPoly sq = UniPoly({-1, 0, 1}) * UniPoly({-1, 0, 1}) * UniPoly({2, 0, 1});
  CHECK(squarefree_part(sq).degree() == 4);
  CHECK(gcd(sq, sq.derivative()) == UniPoly({-1, 0, 1}));
  CHECK(primitive_part(UniPoly({Rat(-2, 3), Rat(4, 3)})) == UniPoly({-1, 2}));
}
