#include <algorithm>
#include <set>

#include "doctest.h"
#include "hypforms/certify.hpp"
#include "hypforms/families.hpp"
#include "hypforms/index_classify.hpp"

using namespace hypforms;

namespace {
BinaryForm F(const char* s) { return parse_form(s); }

std::vector<int> sorted_indexes(const std::vector<FamilyMember>& ms) {
  std::vector<int> v;
  for (const auto& m : ms) v.push_back(index_gamma(m.form));
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}
}  // namespace

TEST_CASE("real part of (x + iy)^m") {
  CHECK(re_power(3) == F("x^3 - 3*x*y^2"));
  CHECK(re_power(4) == F("x^4 - 6*x^2*y^2 + y^4"));
  CHECK(re_power(2) == F("x^2 - y^2"));
}

TEST_CASE("arnold family") {
  const auto a = arnold(3, 3);
  CHECK(a.form == F("x^3 - 3*x*y^2"));
  CHECK(a.expected_index == -1);
  CHECK(arnold(5, 3).form == F("(x^2 + y^2)*(x^3 - 3*x*y^2)"));
  const auto big = arnold(16, 6);
  CHECK(big.form == power(F("x^2 + y^2"), 5) * re_power(6));
  CHECK(big.expected_index == -4);
  CHECK(index_gamma(big.form) == -4);
  CHECK_THROWS_AS(arnold(4, 3), DomainError);   // D - m odd
  CHECK_THROWS_AS(arnold(9, 3), DomainError);   // D >= m^2
  CHECK_THROWS_AS(arnold(4, 2), DomainError);   // m = 2 excluded
  CHECK_THROWS_AS(arnold(5, 7), DomainError);   // m > D
  const auto j = to_json(a);
  CHECK(j["family_tag"] == "arnold");
  CHECK(j["degree"] == 3);
  CHECK(j["expected_index"] == -1);
}

TEST_CASE("factorized P family") {
  CHECK(p_factorized(1, false).form == F("x*(x^2 - y^2)"));
  CHECK(p_factorized(1, false).expected_index == -1);
  CHECK(p_factorized(4, false).form == F("x*(x^2-y^2)*(x^2-4*y^2)*(x^2-9*y^2)*(x^2-16*y^2)"));
  CHECK(p_factorized(4, false).expected_index == -7);
  CHECK(p_factorized(1, true).form == F("x*(x - 2*y)*(x^2 - y^2)"));
  CHECK(p_factorized(1, true).expected_index == -2);
  CHECK_THROWS_AS(p_factorized(0, false), DomainError);
}

TEST_CASE("g family") {
  CHECK(g_even(2).form == F("(x^2-y^2)*(x^4+y^4)"));
  CHECK(g_even(2).expected_index == 0);
  CHECK_THROWS_AS(g_even(1), DomainError);
  const auto g16 = g_even(7);
  CHECK(g16.form.degree() == 16);
  CHECK(index_gamma(g16.form) == 0);
}

TEST_CASE("f family") {
  const auto t1 = f_family(1, 3, false);
  CHECK(t1.form == F("x*(x^2+y^2)*(x^2-y^2)*(x^2-4*y^2)*(x^2-9*y^2)"));
  CHECK(index_gamma(t1.form) == -5);
  CHECK(index_gamma(f_family(2, 2, false).form) == -3);
  CHECK(f_family(3, 1, false).form == F("x*(x^6+y^6)*(x^2-y^2)"));
  CHECK(index_gamma(f_family(3, 1, false).form) == -1);
  CHECK(f_family(2, 1, true).form == F("x*(x^4+y^4)*(x - 2*y)*(x^2-y^2)"));
  CHECK(f_family(2, 1, true).expected_index == -2);
  // x (x^2 + y^2)(x^2 - y^2) = x g_4: Hessian vanishes on y = 0.
  CHECK_THROWS_AS(f_family(1, 1, false), DomainError);
  CHECK_FALSE(is_hyperbolic(F("x*(x^2+y^2)*(x^2-y^2)")).hyperbolic());
  CHECK(hessian(F("x*(x^2+y^2)*(x^2-y^2)")) == F("-16*y^2*(15*x^4 + y^4)"));
  CHECK_THROWS_AS(f_family(0, 1, false), DomainError);
  CHECK_THROWS_AS(f_family(1, 0, true), DomainError);
}

TEST_CASE("representatives examples") {
  const auto r9 = representatives(9);
  CHECK(r9.size() == 4);
  CHECK(sorted_indexes(r9) == std::vector<int>{-1, -3, -5, -7});
  std::vector<BinaryForm> forms;
  for (const auto& m : r9) forms.push_back(m.form);
  CHECK(std::count(forms.begin(), forms.end(), p_factorized(4, false).form) == 1);
  CHECK(std::count(forms.begin(), forms.end(), f_family(1, 3, false).form) == 1);
  CHECK(std::count(forms.begin(), forms.end(), f_family(3, 1, false).form) == 1);

  const auto r3 = representatives(3);
  CHECK(r3.size() == 1);
  CHECK(sorted_indexes(r3) == std::vector<int>{-1});
  CHECK(sorted_indexes(representatives(8)) == std::vector<int>{0, -2, -4, -6});
  CHECK_THROWS_AS(representatives(4), DomainError);
  CHECK_THROWS_AS(representatives(2), DomainError);
  for (const auto& m : r9) CHECK(m.family_tag == FamilyTag::representative);
}

TEST_CASE("representatives realize every admissible index") {
  for (int d = 3; d <= 19; d += 2) CHECK(sorted_indexes(representatives(d)) == admissible_indices(d));
  for (int d = 6; d <= 20; d += 2) CHECK(sorted_indexes(representatives(d)) == admissible_indices(d));
}

TEST_CASE("table1 rows") {
  auto row = [](int d) {
    std::vector<std::pair<std::string, int>> r;
    for (const auto& e : table1(16))
      if (e.degree == d) r.emplace_back(e.label, e.expected_index);
    return r;
  };
  CHECK(row(7) == std::vector<std::pair<std::string, int>>{{"P_7", -5}, {"P_5 Q_2", -3}, {"P_3 Q_4", -1}});
  CHECK(row(10) ==
        std::vector<std::pair<std::string, int>>{{"P_10", -8}, {"P_8 Q_2", -6}, {"P_6 Q_4", -4}, {"P_4 Q_6", -2}});
  CHECK(row(3) == std::vector<std::pair<std::string, int>>{{"P_3", -1}});
  CHECK(table1(16).size() == 51);
  CHECK_THROWS_AS(table1(17), DomainError);
  CHECK_THROWS_AS(table1(2), DomainError);
}

TEST_CASE("arnold gap at odd degree") {
  for (int d = 9; d <= 15; d += 2) {
    bool arnold_hits = false;
    for (const auto& e : table1(16))
      if (e.degree == d && e.expected_index == -1) arnold_hits = true;
    CHECK_FALSE(arnold_hits);
    CHECK(sorted_indexes(representatives(d)).front() == -1);
  }
}

TEST_CASE("every family member is hyperbolic with its index") {
  for (const auto& e : table1(16)) {
    const auto m = arnold(e.degree, e.m);
    CHECK(is_hyperbolic(m.form).hyperbolic());
    CHECK(index_gamma(m.form) == m.expected_index);
  }
  for (int n = 2; n <= 7; ++n) CHECK(is_hyperbolic(g_even(n).form).hyperbolic());
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (bool even : {false, true}) {
        if (n == 1 && k == 1 && !even) continue;
        const auto m = f_family(n, k, even);
        CHECK(is_hyperbolic(m.form).hyperbolic());
        CHECK(index_gamma(m.form) == m.expected_index);
      }
}
