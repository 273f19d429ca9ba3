#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hypforms/binary_form.hpp"

namespace hypforms {

enum class FamilyTag { arnold, p_factorized, g_even, f_odd, f_even, representative };

std::string to_string(FamilyTag t);

struct FamilyMember {
  BinaryForm form;
  FamilyTag family_tag;
  std::vector<int> params;  // (D, m), (k), (n) or (n, k) depending on the family
  int expected_index = 0;
  std::string label;        // e.g. "P_5 Q_2", "g_6", "f_9(n=2,k=2)"
};

/// {family_tag, params, degree, expected_index, label, form}.
nlohmann::json to_json(const FamilyMember& m);

/// x^{2n} + y^{2n}.
BinaryForm q_form(int n);

/// Re (x + i y)^m by the binomial expansion.
BinaryForm re_power(int m);

/// (x^2 + y^2)^{(D-m)/2} Re (x + i y)^m for m >= 3, D - m even, m <= D < m^2.
FamilyMember arnold(int degree, int m);

/// Odd: x prod_{i=1..k} (x^2 - i^2 y^2). Even: additionally (x - (k+1) y). k >= 1.
FamilyMember p_factorized(int k, bool even);

/// (x^2 - y^2)(x^{2n} + y^{2n}), n >= 2.
FamilyMember g_even(int n);

/// Odd: x (x^{2n} + y^{2n}) prod_{i=1..k} (x^2 - i^2 y^2); even: times (x - (k+1) y).
/// The odd member with (n, k) = (1, 1) is x g_4 and is rejected: it is not hyperbolic.
FamilyMember f_family(int n, int k, bool even);

/// One member per admissible index at degree D (odd D >= 3, even D >= 6),
/// ordered by increasing index.
std::vector<FamilyMember> representatives(int degree);

struct Table1Entry {
  int degree;
  int m;
  std::string label;
  int expected_index;
};

/// Every valid Arnold-family entry for 3 <= D <= max_degree (max_degree <= 16),
/// rows by D, columns by decreasing m.
std::vector<Table1Entry> table1(int max_degree);

/// Checks certification and expected_index of a member; throws std::logic_error on drift.
void verify_member(const FamilyMember& m);

}  // namespace hypforms
