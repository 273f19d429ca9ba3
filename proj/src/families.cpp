#include "hypforms/families.hpp"

#include <stdexcept>

#include "hypforms/certify.hpp"
#include "hypforms/index_classify.hpp"

namespace hypforms {

namespace {

const BinaryForm kX(1, {Rat(1), Rat(0)});

// x - c y
BinaryForm line(const Rat& c) { return BinaryForm(1, {Rat(1), -c}); }

// prod_{i=1..k} (x^2 - i^2 y^2)
BinaryForm difference_product(int k) {
  BinaryForm acc(0, {Rat(1)});
  for (int i = 1; i <= k; ++i) acc = acc * BinaryForm(2, {Rat(1), Rat(0), Rat(-i * i)});
  return acc;
}

FamilyMember finish(FamilyMember m) {
#ifndef NDEBUG
  verify_member(m);
#endif
  return m;
}

}  // namespace

std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::arnold: return "arnold";
    case FamilyTag::p_factorized: return "p_factorized";
    case FamilyTag::g_even: return "g_even";
    case FamilyTag::f_odd: return "f_odd";
    case FamilyTag::f_even: return "f_even";
    case FamilyTag::representative: return "representative";
  }
  return "unknown";
}

nlohmann::json to_json(const FamilyMember& m) {
  return {{"family_tag", to_string(m.family_tag)}, {"params", m.params}, {"degree", m.form.degree()},
          {"expected_index", m.expected_index}, {"label", m.label}, {"form", format_form(m.form)}};
}

BinaryForm q_form(int n) {
  if (n < 1) throw DomainError("q_form: n must be at least 1");
  BinaryForm q = BinaryForm::zero(2 * n);
  q = q + BinaryForm::monomial(2 * n, 0) + BinaryForm::monomial(2 * n, 2 * n);
  return q;
}

BinaryForm re_power(int m) {
  if (m < 0) throw DomainError("re_power: negative exponent");
  // Re (x + iy)^m = sum over even j of (-1)^{j/2} C(m, j) x^{m-j} y^j.
  std::vector<Rat> c(m + 1, Rat(0));
  Int binom(1);
  for (int j = 0; j <= m; ++j) {
    if (j % 2 == 0) c[j] = Rat((j / 2) % 2 == 0 ? binom : Int(-binom));
    binom = binom * (m - j) / (j + 1);
  }
  return BinaryForm(m, std::move(c));
}

FamilyMember arnold(int degree, int m) {
  if (m < 3 || (degree - m) % 2 != 0 || degree < m || degree >= m * m)
    throw DomainError("arnold: need m >= 3, D - m even and m <= D < m^2 (got D=" + std::to_string(degree) +
                      ", m=" + std::to_string(m) + ")");
  const int half = (degree - m) / 2;
  BinaryForm form = power(q_form(1), half) * re_power(m);
  std::string label = "P_" + std::to_string(m) + (half > 0 ? " Q_" + std::to_string(degree - m) : "");
  return finish({std::move(form), FamilyTag::arnold, {degree, m}, 2 - m, std::move(label)});
}

FamilyMember p_factorized(int k, bool even) {
  if (k < 1) throw DomainError("p_factorized: k must be at least 1");
  BinaryForm form = kX * difference_product(k);
  if (even) form = form * line(Rat(k + 1));
  const int d = even ? 2 * k + 2 : 2 * k + 1;
  return finish({std::move(form), FamilyTag::p_factorized, {k, even ? 2 : 1}, 2 - d, "P_" + std::to_string(d)});
}

FamilyMember g_even(int n) {
  if (n < 2) throw DomainError("g_even: n must be at least 2 (g_4 is not hyperbolic)");
  BinaryForm form = BinaryForm(2, {Rat(1), Rat(0), Rat(-1)}) * q_form(n);
  return finish({std::move(form), FamilyTag::g_even, {n}, 0, "g_" + std::to_string(2 * n + 2)});
}

FamilyMember f_family(int n, int k, bool even) {
  if (n < 1 || k < 1) throw DomainError("f_family: need n >= 1 and k >= 1");
  // x Q_2 (x^2 - y^2) = x g_4 has Hess = -16 y^2 (15 x^4 + y^4), zero on y = 0.
  if (n == 1 && k == 1 && !even) throw DomainError("f_family: (n, k) = (1, 1) odd is x g_4, which is not hyperbolic");
  BinaryForm form = kX * q_form(n) * difference_product(k);
  if (even) form = form * line(Rat(k + 1));
  const int j = even ? 2 : 1;
  const int d = 2 * n + 2 * k + j;
  const std::string label = "Q_" + std::to_string(2 * n) + " P_" + std::to_string(2 * k + j);
  return finish({std::move(form), even ? FamilyTag::f_even : FamilyTag::f_odd, {n, k}, 2 - 2 * k - j, label + " (D=" + std::to_string(d) + ")"});
}

std::vector<FamilyMember> representatives(int degree) {
  if (degree < 3) throw DomainError("representatives: degree must be at least 3");
  if (degree % 2 == 0 && degree < 6)
    throw DomainError("representatives: even degree must be at least 6 (Hyp(4) is not covered by the g family)");
  std::vector<FamilyMember> out;
  const bool even = degree % 2 == 0;
  // Index 2 - D from P_D, then 2 - (D - 2j) from Q_{2j} P_{D-2j}, then 0 from g_D when D is even.
  out.push_back(p_factorized(even ? (degree - 2) / 2 : (degree - 1) / 2, even));
  const int jmax = even ? (degree - 4) / 2 : (degree - 3) / 2;
  for (int j = 1; j <= jmax; ++j) {
    const int rest = degree - 2 * j;  // degree of the factorized part
    const int k = even ? (rest - 2) / 2 : (rest - 1) / 2;
    if (j == 1 && k == 1 && !even) {
      // Q_2 P_3 is excluded above; the Arnold member P_3 Q_2 has the same index -1.
      out.push_back(arnold(5, 3));
      continue;
    }
    out.push_back(f_family(j, k, even));
  }
  if (even) out.push_back(g_even((degree - 2) / 2));
  for (auto& m : out) m.family_tag = FamilyTag::representative;
  return out;
}

std::vector<Table1Entry> table1(int max_degree) {
  if (max_degree < 3 || max_degree > 16) throw DomainError("table1: max degree must lie in [3, 16]");
  std::vector<Table1Entry> out;
  for (int d = 3; d <= max_degree; ++d)
    for (int m = d; m >= 3; m -= 2) {
      if (d >= m * m) continue;
      std::string label = "P_" + std::to_string(m) + (d > m ? " Q_" + std::to_string(d - m) : "");
      out.push_back({d, m, std::move(label), 2 - m});
    }
  return out;
}

void verify_member(const FamilyMember& m) {
  if (!is_hyperbolic(m.form).hyperbolic())
    throw std::logic_error("family member " + m.label + " failed hyperbolicity certification");
  const int idx = index_gamma(m.form);
  if (idx != m.expected_index)
    throw std::logic_error("family member " + m.label + ": index " + std::to_string(idx) + " != expected " +
                           std::to_string(m.expected_index));
}

}  // namespace hypforms
