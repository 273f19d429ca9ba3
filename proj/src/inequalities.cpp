#include "hypforms/inequalities.hpp"

#include "hypforms/binary_form.hpp"
#include "hypforms/certify.hpp"
#include "hypforms/families.hpp"
#include "hypforms/sturm.hpp"

namespace hypforms {

namespace {

void require_n(int n, int lo) {
  if (n < lo) throw DomainError("n must be at least " + std::to_string(lo));
}

Rat r(long v) { return Rat(v); }

std::vector<HessTerm> terms(int n, bool printed) {
  require_n(n, 2);
  const Rat N(n), N2 = N * N, N3 = N2 * N, N4 = N3 * N;
  const Rat c_h0 = -4 - 12 * N - 8 * N2;
  const Rat c_h2 = -4 * N - 8 * N2;
  return {
      {"h_0", 0, c_h0},
      {"h_2", 2, c_h2},
      {"h_{2n-2}", 2 * n - 2, -4 * N - 4 * N2 + 16 * N3 + 16 * N4},
      {"h_{2n}", 2 * n, -8 - 24 * N - 24 * N2 - 32 * N3 - 32 * N4},
      {"h_{2n+2}", 2 * n + 2, printed ? Rat(-4 * N - 4 * N2 + 16 * N2 + 16 * N4) : Rat(-4 * N - 4 * N2 + 16 * N3 + 16 * N4)},
      {"h_{4n-2}", 4 * n - 2, c_h2},
      {"h_{4n}", 4 * n, c_h0},
  };
}

}  // namespace

std::vector<HessTerm> hessian_terms_printed(int n) { return terms(n, true); }
std::vector<HessTerm> hessian_terms(int n) { return terms(n, false); }

UniPoly sum_terms(const std::vector<HessTerm>& ts) {
  UniPoly s;
  for (const auto& t : ts) s = s + UniPoly::monomial(t.exponent, t.coeff);
  return s;
}

UniPoly hessian_g_restricted(int n) {
  require_n(n, 2);
  return restrict(hessian(g_even(n).form), Chart::y_equals_1);
}

std::vector<std::string> misprint_candidates(int n) {
  const auto printed = hessian_terms_printed(n);
  const UniPoly direct = hessian_g_restricted(n);
  if (sum_terms(printed) == direct) return {};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    UniPoly rest = direct;
    for (std::size_t j = 0; j < printed.size(); ++j)
      if (j != i) rest = rest - UniPoly::monomial(printed[j].exponent, printed[j].coeff);
    if (rest == UniPoly::monomial(printed[i].exponent, rest.coeff(printed[i].exponent)))
      out.push_back(printed[i].name);
  }
  return out;
}

UniPoly s_polynomial(int n) {
  auto t = hessian_terms(n);
  t.erase(t.begin() + 5, t.end());
  return sum_terms(t);
}

UniPoly lemma_g(int n) {
  require_n(n, 1);
  const UniPoly one_minus_x2({r(1), r(0), r(-1)});
  return one_minus_x2 * one_minus_x2 * UniPoly::monomial(2 * (n - 1), Rat(1));
}

UniPoly lemma2_lhs(int n) {
  const Rat N(n);
  return UniPoly({-8 * N * N, Rat(0), -8 * N * N}) + Rat(16 * N * N * N * N) * lemma_g(n);
}

UniPoly lemma3_lhs(int n) {
  const Rat N(n);
  return UniPoly({-12 * N, Rat(0), -4 * N}) + Rat(16 * N * N * N) * lemma_g(n);
}

Lemma1Result lemma1_check(int n) {
  require_n(n, 2);
  Lemma1Result res;
  const UniPoly dg = lemma_g(n).derivative();
  res.critical_in_open_interval = SturmChain(dg).count_roots_open(Rat(0), Rat(1));

  // g' is odd: g'(x) = x h(x^2). Collect h and test the claimed u0 exactly.
  std::vector<Rat> hc;
  for (int i = 1; i <= dg.degree(); i += 2) hc.push_back(dg.coeff(i));
  const UniPoly h(hc);
  res.critical_square = Rat(n - 1, n + 1);
  res.critical_square.canonicalize();
  res.critical_square_is_root = h(res.critical_square) == 0;

  const Rat u = res.critical_square;
  res.max_value = (1 - u) * (1 - u) * pow(u, static_cast<unsigned>(n - 1));
  res.max_closed_form = 4 * pow(Rat(n - 1), static_cast<unsigned>(n - 1)) / pow(Rat(n + 1), static_cast<unsigned>(n + 1));
  const Rat base = 1 + Rat(2) / (n - 1);
  res.statement_form = Rat(4) / (Rat((n - 1) * (n - 1)) * pow(base, static_cast<unsigned>(n - 1)));
  return res;
}

}  // namespace hypforms
