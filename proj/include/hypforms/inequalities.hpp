#pragma once

#include <string>
#include <vector>

#include "hypforms/unipoly.hpp"

namespace hypforms {

/// One term h_e(x) = c x^e of the expansion of (Hess g_{2n+2})(x, 1).
struct HessTerm {
  std::string name;  // "h_0", "h_2", "h_{2n-2}", "h_{2n}", "h_{2n+2}", "h_{4n-2}", "h_{4n}"
  int exponent = 0;
  Rat coeff;
};

/// The seven terms with the coefficients as published. The h_{2n+2}
/// coefficient there reads -4n - 4n^2 + 16n^2 + 16n^4.
std::vector<HessTerm> hessian_terms_printed(int n);
/// Same list with h_{2n+2} = -4n - 4n^2 + 16n^3 + 16n^4.
std::vector<HessTerm> hessian_terms(int n);

UniPoly sum_terms(const std::vector<HessTerm>& terms);

/// (Hess g_{2n+2})(x, 1) by direct symbolic computation.
UniPoly hessian_g_restricted(int n);

/// Names of terms that, replaced alone by what the direct expansion demands,
/// make the printed sum exact. Empty when the printed sum already matches.
std::vector<std::string> misprint_candidates(int n);

/// S = h_0 + h_2 + h_{2n-2} + h_{2n} + h_{2n+2} (corrected coefficients).
UniPoly s_polynomial(int n);

/// g(x) = (1 - x^2)^2 x^{2(n-1)}.
UniPoly lemma_g(int n);
/// -8n^2 - 8n^2 x^2 + 16 n^4 g(x).
UniPoly lemma2_lhs(int n);
/// -12n - 4n x^2 + 16 n^3 g(x).
UniPoly lemma3_lhs(int n);

struct Lemma1Result {
  int critical_in_open_interval = 0;  // distinct roots of g' in (0, 1)
  Rat critical_square;                // (n-1)/(n+1)
  bool critical_square_is_root = false;
  Rat max_value;                      // g at the critical point, evaluated through u = x^2
  Rat max_closed_form;                // 4 (n-1)^{n-1} / (n+1)^{n+1}
  Rat statement_form;                 // 4 / ((n-1)^2 (1 + 2/(n-1))^{n-1}) as printed in the lemma
  bool ok() const {
    return critical_in_open_interval == 1 && critical_square_is_root && max_value == max_closed_form;
  }
};

/// Throws DomainError for n < 2.
Lemma1Result lemma1_check(int n);

}  // namespace hypforms
