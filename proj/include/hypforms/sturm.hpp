#pragma once

#include <optional>
#include <vector>

#include "hypforms/unipoly.hpp"

namespace hypforms {

/// Signed remainder sequence of the squarefree part of p and its derivative.
/// Each element is reduced to its positive primitive part, which leaves all
/// sign variations unchanged and keeps coefficient growth in check.
class SturmChain {
 public:
  /// Throws DomainError for the zero polynomial.
  explicit SturmChain(const UniPoly& p);

  const std::vector<UniPoly>& sequence() const { return seq_; }
  const UniPoly& squarefree() const { return seq_.front(); }

  int variations_at(const Rat& t) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Distinct real roots on the whole line.
  int count_roots() const;
  /// Distinct real roots in (a, b]; requires a < b.
  int count_roots(const Rat& a, const Rat& b) const;
  /// Distinct real roots in the open interval (a, b).
  int count_roots_open(const Rat& a, const Rat& b) const;

 private:
  std::vector<UniPoly> seq_;
};

/// Number of distinct real roots of p on the whole line.
int sturm_count(const UniPoly& p);
/// Number of distinct real roots of p in (a, b].
int sturm_count(const UniPoly& p, const Rat& a, const Rat& b);

/// One isolated real root: either the exact rational value (lo == hi) or an
/// open interval (lo, hi) holding exactly one root with p(lo), p(hi) != 0.
struct RootInterval {
  Rat lo;
  Rat hi;
  bool exact = false;
};

/// Bound B with every real root of p in (-B, B).
Rat cauchy_root_bound(const UniPoly& p);

/// Isolates the distinct real roots of p in the open interval (lo, hi),
/// sorted increasingly.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& lo, const Rat& hi);
/// Isolates all distinct real roots of p.
std::vector<RootInterval> isolate_roots(const UniPoly& p);

/// One rational point in each closed gap between consecutive isolated roots in
/// [lo, hi] (endpoints count as gap boundaries). No returned point is an
/// interior root, so the sign there is the sign on the whole open gap.
std::vector<Rat> gap_samples(const Rat& lo, const Rat& hi, const std::vector<RootInterval>& roots);

/// Exact rational root inside an isolating interval, if the root is rational.
std::optional<Rat> rational_root_in(const UniPoly& p, const RootInterval& iv);

/// Simplest (smallest denominator) rational in the closed interval [lo, hi].
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

}  // namespace hypforms
