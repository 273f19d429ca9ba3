#include "hypforms/sturm.hpp"

#include <algorithm>

namespace hypforms {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("SturmChain: zero polynomial");
  UniPoly a = squarefree_part(p);
  seq_.push_back(a);
  if (a.degree() < 1) return;
  UniPoly b = primitive_part(a.derivative());
  while (!b.is_zero()) {
    seq_.push_back(b);
    UniPoly r = primitive_part(-remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
}

int SturmChain::variations_at(const Rat& t) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& q : seq_) s.push_back(sgn(q(t)));
  return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& q : seq_) {
    int lead = sgn(q.leading());
    s.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& q : seq_) s.push_back(sgn(q.leading()));
  return count_variations(s);
}

int SturmChain::count_roots() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
  if (!(a < b)) throw DomainError("SturmChain::count_roots: empty interval");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_roots_open(const Rat& a, const Rat& b) const {
  return count_roots(a, b) - (squarefree()(b) == 0 ? 1 : 0);
}

int sturm_count(const UniPoly& p) { return SturmChain(p).count_roots(); }

int sturm_count(const UniPoly& p, const Rat& a, const Rat& b) { return SturmChain(p).count_roots(a, b); }

Rat cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("cauchy_root_bound: zero polynomial");
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max<Rat>(m, abs(p.coeff(i) / p.leading()));
  return m + 1;
}

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rat& lo, const Rat& hi) {
  SturmChain chain(p);
  const UniPoly& q = chain.squarefree();
  std::vector<RootInterval> out;
  if (!(lo < hi)) return out;

  std::vector<std::pair<Rat, Rat>> work{{lo, hi}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int n = chain.count_roots_open(a, b);
    if (n == 0) continue;
    if (n == 1) {
      // Shrink until neither endpoint is a root, or the root lands on a midpoint.
      bool exact = false;
      while (q(a) == 0 || q(b) == 0) {
        Rat m = (a + b) / 2;
        if (q(m) == 0) {
          a = b = m;
          exact = true;
          break;
        }
        if (chain.count_roots_open(a, m) == 1)
          b = m;
        else
          a = m;
      }
      out.push_back({a, b, exact});
      continue;
    }
    Rat m = (a + b) / 2;
    if (q(m) == 0) out.push_back({m, m, true});
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& l, const RootInterval& r) { return l.lo < r.lo; });
  return out;
}

std::vector<RootInterval> isolate_roots(const UniPoly& p) {
  const Rat bound = cauchy_root_bound(p);
  return isolate_roots(p, -bound, bound);
}

std::vector<Rat> gap_samples(const Rat& lo, const Rat& hi, const std::vector<RootInterval>& roots) {
  // Boundary markers behave like exact roots; the sampling rule then only
  // needs the neighbouring marker types.
  std::vector<RootInterval> markers;
  markers.reserve(roots.size() + 2);
  markers.push_back({lo, lo, true});
  markers.insert(markers.end(), roots.begin(), roots.end());
  markers.push_back({hi, hi, true});

  std::vector<Rat> samples;
  for (std::size_t i = 0; i + 1 < markers.size(); ++i) {
    const auto& l = markers[i];
    const auto& r = markers[i + 1];
    if (!l.exact)
      samples.push_back(l.hi);
    else if (!r.exact)
      samples.push_back(r.lo);
    else
      samples.push_back((l.lo + r.lo) / 2);
  }
  return samples;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (hi < lo) return simplest_rational_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  // 0 < lo <= hi: continued-fraction descent.
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rat fl_r(fl);
  if (fl_r == lo) return lo;
  if (fl_r + 1 <= hi) return fl_r + 1;
  // Both in (fl, fl + 1): recurse on reciprocals of the fractional parts.
  Rat inner = simplest_rational_between(1 / (hi - fl_r), 1 / (lo - fl_r));
  return fl_r + 1 / inner;
}

std::optional<Rat> rational_root_in(const UniPoly& p, const RootInterval& iv) {
  const UniPoly q = squarefree_part(p);
  if (iv.exact) return q(iv.lo) == 0 ? std::optional<Rat>(iv.lo) : std::nullopt;
  // Any rational root r/s of the primitive integer polynomial has s | leading.
  // Two distinct fractions with denominators <= L differ by >= 1/L^2, so an
  // interval narrower than that holds at most one candidate: the simplest one.
  const Rat lead = abs(q.leading());
  const Rat width_limit = 1 / (lead * lead);
  SturmChain chain(q);
  Rat a = iv.lo, b = iv.hi;
  while (b - a >= width_limit) {
    Rat m = (a + b) / 2;
    if (q(m) == 0) return m;
    if (chain.count_roots_open(a, m) == 1)
      b = m;
    else
      a = m;
  }
  Rat cand = simplest_rational_between(a, b);
  if (q(cand) == 0) return cand;
  return std::nullopt;
}

}  // namespace hypforms
