#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "hypforms/binary_form.hpp"

namespace hypforms {

struct CaseResult {
  std::string id;
  nlohmann::json expected;
  nlohmann::json got;
  bool pass = false;
  std::string comparison = "exact";  // or "tol=<value>" for float comparisons
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  double wall_time = 0.0;
  std::uint64_t seed = 0;
  nlohmann::json params = nlohmann::json::object();

  bool all_pass() const;
  std::size_t failed() const;
};

nlohmann::json to_json(const SuiteReport& r);

struct VerifyParams {
  std::optional<int> d_max;
  std::optional<int> n_max;
  std::uint64_t seed = 20240917;
};

/// table1, conjecture, lemmas, hessian_expansion, equivalence, winding,
/// obs_arnold, poincare, isotopies, figures, all.
const std::vector<std::string>& suite_names();

/// Throws DomainError on an unknown suite or out-of-range flags.
SuiteReport run_suite(const std::string& name, const VerifyParams& params = {});

/// Worker count: HYPFORMS_THREADS when set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

// Seeded corpora shared by the suites and the tests.

/// Integer coefficients in [-bound, bound], not identically zero.
BinaryForm random_form(std::mt19937_64& rng, int degree, int bound = 9);

/// Hyperbolic forms of degree 2..max_degree: family members composed with
/// random invertible integer substitutions (Hess(f o A) = det(A)^2 (Hess f) o A).
std::vector<BinaryForm> hyperbolic_pool(std::mt19937_64& rng, int count, int max_degree);

/// Every family member with degree <= max_degree (table1, P, g, f, representatives).
std::vector<std::pair<std::string, BinaryForm>> family_corpus(int max_degree);

}  // namespace hypforms

#include "hypforms/verify_impl.hpp"
