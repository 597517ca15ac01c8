#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "graphforms/int_matrix.hpp"
#include "graphforms/qform.hpp"
#include "json.hpp"

namespace graphforms {

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct LllResult {
  IntMatrix gram;       // T^T F T
  IntMatrix transform;  // T, unimodular; columns are the reduced basis
};
// Gram-matrix LLL over exact rationals. Throws if F is not positive definite.
LllResult lll_reduce(const IntMatrix& f, const mpq_class& delta = mpq_class(99, 100));

bool is_positive_definite(const IntMatrix& f);

using IntVector = std::vector<mpz_class>;
// All nonzero x with x^T F x <= bound (both signs), Fincke-Pohst enumeration.
std::vector<IntVector> short_vectors(const IntMatrix& f, const mpz_class& bound, long long max_vectors = 1'000'000);
mpz_class quadratic_value(const IntMatrix& f, const IntVector& x);

struct IsometryBudget {
  long long max_nodes = 10'000'000;
  long long max_vectors = 1'000'000;
  double max_seconds = 300.0;
};

enum class IsometryVerdict { kIsometric, kNotIsometric, kExhausted };
std::string to_string(IsometryVerdict v);

struct IsometryResult {
  IsometryVerdict verdict = IsometryVerdict::kExhausted;
  std::optional<IntMatrix> witness;  // U with U^T F1 U = F2
  std::string separating_invariant;  // set when an invariant decides non-isometry
  long long nodes = 0;
  long long vectors = 0;
  double seconds = 0;
  std::string budget_hit;  // which budget ran out

  nlohmann::json to_json() const;
};

IsometryResult is_isometric(const IntMatrix& f1, const IntMatrix& f2, const IsometryBudget& budget = {});

// Degenerate positive semidefinite forms: equal corank and isometric saturation quotients.
IsometryResult semidefinite_equivalent(const IntMatrix& f1, const IntMatrix& f2, const IsometryBudget& budget = {});

// Laplacian forms of two graphs compared through their saturation quotients.
IsometryResult laplacian_form_equivalent(const Graph& g1, const Graph& g2, const IsometryBudget& budget = {});

}  // namespace graphforms
