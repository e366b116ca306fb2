#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cliquepack/rational.hpp"

namespace cliquepack {

/// maximize objective . x  subject to  row . x <= rhs for every constraint, x >= 0.
struct LinearProgram {
  struct Constraint {
    /// Sparse row: (variable index, coefficient), indices unique and < num_vars.
    std::vector<std::pair<int, Rational>> terms;
    Rational rhs;
  };

  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  /// Throws PreconditionError when the shape is inconsistent.
  void validate() const;
};

enum class LpStatus { optimal, unbounded, infeasible };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> primal;  ///< one entry per variable
  std::vector<Rational> dual;    ///< one entry per constraint
  long pivots = 0;
};

enum class PivotRule {
  /// Most negative reduced cost; Bland's rule after a run of degenerate pivots.
  largest_coefficient,
  bland,
};

struct LpOptions {
  long pivot_budget = 200'000;
  PivotRule rule = PivotRule::largest_coefficient;
};

/// Raised when a solver runs out of its pivot or node budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// Dense-tableau primal simplex; two phases when some rhs < 0.
/// Deterministic: identical programs yield identical solutions.
LpSolution solve(const LinearProgram& lp, const LpOptions& options = {});

/// Exact optimality check: primal and dual feasibility plus equal objectives.
/// On failure returns false and, if `why` is set, describes the first violation.
bool verify_certificate(const LinearProgram& lp, const LpSolution& solution,
                        std::string* why = nullptr);

}  // namespace cliquepack
