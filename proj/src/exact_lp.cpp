#include "cliquepack/exact_lp.hpp"

#include <algorithm>

namespace cliquepack {

void LinearProgram::validate() const {
  if (num_vars < 0) throw PreconditionError("negative variable count");
  if (static_cast<int>(objective.size()) != num_vars) {
    throw PreconditionError("objective length differs from num_vars");
  }
  std::vector<char> seen(num_vars, 0);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    for (const auto& [var, coeff] : constraints[i].terms) {
      if (var < 0 || var >= num_vars) {
        throw PreconditionError("constraint " + std::to_string(i) + " references variable " +
                                std::to_string(var));
      }
      if (seen[var]) {
        throw PreconditionError("constraint " + std::to_string(i) + " repeats variable " +
                                std::to_string(var));
      }
      seen[var] = 1;
    }
    for (const auto& term : constraints[i].terms) seen[term.first] = 0;
  }
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

constexpr long kDegenerateRun = 50;

// Column layout: [structural | slack | artificial]. The objective row stores
// the negated reduced costs, so a negative entry marks an improving column.
class Tableau {
public:
  Tableau(const LinearProgram& lp, const LpOptions& options)
      : budget_(options.pivot_budget), always_bland_(options.rule == PivotRule::bland) {
    vars_ = lp.num_vars;
    rows_ = static_cast<int>(lp.constraints.size());
    for (const auto& c : lp.constraints) {
      if (sgn(c.rhs) < 0) ++artificials_;
    }
    cols_ = vars_ + rows_ + artificials_;
    cells_.assign(rows_, std::vector<Rational>(cols_));
    rhs_.resize(rows_);
    basis_.resize(rows_);
    int next_artificial = vars_ + rows_;
    for (int i = 0; i < rows_; ++i) {
      const auto& c = lp.constraints[i];
      auto& row = cells_[i];
      const bool negate = sgn(c.rhs) < 0;
      for (const auto& [var, coeff] : c.terms) row[var] = negate ? Rational(-coeff) : coeff;
      row[vars_ + i] = negate ? -1 : 1;
      rhs_[i] = negate ? Rational(-c.rhs) : c.rhs;
      if (negate) {
        row[next_artificial] = 1;
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = vars_ + i;
      }
    }
  }

  bool has_artificials() const { return artificials_ > 0; }
  long pivots() const { return pivots_; }

  // Installs cost vector over all columns and prices out the basis.
  void set_objective(const std::vector<Rational>& cost) {
    zrow_.assign(cols_, Rational(0));
    zvalue_ = 0;
    for (int j = 0; j < cols_; ++j) zrow_[j] = -cost[j];
    for (int i = 0; i < rows_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      const auto& row = cells_[i];
      for (int j = 0; j < cols_; ++j) {
        if (sgn(row[j]) != 0) zrow_[j] += cb * row[j];
      }
      zvalue_ += cb * rhs_[i];
    }
  }

  // Optimizes over columns [0, allowed_cols). Returns false if unbounded.
  bool optimize(int allowed_cols) {
    long degenerate = 0;
    while (true) {
      const bool bland = always_bland_ || degenerate >= kDegenerateRun;
      int entering = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (sgn(zrow_[j]) >= 0) continue;
        if (entering < 0 || (!bland && zrow_[j] < zrow_[entering])) entering = j;
        if (bland) break;
      }
      if (entering < 0) return true;
      int leaving = -1;
      Rational best_ratio;
      Rational ratio;
      for (int i = 0; i < rows_; ++i) {
        const Rational& a = cells_[i][entering];
        if (sgn(a) <= 0) continue;
        ratio = rhs_[i] / a;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      degenerate = sgn(best_ratio) == 0 ? degenerate + 1 : 0;
      pivot(leaving, entering);
    }
  }

  void pivot(int prow, int pcol) {
    if (++pivots_ > budget_) {
      throw BudgetExceeded("LP pivot budget of " + std::to_string(budget_) + " exhausted");
    }
    auto& row = cells_[prow];
    const Rational inv = 1 / row[pcol];
    nonzero_.clear();
    for (int j = 0; j < cols_; ++j) {
      if (sgn(row[j]) != 0) {
        row[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    rhs_[prow] *= inv;
    Rational factor;
    for (int i = 0; i < rows_; ++i) {
      if (i == prow) continue;
      auto& other = cells_[i];
      if (sgn(other[pcol]) == 0) continue;
      factor = other[pcol];
      for (int j : nonzero_) other[j] -= factor * row[j];
      rhs_[i] -= factor * rhs_[prow];
    }
    if (sgn(zrow_[pcol]) != 0) {
      factor = zrow_[pcol];
      for (int j : nonzero_) zrow_[j] -= factor * row[j];
      zvalue_ -= factor * rhs_[prow];
    }
    basis_[prow] = pcol;
  }

  // After phase 1: pivot zero-valued artificials out of the basis when possible.
  // Rows where that fails are redundant; their artificial stays basic at zero.
  void expel_artificials() {
    const int first_art = vars_ + rows_;
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < first_art) continue;
      const auto& row = cells_[i];
      for (int j = 0; j < first_art; ++j) {
        if (sgn(row[j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  int vars() const { return vars_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int first_artificial() const { return vars_ + rows_; }
  const Rational& objective_value() const { return zvalue_; }
  const Rational& reduced(int j) const { return zrow_[j]; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(vars_);
    for (int i = 0; i < rows_; ++i) {
      const int b = basis_[i];
      if (b < vars_) x[b] = rhs_[i];
    }
    return x;
  }

private:
  long budget_;
  bool always_bland_;
  long pivots_ = 0;
  int vars_ = 0, rows_ = 0, cols_ = 0, artificials_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<Rational> zrow_;
  Rational zvalue_;
  std::vector<int> nonzero_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const LpOptions& options) {
  lp.validate();
  Tableau tab(lp, options);
  LpSolution out;

  if (tab.has_artificials()) {
    std::vector<Rational> phase1(tab.cols());
    for (int j = tab.first_artificial(); j < tab.cols(); ++j) phase1[j] = -1;
    tab.set_objective(phase1);
    tab.optimize(tab.cols());  // bounded above by zero
    if (sgn(tab.objective_value()) < 0) {
      out.status = LpStatus::infeasible;
      out.pivots = tab.pivots();
      return out;
    }
    tab.expel_artificials();
  }

  std::vector<Rational> cost(tab.cols());
  std::copy(lp.objective.begin(), lp.objective.end(), cost.begin());
  tab.set_objective(cost);
  const bool bounded = tab.optimize(tab.first_artificial());
  out.pivots = tab.pivots();
  if (!bounded) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.value = tab.objective_value();
  out.primal = tab.primal();
  // Slack i has unit column e_i, so its reduced cost is -y_i.
  out.dual.resize(tab.rows());
  for (int i = 0; i < tab.rows(); ++i) out.dual[i] = tab.reduced(tab.vars() + i);
  return out;
}

bool verify_certificate(const LinearProgram& lp, const LpSolution& sol, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (sol.status != LpStatus::optimal) return fail("solution is not optimal");
  if (static_cast<int>(sol.primal.size()) != lp.num_vars) return fail("primal length mismatch");
  if (sol.dual.size() != lp.constraints.size()) return fail("dual length mismatch");

  Rational primal_value;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (sgn(sol.primal[j]) < 0) return fail("primal x" + std::to_string(j) + " < 0");
    primal_value += lp.objective[j] * sol.primal[j];
  }
  std::vector<Rational> reduced(lp.objective.begin(), lp.objective.end());  // c - A^T y
  Rational dual_value;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    const Rational& y = sol.dual[i];
    if (sgn(y) < 0) return fail("dual y" + std::to_string(i) + " < 0");
    Rational lhs;
    for (const auto& [var, coeff] : c.terms) {
      lhs += coeff * sol.primal[var];
      reduced[var] -= coeff * y;
    }
    if (lhs > c.rhs) return fail("constraint " + std::to_string(i) + " violated");
    dual_value += c.rhs * y;
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    if (sgn(reduced[j]) > 0) return fail("dual constraint " + std::to_string(j) + " violated");
  }
  if (primal_value != sol.value) return fail("reported value differs from c.x");
  if (primal_value != dual_value) {
    return fail("duality gap: primal " + to_string(primal_value) + " dual " + to_string(dual_value));
  }
  return true;
}

}  // namespace cliquepack
