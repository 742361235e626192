#ifndef MTDCHAIN_LP_HPP
#define MTDCHAIN_LP_HPP

#include <cstddef>
#include <vector>

namespace mtdchain {

struct LinearConstraint {
  std::vector<double> row;
  double rhs = 0.0;
};

/// minimize objective . x  subject to
///   eq_constraints:  row . x == rhs
///   ub_constraints:  row . x <= rhs
///   x >= 0
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> eq_constraints;
  std::vector<LinearConstraint> ub_constraints;

  std::size_t num_vars() const noexcept { return objective.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* lp_status_name(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;        // empty unless Optimal
  double objective_value = 0.0; // objective . x when Optimal
};

struct LpTolerances {
  double pivot = 1e-10;
  double feasibility = 1e-8;
};

/// Dense two-phase primal simplex with Bland's rule. Deterministic: the same
/// program always yields the same vertex. Throws DimensionMismatch for
/// malformed programs and LpFailure if the iteration guard trips.
LpSolution solve_lp(const LinearProgram& lp, const LpTolerances& tol = {});

}  // namespace mtdchain

#endif  // MTDCHAIN_LP_HPP
