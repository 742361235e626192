#include "mtdchain/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mtdchain/error.hpp"

namespace mtdchain {

const char* lp_status_name(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

// Row-major simplex tableau. Row `rows_` is the reduced-cost row; the last
// column holds right-hand sides (and the negated objective in the cost row).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return a_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const { return a_[r * (cols_ + 1) + c]; }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double rhs(std::size_t r) const { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }
  double cost(std::size_t c) const { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Loads `costs` into the cost row and prices out the current basis.
  void set_costs(const std::vector<double>& costs) {
    for (std::size_t c = 0; c <= cols_; ++c) cost(c) = c < costs.size() ? costs[c] : 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = cost(basis_[r]);
      if (cb == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) cost(c) -= cb * at(r, c);
    }
  }

  void erase_row(std::size_t r) {
    const auto first = a_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1));
    a_.erase(first, first + static_cast<std::ptrdiff_t>(cols_ + 1));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> a_;
  std::vector<std::size_t> basis_;
};

enum class PhaseResult { Optimal, Unbounded };

// Bland's rule: lowest-index improving column enters; among minimum-ratio
// rows the one whose basic variable has the lowest index leaves.
PhaseResult run_simplex(Tableau& t, std::size_t allowed_cols, const LpTolerances& tol) {
  const std::size_t guard = 1000 * (t.rows() + t.cols() + 1);
  for (std::size_t iter = 0; iter < guard; ++iter) {
    std::size_t enter = allowed_cols;
    for (std::size_t c = 0; c < allowed_cols; ++c) {
      if (t.cost(c) < -tol.pivot) {
        enter = c;
        break;
      }
    }
    if (enter == allowed_cols) return PhaseResult::Optimal;

    std::size_t leave = t.rows();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, enter);
      if (a <= tol.pivot) continue;
      const double ratio = std::max(t.rhs(r), 0.0) / a;
      if (leave == t.rows() || ratio < best - 1e-12) {
        best = ratio;
        leave = r;
      } else if (ratio <= best + 1e-12 && t.basis()[r] < t.basis()[leave]) {
        leave = r;
      }
    }
    if (leave == t.rows()) return PhaseResult::Unbounded;
    t.pivot(leave, enter);
  }
  throw Error(Errc::LpFailure, "simplex iteration limit reached");
}

void check_dimensions(const LinearProgram& lp) {
  const std::size_t v = lp.num_vars();
  if (v == 0) throw Error(Errc::DimensionMismatch, "linear program has no variables");
  auto check = [v](const std::vector<LinearConstraint>& rows) {
    for (const auto& c : rows) {
      if (c.row.size() != v) {
        throw Error(Errc::DimensionMismatch, "constraint row length differs from variable count");
      }
      if (!std::isfinite(c.rhs) ||
          !std::all_of(c.row.begin(), c.row.end(), [](double x) { return std::isfinite(x); })) {
        throw Error(Errc::DimensionMismatch, "non-finite constraint coefficient");
      }
    }
  };
  check(lp.eq_constraints);
  check(lp.ub_constraints);
  if (!std::all_of(lp.objective.begin(), lp.objective.end(),
                   [](double x) { return std::isfinite(x); })) {
    throw Error(Errc::DimensionMismatch, "non-finite objective coefficient");
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpTolerances& tol) {
  check_dimensions(lp);

  const std::size_t v = lp.num_vars();
  const std::size_t n_eq = lp.eq_constraints.size();
  const std::size_t n_ub = lp.ub_constraints.size();
  const std::size_t rows = n_eq + n_ub;

  // Column layout: [originals | slacks (one per ub row) | artificials].
  // Rows are sign-flipped so every rhs is non-negative; a ub row keeps its
  // slack as the starting basic variable only when the flip was not needed.
  std::vector<bool> needs_artificial(rows, true);
  for (std::size_t i = 0; i < n_ub; ++i) {
    needs_artificial[n_eq + i] = lp.ub_constraints[i].rhs < 0.0;
  }
  const std::size_t n_art =
      static_cast<std::size_t>(std::count(needs_artificial.begin(), needs_artificial.end(), true));
  const std::size_t art_begin = v + n_ub;
  const std::size_t cols = art_begin + n_art;

  Tableau t(rows, cols);
  std::size_t next_art = art_begin;
  for (std::size_t r = 0; r < rows; ++r) {
    const bool is_eq = r < n_eq;
    const auto& con = is_eq ? lp.eq_constraints[r] : lp.ub_constraints[r - n_eq];
    const double sign = con.rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < v; ++c) t.at(r, c) = sign * con.row[c];
    if (!is_eq) t.at(r, v + (r - n_eq)) = sign;
    t.rhs(r) = sign * con.rhs;
    if (needs_artificial[r]) {
      t.at(r, next_art) = 1.0;
      t.basis()[r] = next_art++;
    } else {
      t.basis()[r] = v + (r - n_eq);
    }
  }

  if (n_art > 0) {
    std::vector<double> phase1(cols, 0.0);
    std::fill(phase1.begin() + static_cast<std::ptrdiff_t>(art_begin), phase1.end(), 1.0);
    t.set_costs(phase1);
    run_simplex(t, cols, tol);  // bounded below by zero

    double infeasibility = 0.0;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basis()[r] >= art_begin) infeasibility += std::max(t.rhs(r), 0.0);
    }
    double scale = 1.0;
    for (std::size_t r = 0; r < t.rows(); ++r) scale = std::max(scale, std::abs(t.rhs(r)));
    if (infeasibility > tol.feasibility * scale) return {LpStatus::Infeasible, {}, 0.0};

    // Drive remaining (zero-level) artificials out; drop redundant rows.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < art_begin) {
        ++r;
        continue;
      }
      std::size_t pc = art_begin;
      for (std::size_t c = 0; c < art_begin; ++c) {
        if (std::abs(t.at(r, c)) > tol.pivot) {
          pc = c;
          break;
        }
      }
      if (pc == art_begin) {
        t.erase_row(r);
      } else {
        t.pivot(r, pc);
        ++r;
      }
    }
  }

  std::vector<double> phase2(lp.objective);
  phase2.resize(cols, 0.0);
  t.set_costs(phase2);
  if (run_simplex(t, art_begin, tol) == PhaseResult::Unbounded) {
    return {LpStatus::Unbounded, {}, 0.0};
  }

  LpSolution sol{LpStatus::Optimal, std::vector<double>(v, 0.0), 0.0};
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const std::size_t b = t.basis()[r];
    if (b < v) sol.x[b] = std::max(t.rhs(r), 0.0);
  }
  for (std::size_t c = 0; c < v; ++c) sol.objective_value += lp.objective[c] * sol.x[c];
  return sol;
}

}  // namespace mtdchain
