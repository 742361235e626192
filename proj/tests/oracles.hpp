// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the simplex implementation.
#ifndef MTDCHAIN_TESTS_ORACLES_HPP
#define MTDCHAIN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "mtdchain/chain.hpp"
#include "mtdchain/lp.hpp"

namespace mtdchain::testing {

using Dense = std::vector<std::vector<double>>;

// Gaussian elimination with partial pivoting; nullopt when singular.
inline std::optional<std::vector<double>> solve_square(Dense a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) < 1e-12) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline bool feasible(const LinearProgram& lp, const std::vector<double>& x, double tol) {
  for (double xi : x) {
    if (xi < -tol) return false;
  }
  auto dot = [&](const std::vector<double>& row) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += row[i] * x[i];
    return s;
  };
  for (const auto& c : lp.eq_constraints) {
    if (std::abs(dot(c.row) - c.rhs) > tol) return false;
  }
  for (const auto& c : lp.ub_constraints) {
    if (dot(c.row) > c.rhs + tol) return false;
  }
  return true;
}

// Minimum objective over all basic feasible solutions: every choice of v
// active constraints (equalities always active, the rest picked from the
// inequalities and the x >= 0 bounds). Valid when the optimum is attained at a
// vertex, e.g. bounded feasible regions. nullopt when no vertex is feasible.
inline std::optional<double> vertex_enumeration_min(const LinearProgram& lp) {
  const std::size_t v = lp.num_vars();
  const std::size_t n_eq = lp.eq_constraints.size();
  if (n_eq > v) return std::nullopt;
  const std::size_t need = v - n_eq;

  std::vector<LinearConstraint> candidates = lp.ub_constraints;
  for (std::size_t i = 0; i < v; ++i) {
    LinearConstraint bound{std::vector<double>(v, 0.0), 0.0};
    bound.row[i] = 1.0;
    candidates.push_back(bound);
  }

  std::optional<double> best;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == need) {
      Dense a;
      std::vector<double> b;
      for (const auto& c : lp.eq_constraints) {
        a.push_back(c.row);
        b.push_back(c.rhs);
      }
      for (std::size_t idx : pick) {
        a.push_back(candidates[idx].row);
        b.push_back(candidates[idx].rhs);
      }
      const auto x = solve_square(a, b);
      if (!x || !feasible(lp, *x, 1e-9)) return;
      double obj = 0.0;
      for (std::size_t i = 0; i < v; ++i) obj += lp.objective[i] * (*x)[i];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

// b[i][l] = (Q^(l) xhat)_i
inline Dense lag_projections(const std::vector<TransitionMatrix>& qs, std::span<const double> xhat) {
  const std::size_t m = xhat.size();
  Dense b(m, std::vector<double>(qs.size(), 0.0));
  for (std::size_t l = 0; l < qs.size(); ++l) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) b[i][l] += qs[l].probs(i, j) * xhat[j];
    }
  }
  return b;
}

// || xhat - sum_l lambda_l Q^(l) xhat ||_1
inline double l1_mismatch(const std::vector<TransitionMatrix>& qs, const std::vector<double>& lambda,
                          std::span<const double> xhat) {
  const Dense b = lag_projections(qs, xhat);
  double total = 0.0;
  for (std::size_t i = 0; i < xhat.size(); ++i) {
    double r = xhat[i];
    for (std::size_t l = 0; l < lambda.size(); ++l) r -= b[i][l] * lambda[l];
    total += std::abs(r);
  }
  return total;
}

// min over lambda on the grid {a / steps : a integer, sum a = steps} of
// sum_i |xhat_i - sum_l b[i][l] lambda_l|. The last free coordinate is swept
// incrementally so k = 4 at steps = 1000 stays well under a second.
inline double grid_search_lambda(const Dense& b, std::span<const double> xhat, int steps) {
  const std::size_t m = xhat.size();
  const std::size_t k = b.empty() ? 0 : b[0].size();
  const double h = 1.0 / steps;
  if (k == 1) {
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) total += std::abs(xhat[i] - b[i][0]);
    return total;
  }
  double best = std::numeric_limits<double>::infinity();
  // base[i] = xhat_i - sum over fixed coordinates (0..k-3) of b_il * a_l * h
  std::function<void(std::size_t, int, std::vector<double>)> rec =
      [&](std::size_t l, int remaining, std::vector<double> base) {
        if (l == k - 2) {
          // coordinates k-2 (swept) and k-1 (rest)
          std::vector<double> r(m), d(m);
          for (std::size_t i = 0; i < m; ++i) {
            r[i] = base[i] - b[i][k - 1] * remaining * h;
            d[i] = (b[i][k - 2] - b[i][k - 1]) * h;
          }
          for (int t = 0; t <= remaining; ++t) {
            double f = 0.0;
            for (std::size_t i = 0; i < m; ++i) f += std::abs(r[i] - d[i] * t);
            best = std::min(best, f);
          }
          return;
        }
        for (int t = 0; t <= remaining; ++t) {
          std::vector<double> next = base;
          for (std::size_t i = 0; i < m; ++i) next[i] -= b[i][l] * t * h;
          rec(l + 1, remaining - t, std::move(next));
        }
      };
  rec(0, steps, std::vector<double>(xhat.begin(), xhat.end()));
  return best;
}

inline Sequence random_sequence(std::mt19937_64& rng, const StateSpace& space, std::size_t n,
                                std::size_t used_states) {
  std::vector<State> s(n);
  for (auto& x : s) x = rng() % used_states;
  return Sequence(space, std::move(s));
}

inline TransitionMatrix random_stochastic(std::mt19937_64& rng, std::size_t m, std::size_t lag,
                                          double floor = 0.0) {
  TransitionMatrix q{lag, SquareMatrix<double>(m)};
  for (State from = 0; from < m; ++from) {
    double sum = 0.0;
    std::vector<double> col(m);
    for (auto& c : col) {
      c = floor + static_cast<double>(rng() % 1000 + 1) / 1000.0;
      sum += c;
    }
    for (State to = 0; to < m; ++to) q.probs(to, from) = col[to] / sum;
  }
  return q;
}

}  // namespace mtdchain::testing

#endif  // MTDCHAIN_TESTS_ORACLES_HPP
