#ifndef MTDCHAIN_MODEL_HPP
#define MTDCHAIN_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mtdchain/chain.hpp"
#include "mtdchain/lp.hpp"
#include "mtdchain/random.hpp"

namespace mtdchain {

/// Conditioning window for a k-th order prediction; recent[0] is the most
/// recent state, recent[l-1] the state l steps back.
struct History {
  std::vector<State> recent;

  /// History ending at position `t` of `seq`, i.e. states t-1, t-2, ..., t-k.
  /// Requires t >= k.
  static History before(const Sequence& seq, std::size_t t, std::size_t k);
};

/// Fitted k-th order mixture-transition-distribution chain:
///
///   P(X_n = i | X_{n-1}, ..., X_{n-k}) = sum_l lambda_l * Q^(l)(i, X_{n-l})
///
/// Immutable once constructed.
class MtdModel {
 public:
  /// Validates every invariant (weights on the simplex, one matrix per lag in
  /// order, dimensions consistent with the state space). Throws
  /// DimensionMismatch or ConfigInvalid.
  MtdModel(StateSpace space, std::vector<TransitionMatrix> qs, std::vector<double> lambda,
           Distribution stationary_hat, double lp_residual);

  std::size_t order() const noexcept { return qs_.size(); }
  const StateSpace& space() const noexcept { return space_; }
  const std::vector<TransitionMatrix>& transition_matrices() const noexcept { return qs_; }
  /// Matrix for lag l, 1-based.
  const TransitionMatrix& q(std::size_t lag) const { return qs_.at(lag - 1); }
  const std::vector<double>& lambda() const noexcept { return lambda_; }
  const Distribution& stationary_hat() const noexcept { return stationary_hat_; }
  double lp_residual() const noexcept { return lp_residual_; }

  /// sum_l lambda_l Q^(l).
  SquareMatrix<double> mixture_matrix() const;

  bool operator==(const MtdModel&) const = default;

 private:
  StateSpace space_;
  std::vector<TransitionMatrix> qs_;
  std::vector<double> lambda_;
  Distribution stationary_hat_;
  double lp_residual_;
};

/// The lag-weight program over variables (lambda_1..lambda_k, w_1..w_m):
///   minimize sum_i w_i
///   s.t. w >= xhat - B lambda,  w >= B lambda - xhat,  sum lambda = 1,
///        lambda, w >= 0
/// with B = [Q^(1) xhat | ... | Q^(k) xhat].
LinearProgram lag_weight_program(const std::vector<TransitionMatrix>& qs,
                                 const Distribution& xhat);

/// Estimates Q^(1..k) from lag counts, xhat from state proportions and the lag
/// weights from lag_weight_program. Throws OrderNotPositive, SequenceTooShort
/// (n < k + 1) or LpFailure.
MtdModel fit(const Sequence& seq, std::size_t order);

/// Next-state distribution for `hist`. The raw mixture is renormalised when
/// zero columns remove mass; if all mass is gone the model's stationary_hat
/// is returned. Throws HistoryLengthMismatch.
Distribution predict_distribution(const MtdModel& model, const History& hist);

/// One categorical draw from predict_distribution.
State sample_next(const MtdModel& model, const History& hist, Rng& rng);

/// Draws `steps` states forward from `init`, feeding each draw back into the
/// history window.
std::vector<State> simulate(const MtdModel& model, const History& init, std::size_t steps,
                            Rng& rng);

/// Solves (M - I) X = 0 with sum(X) = 1 for the mixture matrix M, taking the
/// minimum-norm solution when the fixed-point space has dimension > 1 (so the
/// identity yields the uniform vector). Throws NoStationary when no
/// non-negative solution with ||MX - X||_1 <= 1e-8 exists.
Distribution stationary_distribution(const MtdModel& model);

}  // namespace mtdchain

#endif  // MTDCHAIN_MODEL_HPP
