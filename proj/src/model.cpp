#include "mtdchain/model.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numeric>

namespace mtdchain {

History History::before(const Sequence& seq, std::size_t t, std::size_t k) {
  if (t < k || t > seq.size()) {
    throw Error(Errc::HistoryLengthMismatch, "not enough states before position");
  }
  History h;
  h.recent.reserve(k);
  for (std::size_t l = 1; l <= k; ++l) h.recent.push_back(seq[t - l]);
  return h;
}

MtdModel::MtdModel(StateSpace space, std::vector<TransitionMatrix> qs, std::vector<double> lambda,
                   Distribution stationary_hat, double lp_residual)
    : space_(std::move(space)),
      qs_(std::move(qs)),
      lambda_(std::move(lambda)),
      stationary_hat_(std::move(stationary_hat)),
      lp_residual_(lp_residual) {
  const std::size_t m = space_.size();
  if (qs_.empty()) throw Error(Errc::OrderNotPositive, "model order must be >= 1");
  if (lambda_.size() != qs_.size()) {
    throw Error(Errc::DimensionMismatch, "one lag weight per transition matrix required");
  }
  if (stationary_hat_.size() != m) {
    throw Error(Errc::DimensionMismatch, "stationary estimate has wrong length");
  }
  for (std::size_t l = 0; l < qs_.size(); ++l) {
    if (qs_[l].lag != l + 1) throw Error(Errc::DimensionMismatch, "transition matrices out of lag order");
    if (qs_[l].probs.dim() != m) throw Error(Errc::DimensionMismatch, "transition matrix has wrong size");
    for (State from = 0; from < m; ++from) {
      if (qs_[l].column_is_zero(from)) continue;
      double sum = 0.0;
      for (double p : qs_[l].probs.column(from)) {
        if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::ConfigInvalid, "transition probability outside [0,1]");
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-9) throw Error(Errc::ConfigInvalid, "transition column does not sum to 1");
    }
  }
  double sum = 0.0;
  for (double w : lambda_) {
    if (!(w >= 0.0)) throw Error(Errc::ConfigInvalid, "negative lag weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error(Errc::ConfigInvalid, "lag weights do not sum to 1");
  if (!(lp_residual_ >= 0.0)) throw Error(Errc::ConfigInvalid, "negative LP residual");
}

SquareMatrix<double> MtdModel::mixture_matrix() const {
  const std::size_t m = space_.size();
  SquareMatrix<double> mix(m);
  for (std::size_t l = 0; l < qs_.size(); ++l) {
    for (State from = 0; from < m; ++from) {
      for (State to = 0; to < m; ++to) mix(to, from) += lambda_[l] * qs_[l].probs(to, from);
    }
  }
  return mix;
}

LinearProgram lag_weight_program(const std::vector<TransitionMatrix>& qs,
                                 const Distribution& xhat) {
  const std::size_t k = qs.size();
  const std::size_t m = xhat.size();

  // b(i, l) = (Q^(l) xhat)_i
  std::vector<std::vector<double>> b(m, std::vector<double>(k, 0.0));
  for (std::size_t l = 0; l < k; ++l) {
    for (State i = 0; i < m; ++i) {
      for (State j = 0; j < m; ++j) b[i][l] += qs[l].probs(i, j) * xhat[j];
    }
  }

  LinearProgram lp;
  lp.objective.assign(k + m, 0.0);
  std::fill(lp.objective.begin() + static_cast<std::ptrdiff_t>(k), lp.objective.end(), 1.0);

  for (State i = 0; i < m; ++i) {
    // -B_i lambda - w_i <= -xhat_i
    LinearConstraint lower{std::vector<double>(k + m, 0.0), -xhat[i]};
    // B_i lambda - w_i <= xhat_i
    LinearConstraint upper{std::vector<double>(k + m, 0.0), xhat[i]};
    for (std::size_t l = 0; l < k; ++l) {
      lower.row[l] = -b[i][l];
      upper.row[l] = b[i][l];
    }
    lower.row[k + i] = -1.0;
    upper.row[k + i] = -1.0;
    lp.ub_constraints.push_back(std::move(lower));
    lp.ub_constraints.push_back(std::move(upper));
  }

  LinearConstraint simplex{std::vector<double>(k + m, 0.0), 1.0};
  std::fill(simplex.row.begin(), simplex.row.begin() + static_cast<std::ptrdiff_t>(k), 1.0);
  lp.eq_constraints.push_back(std::move(simplex));
  return lp;
}

MtdModel fit(const Sequence& seq, std::size_t order) {
  if (order < 1) throw Error(Errc::OrderNotPositive, "order must be >= 1");
  if (seq.size() < order + 1) {
    throw Error(Errc::SequenceTooShort, "sequence of length " + std::to_string(seq.size()) +
                                            " is too short for order " + std::to_string(order));
  }

  std::vector<TransitionMatrix> qs;
  qs.reserve(order);
  for (std::size_t lag = 1; lag <= order; ++lag) qs.push_back(normalize(count_frequencies(seq, lag)));
  Distribution xhat = empirical_distribution(seq);

  const LpSolution sol = solve_lp(lag_weight_program(qs, xhat));
  if (sol.status != LpStatus::Optimal) {
    throw Error(Errc::LpFailure,
                std::string("lag-weight program reported ") + lp_status_name(sol.status));
  }

  std::vector<double> lambda(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(order));
  // Pivoting leaves roundoff-level weights on non-basic lags.
  for (double& w : lambda) {
    if (w < 1e-12) w = 0.0;
  }
  const double sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  for (double& w : lambda) w /= sum;
  return MtdModel(seq.space(), std::move(qs), std::move(lambda), std::move(xhat),
                  std::max(sol.objective_value, 0.0));
}

Distribution predict_distribution(const MtdModel& model, const History& hist) {
  const std::size_t k = model.order();
  const std::size_t m = model.space().size();
  if (hist.recent.size() != k) {
    throw Error(Errc::HistoryLengthMismatch, "history has " + std::to_string(hist.recent.size()) +
                                                 " states, model order is " + std::to_string(k));
  }
  std::vector<double> raw(m, 0.0);
  for (std::size_t l = 1; l <= k; ++l) {
    const State from = hist.recent[l - 1];
    if (from >= m) throw Error(Errc::HistoryLengthMismatch, "history state out of range");
    const auto col = model.q(l).probs.column(from);
    for (State i = 0; i < m; ++i) raw[i] += model.lambda()[l - 1] * col[i];
  }
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (!(total > 0.0)) return model.stationary_hat();
  for (double& p : raw) p = std::min(p / total, 1.0);
  return Distribution(std::move(raw));
}

State sample_next(const MtdModel& model, const History& hist, Rng& rng) {
  return sample_categorical(predict_distribution(model, hist).probs(), rng);
}

std::vector<State> simulate(const MtdModel& model, const History& init, std::size_t steps,
                            Rng& rng) {
  History hist = init;
  if (hist.recent.size() != model.order()) {
    throw Error(Errc::HistoryLengthMismatch, "initial history length differs from model order");
  }
  std::vector<State> out;
  out.reserve(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const State next = sample_next(model, hist, rng);
    out.push_back(next);
    hist.recent.pop_back();
    hist.recent.insert(hist.recent.begin(), next);
  }
  return out;
}

Distribution stationary_distribution(const MtdModel& model) {
  const std::size_t m = model.space().size();
  const SquareMatrix<double> mix = model.mixture_matrix();

  Eigen::MatrixXd a(m + 1, m);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m + 1));
  for (State i = 0; i < m; ++i) {
    for (State j = 0; j < m; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = mix(i, j) - (i == j ? 1.0 : 0.0);
    }
  }
  a.row(static_cast<Eigen::Index>(m)).setOnes();
  rhs(static_cast<Eigen::Index>(m)) = 1.0;

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  Eigen::VectorXd x = cod.solve(rhs);

  std::vector<double> probs(m);
  for (State i = 0; i < m; ++i) {
    const double v = x(static_cast<Eigen::Index>(i));
    if (v < -1e-9) throw Error(Errc::NoStationary, "no non-negative stationary distribution");
    probs[i] = std::max(v, 0.0);
  }
  const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (!(std::abs(sum - 1.0) <= 1e-8)) {
    throw Error(Errc::NoStationary, "stationary system has no normalised solution");
  }
  for (double& p : probs) p = std::min(p / sum, 1.0);

  double residual = 0.0;
  for (State i = 0; i < m; ++i) {
    double mx = 0.0;
    for (State j = 0; j < m; ++j) mx += mix(i, j) * probs[j];
    residual += std::abs(mx - probs[i]);
  }
  if (residual > 1e-8) {
    throw Error(Errc::NoStationary, "no distribution satisfies MX = X (residual " +
                                        std::to_string(residual) + ")");
  }
  return Distribution(std::move(probs));
}

}  // namespace mtdchain
