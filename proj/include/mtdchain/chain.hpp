#ifndef MTDCHAIN_CHAIN_HPP
#define MTDCHAIN_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtdchain/error.hpp"

namespace mtdchain {

using State = std::size_t;

/// Ordered alphabet of m >= 2 distinct, non-empty labels. Index i of the
/// label list is the state index used everywhere else.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);

  /// Parses "W,D,L", "W D L" or "WDL"-style declarations. The compact form is
  /// only used when the text has no separators.
  static StateSpace parse(std::string_view decl);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(State s) const { return labels_.at(s); }
  std::optional<State> index_of(std::string_view label) const;

  /// True when every label is exactly one character.
  bool single_char() const noexcept;

  bool operator==(const StateSpace&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Non-empty, time-ordered list of state indices over a StateSpace.
class Sequence {
 public:
  Sequence(StateSpace space, std::vector<State> states);

  const StateSpace& space() const noexcept { return space_; }
  std::span<const State> states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_.size(); }
  State operator[](std::size_t t) const { return states_[t]; }

  /// Most recent `count` states (the whole sequence when count >= size()).
  Sequence tail(std::size_t count) const;

  /// Labels joined by spaces, or concatenated when every label is a single
  /// character and `compact` is set.
  std::string render(bool compact = false) const;

  bool operator==(const Sequence&) const = default;

 private:
  StateSpace space_;
  std::vector<State> states_;
};

/// Dense m x m matrix stored column-major. Column = "from" state,
/// row = "to" state.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t m) : m_(m), data_(m * m, T{}) {}

  std::size_t dim() const noexcept { return m_; }
  T& operator()(State to, State from) { return data_[from * m_ + to]; }
  const T& operator()(State to, State from) const { return data_[from * m_ + to]; }
  std::span<const T> column(State from) const {
    return std::span<const T>(data_).subspan(from * m_, m_);
  }
  std::span<const T> data() const noexcept { return data_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t m_ = 0;
  std::vector<T> data_;
};

/// Lag-l transition counts F^(l); entry (to, from) counts positions t with
/// X_t = from and X_{t+l} = to.
struct FrequencyMatrix {
  std::size_t lag = 1;
  SquareMatrix<std::uint64_t> counts;

  std::uint64_t total() const;
};

/// Column-stochastic estimate of the lag-l transition matrix. A column whose
/// source counts are all zero stays all-zero.
struct TransitionMatrix {
  std::size_t lag = 1;
  SquareMatrix<double> probs;

  bool column_is_zero(State from) const;

  bool operator==(const TransitionMatrix&) const = default;
};

/// Probability vector over the m states.
class Distribution {
 public:
  Distribution() = default;
  /// Throws ConfigInvalid unless entries are in [0,1] and sum to 1 (1e-9).
  explicit Distribution(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](State s) const { return probs_[s]; }
  std::span<const double> probs() const noexcept { return probs_; }

  bool operator==(const Distribution&) const = default;

 private:
  std::vector<double> probs_;
};

/// Splits sequence text into tokens. Whitespace and commas separate tokens;
/// lines starting with '#' are skipped.
std::vector<std::string> tokenize(std::string_view text);

/// Maps tokens to state indices. A token that is not a label is expanded into
/// its characters when every label is one character ("WWLWL"). Throws
/// UnknownLabel with the 1-based position of the offending symbol, or
/// EmptyInput.
Sequence parse_sequence(std::span<const std::string> tokens, const StateSpace& space);
Sequence parse_sequence(std::string_view text, const StateSpace& space);

/// Reads an optional "# states: W D L" header from sequence text.
std::optional<StateSpace> read_states_header(std::string_view text);

FrequencyMatrix count_frequencies(const Sequence& seq, std::size_t lag);

TransitionMatrix normalize(const FrequencyMatrix& freq);

Distribution empirical_distribution(const Sequence& seq);

}  // namespace mtdchain

#endif  // MTDCHAIN_CHAIN_HPP
