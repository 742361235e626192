#include "mtdchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace mtdchain {

namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

StateSpace::StateSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw Error(Errc::InvalidStateSpace, "state space needs at least 2 states");
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(Errc::InvalidStateSpace, "empty state label");
    if (std::any_of(l.begin(), l.end(), is_separator) || l.front() == '#') {
      throw Error(Errc::InvalidStateSpace, "state label '" + l + "' contains a separator");
    }
    if (!seen.insert(l).second) {
      throw Error(Errc::InvalidStateSpace, "duplicate state label '" + l + "'");
    }
  }
}

StateSpace StateSpace::parse(std::string_view decl) {
  std::vector<std::string> labels = tokenize(decl);
  if (labels.size() == 1) {
    // "WDL"
    std::string compact = labels.front();
    labels.clear();
    for (char c : compact) labels.emplace_back(1, c);
  }
  return StateSpace(std::move(labels));
}

std::optional<State> StateSpace::index_of(std::string_view label) const {
  for (State i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool StateSpace::single_char() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(),
                     [](const std::string& l) { return l.size() == 1; });
}

Sequence::Sequence(StateSpace space, std::vector<State> states)
    : space_(std::move(space)), states_(std::move(states)) {
  if (states_.empty()) throw Error(Errc::EmptyInput, "sequence is empty");
  for (State s : states_) {
    if (s >= space_.size()) {
      throw Error(Errc::DimensionMismatch, "state index out of range");
    }
  }
}

Sequence Sequence::tail(std::size_t count) const {
  if (count >= states_.size()) return *this;
  return Sequence(space_, std::vector<State>(states_.end() - static_cast<std::ptrdiff_t>(count),
                                             states_.end()));
}

std::string Sequence::render(bool compact) const {
  compact = compact && space_.single_char();
  std::string out;
  for (std::size_t t = 0; t < states_.size(); ++t) {
    if (!compact && t > 0) out += ' ';
    out += space_.label(states_[t]);
  }
  return out;
}

std::uint64_t FrequencyMatrix::total() const {
  const auto d = counts.data();
  return std::accumulate(d.begin(), d.end(), std::uint64_t{0});
}

bool TransitionMatrix::column_is_zero(State from) const {
  const auto col = probs.column(from);
  return std::all_of(col.begin(), col.end(), [](double p) { return p == 0.0; });
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw Error(Errc::DimensionMismatch, "empty distribution");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(Errc::ConfigInvalid, "distribution entry outside [0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(Errc::ConfigInvalid, "distribution does not sum to 1");
  }
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!trim(line).empty() && trim(line).front() == '#') continue;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_separator(line[i])) ++i;
      const std::size_t start = i;
      while (i < line.size() && !is_separator(line[i])) ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

Sequence parse_sequence(std::span<const std::string> tokens, const StateSpace& space) {
  std::vector<State> states;
  states.reserve(tokens.size());
  std::size_t position = 0;
  for (const auto& token : tokens) {
    if (auto idx = space.index_of(token)) {
      states.push_back(*idx);
      ++position;
      continue;
    }
    if (!space.single_char() || token.size() < 2) {
      throw Error(Errc::UnknownLabel,
                  "unknown label '" + token + "' at position " + std::to_string(position + 1),
                  position + 1);
    }
    for (char c : token) {
      ++position;
      auto ch = space.index_of(std::string_view(&c, 1));
      if (!ch) {
        throw Error(Errc::UnknownLabel,
                    "unknown label '" + std::string(1, c) + "' at position " +
                        std::to_string(position),
                    position);
      }
      states.push_back(*ch);
    }
  }
  if (states.empty()) throw Error(Errc::EmptyInput, "no state labels in input");
  return Sequence(space, std::move(states));
}

Sequence parse_sequence(std::string_view text, const StateSpace& space) {
  const auto tokens = tokenize(text);
  return parse_sequence(tokens, space);
}

std::optional<StateSpace> read_states_header(std::string_view text) {
  constexpr std::string_view kTag = "states:";
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.empty()) continue;
    if (line.front() != '#') break;
    line = trim(line.substr(1));
    if (line.substr(0, kTag.size()) == kTag) {
      return StateSpace::parse(line.substr(kTag.size()));
    }
  }
  return std::nullopt;
}

FrequencyMatrix count_frequencies(const Sequence& seq, std::size_t lag) {
  if (lag < 1) throw Error(Errc::LagNotPositive, "lag must be >= 1");
  FrequencyMatrix freq{lag, SquareMatrix<std::uint64_t>(seq.space().size())};
  const auto x = seq.states();
  for (std::size_t t = 0; t + lag < x.size(); ++t) {
    ++freq.counts(x[t + lag], x[t]);
  }
  return freq;
}

TransitionMatrix normalize(const FrequencyMatrix& freq) {
  const std::size_t m = freq.counts.dim();
  TransitionMatrix q{freq.lag, SquareMatrix<double>(m)};
  for (State from = 0; from < m; ++from) {
    const auto col = freq.counts.column(from);
    const std::uint64_t sum = std::accumulate(col.begin(), col.end(), std::uint64_t{0});
    if (sum == 0) continue;
    for (State to = 0; to < m; ++to) {
      q.probs(to, from) = static_cast<double>(col[to]) / static_cast<double>(sum);
    }
  }
  return q;
}

Distribution empirical_distribution(const Sequence& seq) {
  std::vector<std::size_t> counts(seq.space().size(), 0);
  for (State s : seq.states()) ++counts[s];
  std::vector<double> probs(counts.size());
  const auto n = static_cast<double>(seq.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    probs[i] = static_cast<double>(counts[i]) / n;
  }
  return Distribution(std::move(probs));
}

}  // namespace mtdchain
