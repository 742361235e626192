#ifndef MTDCHAIN_ERROR_HPP
#define MTDCHAIN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtdchain {

enum class Errc {
  // input errors
  EmptyInput,
  UnknownLabel,
  InvalidStateSpace,
  HistoryLengthMismatch,
  UnknownTeam,
  MalformedRow,
  MalformedModel,
  Io,
  // computation errors
  LagNotPositive,
  OrderNotPositive,
  SequenceTooShort,
  DimensionMismatch,
  LpFailure,
  NoStationary,
  WindowTooShort,
  ConfigInvalid,
};

const char* errc_name(Errc code);

// Input errors map to exit status 2 in the CLI, everything else to 3.
bool is_input_error(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t position = 0)
      : std::runtime_error(what), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }

  // 1-based token position for UnknownLabel, line number for MalformedRow,
  // zero otherwise.
  std::size_t position() const noexcept { return position_; }

 private:
  Errc code_;
  std::size_t position_;
};

}  // namespace mtdchain

#endif  // MTDCHAIN_ERROR_HPP
