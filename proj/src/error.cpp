#include "mtdchain/error.hpp"

namespace mtdchain {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::InvalidStateSpace: return "InvalidStateSpace";
    case Errc::HistoryLengthMismatch: return "HistoryLengthMismatch";
    case Errc::UnknownTeam: return "UnknownTeam";
    case Errc::MalformedRow: return "MalformedRow";
    case Errc::MalformedModel: return "MalformedModel";
    case Errc::Io: return "Io";
    case Errc::LagNotPositive: return "LagNotPositive";
    case Errc::OrderNotPositive: return "OrderNotPositive";
    case Errc::SequenceTooShort: return "SequenceTooShort";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LpFailure: return "LpFailure";
    case Errc::NoStationary: return "NoStationary";
    case Errc::WindowTooShort: return "WindowTooShort";
    case Errc::ConfigInvalid: return "ConfigInvalid";
  }
  return "Unknown";
}

bool is_input_error(Errc code) {
  switch (code) {
    case Errc::EmptyInput:
    case Errc::UnknownLabel:
    case Errc::InvalidStateSpace:
    case Errc::HistoryLengthMismatch:
    case Errc::UnknownTeam:
    case Errc::MalformedRow:
    case Errc::MalformedModel:
    case Errc::Io:
      return true;
    default:
      return false;
  }
}

}  // namespace mtdchain
