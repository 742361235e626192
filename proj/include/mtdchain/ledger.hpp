#ifndef MTDCHAIN_LEDGER_HPP
#define MTDCHAIN_LEDGER_HPP

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mtdchain/chain.hpp"

namespace mtdchain {

/// Splits one CSV line. Handles double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

/// One game from a team's perspective.
struct LedgerRecord {
  std::string date;  // YYYY-MM-DD
  std::string team;
  std::string opponent;
  State result = 0;
  std::size_t line = 0;  // 1-based source line
};

/// Game ledger with header row "date,team,opponent,result". Records of each
/// team are sorted by date; two games of one team on the same date are
/// rejected.
class Ledger {
 public:
  /// Throws MalformedRow(line) on bad headers, field counts, dates or result
  /// labels.
  static Ledger read(std::istream& in, const StateSpace& space);
  static Ledger read_file(const std::filesystem::path& path, const StateSpace& space);

  const StateSpace& space() const noexcept { return space_; }
  /// Team names in ascending order.
  std::vector<std::string> teams() const;
  /// Date-ordered records of one team; throws UnknownTeam.
  std::vector<LedgerRecord> records(std::string_view team) const;

 private:
  explicit Ledger(StateSpace space) : space_(std::move(space)) {}

  StateSpace space_;
  std::vector<LedgerRecord> records_;
};

struct IngestResult {
  Sequence sequence;
  std::size_t available = 0;       // games on record for the team
  std::optional<std::string> warning;
};

/// Most recent `last` results of `team` in date order. When fewer games exist
/// all are returned with a warning.
IngestResult ingest_ledger(const Ledger& ledger, std::string_view team, std::size_t last = 100);

}  // namespace mtdchain

#endif  // MTDCHAIN_LEDGER_HPP
