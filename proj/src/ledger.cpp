#include "mtdchain/ledger.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <set>

namespace mtdchain {

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool valid_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  int y = 0;
  unsigned mo = 0, d = 0;
  auto parse = [](std::string_view part, auto& out) {
    const auto res = std::from_chars(part.data(), part.data() + part.size(), out);
    return res.ec == std::errc{} && res.ptr == part.data() + part.size();
  };
  if (!parse(s.substr(0, 4), y) || !parse(s.substr(5, 2), mo) || !parse(s.substr(8, 2), d)) {
    return false;
  }
  return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{mo},
                                     std::chrono::day{d}}
      .ok();
}

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(Errc::MalformedRow, "line " + std::to_string(line) + ": " + why, line);
}

}  // namespace

Ledger Ledger::read(std::istream& in, const StateSpace& space) {
  Ledger ledger(space);
  std::string text;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (trim(text).empty() || trim(text) == "\r") continue;
    auto fields = split_csv_line(text);
    for (auto& f : fields) f = std::string(trim(f));
    if (!header_seen) {
      if (fields != std::vector<std::string>{"date", "team", "opponent", "result"}) {
        malformed(line_no, "expected header 'date,team,opponent,result'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 4) malformed(line_no, "expected 4 fields, got " + std::to_string(fields.size()));
    if (!valid_iso_date(fields[0])) malformed(line_no, "invalid date '" + fields[0] + "'");
    if (fields[1].empty()) malformed(line_no, "empty team name");
    const auto result = space.index_of(fields[3]);
    if (!result) malformed(line_no, "unknown result '" + fields[3] + "'");
    ledger.records_.push_back({fields[0], fields[1], fields[2], *result, line_no});
  }
  if (!header_seen) throw Error(Errc::EmptyInput, "ledger is empty");

  std::stable_sort(ledger.records_.begin(), ledger.records_.end(),
                   [](const LedgerRecord& a, const LedgerRecord& b) {
                     if (a.team != b.team) return a.team < b.team;
                     return a.date < b.date;
                   });
  for (std::size_t i = 1; i < ledger.records_.size(); ++i) {
    const auto& prev = ledger.records_[i - 1];
    const auto& cur = ledger.records_[i];
    if (prev.team == cur.team && prev.date == cur.date) {
      malformed(std::max(prev.line, cur.line),
                "second game for '" + cur.team + "' on " + cur.date);
    }
  }
  return ledger;
}

Ledger Ledger::read_file(const std::filesystem::path& path, const StateSpace& space) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path.string());
  return read(in, space);
}

std::vector<std::string> Ledger::teams() const {
  std::set<std::string> names;
  for (const auto& r : records_) names.insert(r.team);
  return {names.begin(), names.end()};
}

std::vector<LedgerRecord> Ledger::records(std::string_view team) const {
  std::vector<LedgerRecord> out;
  for (const auto& r : records_) {
    if (r.team == team) out.push_back(r);
  }
  if (out.empty()) throw Error(Errc::UnknownTeam, "team '" + std::string(team) + "' not in ledger");
  return out;
}

IngestResult ingest_ledger(const Ledger& ledger, std::string_view team, std::size_t last) {
  if (last == 0) throw Error(Errc::ConfigInvalid, "--last must be >= 1");
  const auto recs = ledger.records(team);
  std::vector<State> states;
  states.reserve(recs.size());
  for (const auto& r : recs) states.push_back(r.result);

  IngestResult out{Sequence(ledger.space(), std::move(states)), recs.size(), std::nullopt};
  if (last > recs.size()) {
    out.warning = "team '" + std::string(team) + "' has only " + std::to_string(recs.size()) +
                  " games; using all of them";
  } else {
    out.sequence = out.sequence.tail(last);
  }
  return out;
}

}  // namespace mtdchain
