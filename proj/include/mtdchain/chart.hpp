#ifndef MTDCHAIN_CHART_HPP
#define MTDCHAIN_CHART_HPP

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mtdchain/assessment.hpp"

namespace mtdchain {

/// Accuracy per order for one team; k ascending and distinct.
struct ChartData {
  std::string team;
  std::vector<std::pair<std::size_t, double>> rows;

  /// Throws ConfigInvalid if k values are not strictly ascending or an
  /// accuracy is outside [0,1].
  void validate() const;

  bool operator==(const ChartData&) const = default;
};

ChartData chart_from_report(const AssessmentReport& report);

/// Header "team,k,accuracy"; one row per (team, k).
void write_chart_csv(std::ostream& out, const std::vector<ChartData>& charts);

/// Inverse of write_chart_csv; teams keep their first-appearance order.
std::vector<ChartData> read_chart_csv(std::istream& in);

/// Fixed-size horizontal bar chart: one bar per k on the vertical axis,
/// accuracy on the horizontal axis. Pure function of its input.
std::string render_svg(const ChartData& chart);

/// File-name stem for a team: lowercase ASCII, other characters become '_'.
std::string chart_file_stem(const std::string& team);

}  // namespace mtdchain

#endif  // MTDCHAIN_CHART_HPP
