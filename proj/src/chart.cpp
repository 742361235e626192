#include "mtdchain/chart.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "mtdchain/ledger.hpp"

namespace mtdchain {

void ChartData::validate() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i].first <= rows[i - 1].first) {
      throw Error(Errc::ConfigInvalid, "chart k values must be ascending and distinct");
    }
    if (!(rows[i].second >= 0.0 && rows[i].second <= 1.0)) {
      throw Error(Errc::ConfigInvalid, "chart accuracy outside [0,1]");
    }
  }
}

ChartData chart_from_report(const AssessmentReport& report) {
  ChartData chart{report.team, {report.per_k.begin(), report.per_k.end()}};
  chart.validate();
  return chart;
}

void write_chart_csv(std::ostream& out, const std::vector<ChartData>& charts) {
  out << "team,k,accuracy\n";
  for (const auto& c : charts) {
    for (const auto& [k, acc] : c.rows) {
      out << csv_escape(c.team) << ',' << k << ',' << format_double(acc) << '\n';
    }
  }
}

std::vector<ChartData> read_chart_csv(std::istream& in) {
  std::vector<ChartData> charts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (line_no == 1) {
      if (fields != std::vector<std::string>{"team", "k", "accuracy"}) {
        throw Error(Errc::MalformedRow, "expected header 'team,k,accuracy'", line_no);
      }
      continue;
    }
    if (fields.size() != 3) throw Error(Errc::MalformedRow, "expected 3 fields", line_no);
    std::size_t k = 0;
    double acc = 0.0;
    const auto rk = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), k);
    const auto ra = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), acc);
    if (rk.ec != std::errc{} || ra.ec != std::errc{}) {
      throw Error(Errc::MalformedRow, "bad number in chart row", line_no);
    }
    if (charts.empty() || charts.back().team != fields[0]) {
      charts.push_back({fields[0], {}});
    }
    charts.back().rows.emplace_back(k, acc);
  }
  for (const auto& c : charts) c.validate();
  return charts;
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed(double v, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string render_svg(const ChartData& chart) {
  constexpr double kWidth = 480, kHeight = 360;
  constexpr double kLeft = 60, kRight = 450, kTop = 40, kBottom = 320;
  const double plot_w = kRight - kLeft;
  const double plot_h = kBottom - kTop;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(chart.team) << "</text>\n";

  for (int tick = 0; tick <= 5; ++tick) {
    const double v = tick / 5.0;
    const double x = kLeft + v * plot_w;
    svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << kTop << "\" x2=\"" << fixed(x) << "\" y2=\""
        << kBottom << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << fixed(x) << "\" y=\"" << kBottom + 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << fixed(v, 1)
        << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 8
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">accuracy</text>\n";
  svg << "<text x=\"14\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
      << "transform=\"rotate(-90 14 " << kTop + plot_h / 2 << ")\">k</text>\n";

  const std::size_t n = chart.rows.size();
  if (n > 0) {
    const double slot = plot_h / static_cast<double>(n);
    const double bar_h = slot * 0.7;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [k, acc] = chart.rows[i];
      const double y = kTop + slot * static_cast<double>(i) + (slot - bar_h) / 2;
      svg << "<rect x=\"" << kLeft << "\" y=\"" << fixed(y) << "\" width=\"" << fixed(acc * plot_w)
          << "\" height=\"" << fixed(bar_h) << "\" fill=\"#4a7ab5\"/>\n";
      svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << fixed(y + bar_h / 2 + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" << k
          << "</text>\n";
    }
  }
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\"" << kRight << "\" y2=\""
      << kBottom << "\" stroke=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string chart_file_stem(const std::string& team) {
  std::string out;
  for (unsigned char c : team) {
    out += std::isalnum(c) ? static_cast<char>(std::tolower(c)) : '_';
  }
  return out.empty() ? "team" : out;
}

}  // namespace mtdchain
