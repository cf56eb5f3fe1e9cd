// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/campaign/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "neurofault/error.hpp"

namespace neurofault::campaign {
namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    raise(ErrorKind::Format, "sweep CSV line " + std::to_string(line_no) + ": bad number '" +
                                 std::string(text) + "'");
  }
  return value;
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
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

}  // namespace

std::vector<SweepCsvRow> to_csv_rows(std::span<const SweepRow> rows) {
  std::vector<SweepCsvRow> out;
  for (const SweepRow& row : rows) {
    if (!row.result) continue;
    const CampaignResult& r = *row.result;
    out.push_back({std::string(nn::to_string(row.point.target)), row.point.n, row.point.k,
                   r.trials, r.successes, r.rate_pct, r.ci95.low, r.ci95.high});
  }
  return out;
}

std::string format_sweep_csv(std::span<const SweepCsvRow> rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const SweepCsvRow& r : rows) {
    out += r.target_function + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
           std::to_string(r.trials) + ',' + std::to_string(r.successes) + ',' + fixed2(r.rate_pct) +
           ',' + fixed2(r.ci_low) + ',' + fixed2(r.ci_high) + '\n';
  }
  return out;
}

std::vector<SweepCsvRow> parse_sweep_csv(std::string_view text) {
  std::vector<SweepCsvRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (line_no == 1) {
      if (line != kSweepCsvHeader) raise(ErrorKind::Format, "unexpected sweep CSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) {
      raise(ErrorKind::Format, "sweep CSV line " + std::to_string(line_no) + ": expected 8 fields");
    }
    SweepCsvRow row;
    row.target_function = std::string(f[0]);
    row.n = parse_number<std::size_t>(f[1], line_no);
    row.k = parse_number<std::size_t>(f[2], line_no);
    row.trials = parse_number<std::size_t>(f[3], line_no);
    row.successes = parse_number<std::size_t>(f[4], line_no);
    row.rate_pct = parse_number<double>(f[5], line_no);
    row.ci_low = parse_number<double>(f[6], line_no);
    row.ci_high = parse_number<double>(f[7], line_no);
    rows.push_back(std::move(row));
  }
  if (line_no == 0) raise(ErrorKind::Format, "sweep CSV is empty");
  return rows;
}

std::string render_sweep_svg(std::span<const SweepCsvRow> rows, std::string_view title) {
  constexpr double kWidth = 640, kHeight = 420;
  constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  std::vector<std::size_t> xs;
  bool multi_k = false;
  for (const auto& r : rows) {
    xs.push_back(r.n);
    if (r.k != rows.front().k) multi_k = true;
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const double x_min = xs.empty() ? 0.0 : static_cast<double>(xs.front());
  double x_max = xs.empty() ? 1.0 : static_cast<double>(xs.back());
  if (x_max <= x_min) x_max = x_min + 1.0;

  auto px = [&](double n) { return kLeft + (n - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double rate) { return kTop + (1.0 - rate / 100.0) * plot_h; };

  // Series keyed by (target, k) in first-appearance order.
  std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
  for (const auto& r : rows) {
    const std::string key = multi_k ? r.target_function + " k=" + std::to_string(r.k) : r.target_function;
    auto it = std::find_if(series.begin(), series.end(), [&](const auto& s) { return s.first == key; });
    if (it == series.end()) {
      series.emplace_back(key, std::vector<std::pair<double, double>>{});
      it = std::prev(series.end());
    }
    it->second.emplace_back(static_cast<double>(r.n), r.rate_pct);
  }

  static const std::map<std::string, std::pair<std::string, std::string>> kStyle = {
      {"relu", {"#d62728", ""}}, {"sigmoid", {"#2ca02c", "8,3,2,3"}}, {"tanh", {"#1f77b4", "6,4"}}};
  static const char* kFallback[] = {"#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << escape_xml(title) << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 100; tick += 20) {
    const double y = py(tick);
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
        << tick << "</text>\n";
  }
  for (std::size_t n : xs) {
    const double x = px(static_cast<double>(n));
    svg << "<line x1=\"" << x << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << x << "\" y2=\""
        << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << x << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << n << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-size=\"13\">No. of neurons in the layer</text>\n";
  svg << "<text transform=\"translate(20," << kTop + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">Success rate of misclassification (%)</text>\n";

  std::size_t fallback = 0;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const std::string& key = series[s].first;
    const std::string base = key.substr(0, key.find(' '));
    std::string colour;
    std::string dash;
    if (auto it = kStyle.find(base); it != kStyle.end() && !multi_k) {
      colour = it->second.first;
      dash = it->second.second;
    } else {
      colour = kFallback[fallback++ % std::size(kFallback)];
    }
    auto points = series[s].second;
    std::sort(points.begin(), points.end());
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"";
    if (!dash.empty()) svg << " stroke-dasharray=\"" << dash << "\"";
    svg << " points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      svg << (i ? " " : "") << px(points[i].first) << ',' << py(points[i].second);
    }
    svg << "\"/>\n";
    const double ly = kTop + 12 + 18 * static_cast<double>(s);
    svg << "<line x1=\"" << kLeft + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + plot_w + 40
        << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"";
    if (!dash.empty()) svg << " stroke-dasharray=\"" << dash << "\"";
    svg << "/>\n<text x=\"" << kLeft + plot_w + 46 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
        << escape_xml(key) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace neurofault::campaign
