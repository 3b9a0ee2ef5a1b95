// Copyright 2026 The Arbor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arbor/svg_plot.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace arbor {
namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 30, kBottom = 50;

constexpr std::array<const char*, 6> kColors = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string RenderRiskPlot(const std::vector<RiskSummary>& summaries,
                           Model model, double alpha, bool with_bounds) {
  std::map<Estimator, std::vector<const RiskSummary*>> series;
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : summaries) {
    if (s.model != model || s.alpha != alpha) continue;
    series[s.estimator].push_back(&s);
    x_lo = std::min(x_lo, std::log10(static_cast<double>(s.n)));
    x_hi = std::max(x_hi, std::log10(static_cast<double>(s.n)));
    if (s.q1 > 0) y_lo = std::min(y_lo, std::log10(s.q1));
    if (s.q3 > 0) y_hi = std::max(y_hi, std::log10(s.q3));
    if (with_bounds) {
      const double lb = LowerBound(s.n, alpha, model);
      y_lo = std::min(y_lo, std::log10(lb));
      y_hi = std::max(y_hi, std::log10(lb));
    }
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (series.empty() || !std::isfinite(y_lo) || !std::isfinite(y_hi)) {
    svg << "<text x=\"20\" y=\"40\">no data</text>\n</svg>\n";
    return svg.str();
  }
  if (x_hi == x_lo) { x_lo -= 0.5; x_hi += 0.5; }
  if (y_hi == y_lo) { y_lo -= 0.5; y_hi += 0.5; }
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double n) {
    return kLeft + (std::log10(n) - x_lo) / (x_hi - x_lo) * pw;
  };
  auto py = [&](double r) {
    return kTop + ph - (std::log10(r) - y_lo) / (y_hi - y_lo) * ph;
  };

  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"20\" font-size=\"14\">"
      << ModelName(model) << ", alpha = " << alpha
      << " (log-log, median with q1-q3)</text>\n";
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"12\">n</text>\n";
  for (int d = static_cast<int>(std::ceil(x_lo)); d <= x_hi; ++d) {
    const double x = px(std::pow(10.0, d));
    svg << "<text x=\"" << Num(x) << "\" y=\"" << kTop + ph + 16
        << "\" font-size=\"11\">1e" << d << "</text>\n";
  }
  for (int d = static_cast<int>(std::ceil(y_lo)); d <= y_hi; ++d) {
    const double y = py(std::pow(10.0, d));
    svg << "<text x=\"8\" y=\"" << Num(y) << "\" font-size=\"11\">1e" << d
        << "</text>\n";
  }

  std::size_t color = 0;
  double legend_y = kTop + 10;
  for (const auto& [estimator, points] : series) {
    const char* c = kColors[color++ % kColors.size()];
    svg << "<polyline fill=\"none\" stroke=\"" << c << "\" points=\"";
    for (const auto* s : points) {
      if (s->median > 0) svg << Num(px(s->n)) << ',' << Num(py(s->median)) << ' ';
    }
    svg << "\"/>\n";
    for (const auto* s : points) {
      if (s->q1 <= 0 || s->q3 <= 0) continue;
      svg << "<line x1=\"" << Num(px(s->n)) << "\" x2=\"" << Num(px(s->n))
          << "\" y1=\"" << Num(py(s->q1)) << "\" y2=\"" << Num(py(s->q3))
          << "\" stroke=\"" << c << "\"/>\n";
    }
    svg << "<text x=\"" << kLeft + pw + 10 << "\" y=\"" << legend_y
        << "\" font-size=\"12\" fill=\"" << c << "\">"
        << EstimatorName(estimator) << "</text>\n";
    legend_y += 16;
  }
  if (with_bounds) {
    const auto& any = series.begin()->second;
    svg << "<polyline fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4\" "
           "points=\"";
    for (const auto* s : any) {
      svg << Num(px(s->n)) << ',' << Num(py(LowerBound(s->n, alpha, model)))
          << ' ';
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << kLeft + pw + 10 << "\" y=\"" << legend_y
        << "\" font-size=\"12\" fill=\"gray\">lower bound</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace arbor
