// Copyright 2026 The tempsched Authors
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

#include "tempsched/plot.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace tempsched {
namespace {

constexpr double kWidth = 800;
constexpr double kPanelHeight = 120;
constexpr double kMarginLeft = 60;
constexpr double kMarginRight = 20;
constexpr double kPanelGap = 30;

std::string Num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3f", v);
  return buffer;
}

}  // namespace

std::string EmitCsv(const Instance& instance, const Trajectory& tr) {
  std::ostringstream out;
  out << "time";
  for (const Job& job : instance.jobs) {
    out << ",load_" << job.id << ",temp_" << job.id;
  }
  out << "\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    out << ToDecimal(tr.times[k]);
    for (int j = 0; j < tr.jobs(); ++j) {
      const Rational load =
          static_cast<int>(k) < tr.segments() ? tr.load[j][k] : Rational(0);
      out << "," << ToDecimal(load) << "," << ToDecimal(tr.temperature[j][k]);
    }
    out << "\n";
  }
  return out.str();
}

std::string EmitSvg(const Instance& instance, const Trajectory& tr) {
  const int n = instance.size();
  const double height = std::max(1, n) * (kPanelHeight + kPanelGap) + kPanelGap;
  const double end = std::max(ToDouble(tr.end_time()), 1e-9);
  const double plot_width = kWidth - kMarginLeft - kMarginRight;
  const auto x_of = [&](const Rational& t) {
    return kMarginLeft + ToDouble(t) / end * plot_width;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(kWidth)
      << "\" height=\"" << Num(height) << "\" viewBox=\"0 0 " << Num(kWidth)
      << " " << Num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int j = 0; j < n; ++j) {
    const double top = kPanelGap + j * (kPanelHeight + kPanelGap);
    double y_max = 1;
    for (const Rational& v : tr.temperature[j]) y_max = std::max(y_max, ToDouble(v));
    const auto y_of = [&](double v) { return top + kPanelHeight * (1 - v / y_max); };

    out << "<g>\n<text x=\"4\" y=\"" << Num(top + 12) << "\">" << instance.jobs[j].id
        << "</text>\n";
    out << "<rect x=\"" << Num(kMarginLeft) << "\" y=\"" << Num(top) << "\" width=\""
        << Num(plot_width) << "\" height=\"" << Num(kPanelHeight)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k < tr.segments(); ++k) {
      const double load = std::min(1.0, ToDouble(tr.load[j][k]));
      if (load <= 0) continue;
      out << "<rect x=\"" << Num(x_of(tr.times[k])) << "\" y=\"" << Num(top)
          << "\" width=\"" << Num(x_of(tr.times[k + 1]) - x_of(tr.times[k]))
          << "\" height=\"" << Num(kPanelHeight) << "\" fill=\"gray\" fill-opacity=\""
          << Num(load * 0.6) << "\"/>\n";
    }
    out << "<line x1=\"" << Num(kMarginLeft) << "\" y1=\"" << Num(y_of(1))
        << "\" x2=\"" << Num(kMarginLeft + plot_width) << "\" y2=\"" << Num(y_of(1))
        << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"" << Num(kMarginLeft - 16) << "\" y=\"" << Num(y_of(1) + 4)
        << "\">1</text>\n";
    if (!tr.times.empty()) {
      out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < tr.times.size(); ++k) {
        out << (k ? " " : "") << Num(x_of(tr.times[k])) << ","
            << Num(y_of(ToDouble(tr.temperature[j][k])));
      }
      out << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<text x=\"" << Num(kMarginLeft) << "\" y=\"" << Num(height - 8)
      << "\">0</text>\n<text x=\"" << Num(kMarginLeft + plot_width - 40) << "\" y=\""
      << Num(height - 8) << "\">t=" << ToDecimal(tr.end_time(), 6) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace tempsched
