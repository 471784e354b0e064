/*
 * Copyright 2026 lrsym developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lrsym/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrsym/errors.hpp"

namespace lrsym {

namespace {

namespace fs = std::filesystem;

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string classification_name(CaseClassification c) {
  switch (c) {
    case CaseClassification::Symmetric: return "Symmetric";
    case CaseClassification::Asymmetric: return "Asymmetric";
    case CaseClassification::Degenerate: return "Degenerate";
  }
  return "?";
}

// All report files land via temp-file-plus-rename so readers never see a
// half-written file.
void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
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

// Minimal polyline chart. One <polyline> per series plus a color legend.
class LineChart {
 public:
  LineChart(std::string title, std::string x_label, std::string y_label)
      : title_(std::move(title)),
        x_label_(std::move(x_label)),
        y_label_(std::move(y_label)) {}

  void add_series(std::string name, std::string color,
                  const std::vector<double>& values) {
    series_.push_back({std::move(name), std::move(color), values});
  }

  std::string render() const {
    constexpr double kWidth = 880, kHeight = 380;
    constexpr double kLeft = 64, kRight = 700, kTop = 44, kBottom = 330;

    double lo = 0.0, hi = 0.0;
    std::size_t max_len = 2;
    bool first = true;
    for (const auto& s : series_) {
      for (double v : s.values) {
        lo = first ? v : std::min(lo, v);
        hi = first ? v : std::max(hi, v);
        first = false;
      }
      max_len = std::max(max_len, s.values.size());
    }
    if (first) lo = hi = 0.0;
    if (hi - lo < 1e-12) {
      lo -= 1.0;
      hi += 1.0;
    }

    auto px = [&](std::size_t i) {
      return kLeft + (kRight - kLeft) * static_cast<double>(i) /
                         static_cast<double>(max_len - 1);
    };
    auto py = [&](double v) {
      return kBottom - (kBottom - kTop) * (v - lo) / (hi - lo);
    };
    auto num = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.2f", v);
      return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" fill=\"white\"/>\n"
        << "<text x=\"" << kLeft << "\" y=\"24\" font-family=\"sans-serif\" "
           "font-size=\"15\">"
        << xml_escape(title_) << "</text>\n"
        << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
        << (kRight - kLeft) << "\" height=\"" << (kBottom - kTop)
        << "\" fill=\"none\" stroke=\"#555\"/>\n";

    if (lo < 0.0 && hi > 0.0)
      svg << "<line x1=\"" << kLeft << "\" y1=\"" << num(py(0.0)) << "\" x2=\""
          << kRight << "\" y2=\"" << num(py(0.0))
          << "\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";

    // axis extents
    svg << "<text x=\"8\" y=\"" << (kTop + 10)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(hi)
        << "</text>\n"
        << "<text x=\"8\" y=\"" << kBottom
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(lo)
        << "</text>\n"
        << "<text x=\"" << (kLeft + (kRight - kLeft) / 2 - 20) << "\" y=\""
        << (kBottom + 28) << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(x_label_) << "</text>\n"
        << "<text x=\"8\" y=\"" << (kTop - 12)
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(y_label_) << "</text>\n";

    for (const auto& s : series_) {
      svg << "<polyline fill=\"none\" stroke=\"" << s.color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (i) svg << ' ';
        svg << num(px(i)) << ',' << num(py(s.values[i]));
      }
      svg << "\"/>\n";
    }

    double ly = kTop + 12;
    for (const auto& s : series_) {
      svg << "<line x1=\"" << (kRight + 14) << "\" y1=\"" << (ly - 4)
          << "\" x2=\"" << (kRight + 44) << "\" y2=\"" << (ly - 4)
          << "\" stroke=\"" << s.color << "\" stroke-width=\"3\"/>\n"
          << "<text x=\"" << (kRight + 50) << "\" y=\"" << ly
          << "\" font-family=\"sans-serif\" font-size=\"12\">"
          << xml_escape(s.name) << "</text>\n";
      ly += 20;
    }

    svg << "</svg>\n";
    return svg.str();
  }

 private:
  struct Series {
    std::string name;
    std::string color;
    std::vector<double> values;
  };
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

void write_summary_csv(const AnalysisResult& result, const fs::path& path) {
  std::ostringstream out;
  out << "subject,frames,cycle_frames,peak_acf,rho,"
         "dis_hv,dis_vh,dis_hh,dis_vv,"
         "class_hv,class_vh,class_hh,class_vv\n";
  out << result.subject << ',' << result.frame_count << ',';
  if (result.cycle_combined)
    out << result.cycle_combined->period_frames << ','
        << fixed2(result.cycle_combined->peak_acf) << ',';
  else
    out << ",,";
  if (result.shift)
    out << fixed2(result.shift->rho) << ',';
  else
    out << ',';

  std::array<std::string, 4> dis_cols;
  std::array<std::string, 4> class_cols;
  if (result.dissimilarity) {
    for (std::size_t i = 0; i < kAllCases.size(); ++i) {
      const CaseOutcome& o = result.dissimilarity->outcome(kAllCases[i]);
      if (o.value) dis_cols[i] = fixed2(o.value->dis);
      class_cols[i] = classification_name(o.classification);
    }
  }
  for (const std::string& col : dis_cols) out << col << ',';
  for (std::size_t i = 0; i < class_cols.size(); ++i)
    out << class_cols[i] << (i + 1 < class_cols.size() ? "," : "\n");
  write_atomic(path, out.str());
}

void write_summary_json(const AnalysisResult& result, const fs::path& path) {
  nlohmann::ordered_json doc;
  doc["subject"] = result.subject;
  doc["frames"] = result.frame_count;

  auto cycle_json = [](const CycleEstimate& c) {
    return nlohmann::ordered_json{{"period_frames", c.period_frames},
                                  {"peak_acf", c.peak_acf},
                                  {"min_lag", c.min_lag},
                                  {"max_lag", c.max_lag}};
  };
  if (result.cycle_combined) {
    doc["cycle"]["left"] = cycle_json(*result.cycle_left);
    doc["cycle"]["right"] = cycle_json(*result.cycle_right);
    doc["cycle"]["combined"] = cycle_json(*result.cycle_combined);
  }
  if (result.shift) {
    doc["shift_correlation"] = {
        {"rho", result.shift->rho},
        {"cycle_frames", result.shift->cycle_frames},
        {"left_shift", result.shift->left_shift},
        {"right_shift", result.shift->right_shift},
        {"analyzed_length", result.shift->analyzed_length}};
  }
  if (result.dissimilarity) {
    doc["dissimilarity"]["threshold"] = result.dissimilarity->threshold;
    for (CouplingCase c : kAllCases) {
      const CaseOutcome& o = result.dissimilarity->outcome(c);
      nlohmann::ordered_json entry;
      entry["classification"] = classification_name(o.classification);
      if (o.value)
        entry["dis"] = o.value->dis;
      else
        entry["error"] = o.error;
      doc["dissimilarity"]["cases"][std::string(coupling_case_name(c))] = entry;
    }
  }
  write_atomic(path, doc.dump(2) + "\n");
}

void write_speed_svgs(const AnalysisResult& result, const fs::path& out_dir) {
  for (CouplingCase c : kAllCases) {
    const CaseSeries series = case_series(result.trajectories, c);
    LineChart chart(std::string("Speeds, case ") +
                        std::string(coupling_case_name(c)) + " (" +
                        result.subject + ")",
                    "frame", "pixels/frame");
    chart.add_series("Right ankle", "blue", series.a.values);
    chart.add_series("Right wrist", "red", series.b.values);
    chart.add_series("Left ankle", "green", series.x.values);
    chart.add_series("Left wrist", "yellow", series.y.values);
    write_atomic(out_dir / ("speeds_" + lower(coupling_case_name(c)) + ".svg"),
                 chart.render());
  }
}

void write_convolution_svgs(const AnalysisResult& result,
                            const fs::path& out_dir) {
  if (!result.dissimilarity)
    fail(ErrorCode::InvalidInput,
         "write_convolution_svgs: no dissimilarity stage in result");
  for (CouplingCase c : kAllCases) {
    const CaseOutcome& o = result.dissimilarity->outcome(c);
    if (!o.value) continue;  // degenerate case: nothing to plot
    LineChart chart(std::string("Cross convolutions, case ") +
                        std::string(coupling_case_name(c)) + " (" +
                        result.subject + ")",
                    "sample", "convolution value");
    chart.add_series("u = a*y", "blue", o.value->pair.u);
    chart.add_series("v = x*b", "red", o.value->pair.v);
    write_atomic(
        out_dir / ("convolution_" + lower(coupling_case_name(c)) + ".svg"),
        chart.render());
  }
}

void write_shift_svg(const AnalysisResult& result, const fs::path& path) {
  if (!result.shift)
    fail(ErrorCode::InvalidInput,
         "write_shift_svg: no shift-correlation stage in result");
  LineChart chart("Ankle speeds after quarter-cycle shifts (" +
                      result.subject + ")",
                  "frame", "pixels/frame");
  chart.add_series("Left ankle (+T/4)", "green", result.shifted_left);
  chart.add_series("Right ankle (-T/4)", "blue", result.shifted_right);
  write_atomic(path, chart.render());
}

}  // namespace lrsym
