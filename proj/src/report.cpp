// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ttseval/errors.hpp"
#include "ttseval/version.hpp"

namespace ttseval {

namespace {

using nlohmann::ordered_json;

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

const char* direction_name(MetricEntry::Direction d) {
  return d == MetricEntry::Direction::kLowerBetter ? "lower" : "higher";
}

MetricEntry::Direction direction_from(const std::string& s) {
  if (s == "lower") return MetricEntry::Direction::kLowerBetter;
  if (s == "higher") return MetricEntry::Direction::kHigherBetter;
  throw FormatError("unknown metric direction: " + s);
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["corpus_name"] = report.corpus_name;
  ordered_json metrics = ordered_json::object();
  for (const auto& [name, entry] : report.metrics) {
    ordered_json m;
    m["direction"] = direction_name(entry.direction);
    if (entry.has_spread) {
      m["mean"] = entry.value;
      m["std"] = entry.std_dev;
    } else {
      m["value"] = entry.value;
    }
    m["n"] = entry.n;
    metrics[name] = m;
  }
  j["metrics"] = metrics;
  ordered_json prov;
  prov["tool_version"] = report.provenance.tool_version;
  prov["config"] = report.provenance.config;
  prov["inputs"] = report.provenance.inputs;
  j["provenance"] = prov;
  return j.dump(2) + "\n";
}

EvalReport report_from_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("report is not valid JSON: " + std::string(e.what()));
  }
  EvalReport report;
  try {
    if (j.at("schema_version").get<int>() != 1)
      throw FormatError("unsupported report schema_version");
    report.corpus_name = j.value("corpus_name", "");
    for (const auto& [name, m] : j.at("metrics").items()) {
      MetricEntry entry;
      entry.direction = direction_from(m.at("direction").get<std::string>());
      if (m.contains("mean")) {
        entry.has_spread = true;
        entry.value = m.at("mean").get<double>();
        entry.std_dev = m.at("std").get<double>();
      } else {
        entry.value = m.at("value").get<double>();
      }
      entry.n = m.value("n", std::size_t{0});
      report.metrics[name] = entry;
    }
    if (j.contains("provenance")) {
      const auto& prov = j["provenance"];
      report.provenance.tool_version = prov.value("tool_version", "");
      if (prov.contains("config"))
        for (const auto& [k, v] : prov["config"].items())
          report.provenance.config[k] = v.get<std::string>();
      if (prov.contains("inputs"))
        for (const auto& [k, v] : prov["inputs"].items())
          report.provenance.inputs[k] = v.get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("report schema error: " + std::string(e.what()));
  }
  return report;
}

void emit_report(const EvalReport& report, const std::string& json_path,
                 const std::string& csv_path) {
  if (report.metrics.empty())
    throw ValidationError("emit_report: no metrics to report");
  {
    std::ofstream out(json_path, std::ios::trunc);
    if (!out) throw FormatError("cannot write report: " + json_path);
    out << report_to_json(report);
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::trunc);
    if (!out) throw FormatError("cannot write report CSV: " + csv_path);
    out << "metric,direction,value,std,n\n";
    for (const auto& [name, entry] : report.metrics) {
      char value[32], std_dev[32];
      std::snprintf(value, sizeof(value), "%.17g", entry.value);
      std::snprintf(std_dev, sizeof(std_dev), "%.17g", entry.std_dev);
      out << name << ',' << direction_name(entry.direction) << ',' << value
          << ',' << (entry.has_spread ? std_dev : "") << ',' << entry.n << '\n';
    }
  }
}

std::string render_report_table(const EvalReport& report) {
  std::ostringstream out;
  if (!report.corpus_name.empty()) out << report.corpus_name << "\n";
  out << "Metric Name | Error / Score\n";
  for (const auto& [name, entry] : report.metrics) {
    const char* arrow =
        entry.direction == MetricEntry::Direction::kLowerBetter ? "↓" : "↑";
    out << arrow << ' ' << name << " | " << format_fixed(entry.value, 2);
    if (entry.has_spread) out << " ± " << format_fixed(entry.std_dev, 2);
    out << "\n";
  }
  return out.str();
}

std::string render_mos_chart(const std::map<std::string, MosAggregate>& mos) {
  if (mos.empty()) throw EmptyInputError("render_mos_chart: no systems");

  constexpr int kBarWidth = 60;
  constexpr int kGap = 30;
  constexpr int kLeft = 50;
  constexpr int kTop = 20;
  constexpr int kPlotHeight = 240;
  constexpr int kBottom = 40;
  const int n = static_cast<int>(mos.size());
  const int width = kLeft + n * (kBarWidth + kGap) + kGap;
  const int height = kTop + kPlotHeight + kBottom;

  // score s in [1,5] -> y pixel (5 at the top)
  auto y_of = [&](double s) {
    return kTop + kPlotHeight * (5.0 - s) / 4.0;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  for (int s = 1; s <= 5; ++s) {
    const std::string y = format_fixed(y_of(s), 1);
    svg << "  <line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\""
        << width - kGap << "\" y2=\"" << y
        << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << kLeft - 10 << "\" y=\"" << y
        << "\" text-anchor=\"end\" dominant-baseline=\"middle\" font-size=\"12\" "
           "font-family=\"sans-serif\">"
        << s << "</text>\n";
  }
  int i = 0;
  for (const auto& [system, agg] : mos) {
    const int x = kLeft + kGap + i * (kBarWidth + kGap);
    const double top = y_of(agg.mean);
    const double bar_height = y_of(1.0) - top;
    svg << "  <rect x=\"" << x << "\" y=\"" << format_fixed(top, 1)
        << "\" width=\"" << kBarWidth << "\" height=\""
        << format_fixed(bar_height, 1) << "\" fill=\"#4878a8\"/>\n";
    svg << "  <text x=\"" << x + kBarWidth / 2 << "\" y=\""
        << format_fixed(top - 5, 1)
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">"
        << format_fixed(agg.mean, 1) << "</text>\n";
    svg << "  <text x=\"" << x + kBarWidth / 2 << "\" y=\""
        << kTop + kPlotHeight + 18
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
        << system << "</text>\n";
    ++i;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ttseval
