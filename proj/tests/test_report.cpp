// report emission and MOS chart tests

#include <doctest.h>

#include <fstream>
#include <random>

#include "test_util.hpp"
#include "ttseval/errors.hpp"
#include "ttseval/report.hpp"
#include "ttseval/version.hpp"

using namespace ttseval;

namespace {

EvalReport sample_report() {
  EvalReport report;
  report.corpus_name = "SDS-200";
  MetricEntry mcd;
  mcd.direction = MetricEntry::Direction::kLowerBetter;
  mcd.value = 7.5;
  mcd.has_spread = true;
  mcd.std_dev = 1.63;
  mcd.n = 720;
  report.metrics["MCD"] = mcd;
  MetricEntry bleu;
  bleu.direction = MetricEntry::Direction::kHigherBetter;
  bleu.value = 0.39;
  bleu.n = 720;
  report.metrics["BLEU"] = bleu;
  report.provenance.tool_version = kVersion;
  report.provenance.config["seed"] = "7";
  report.provenance.inputs["r.tsv"] = "fnv1a64:0011223344556677";
  return report;
}

}  // namespace

TEST_CASE("report renders Table-2-style rows") {
  const auto table = render_report_table(sample_report());
  CHECK(table.find("↓ MCD | 7.50 ± 1.63") != std::string::npos);
  CHECK(table.find("↑ BLEU | 0.39") != std::string::npos);
}

TEST_CASE("single-value spread renders as ± 0.00") {
  EvalReport report;
  MetricEntry m;
  m.value = 3.14159;
  m.has_spread = true;
  m.std_dev = 0.0;
  m.n = 1;
  report.metrics["MCD"] = m;
  const auto table = render_report_table(report);
  CHECK(table.find("3.14 ± 0.00") != std::string::npos);
}

TEST_CASE("report JSON round-trips exactly") {
  const auto report = sample_report();
  const auto parsed = report_from_json(report_to_json(report));
  CHECK(parsed.corpus_name == report.corpus_name);
  CHECK(parsed.metrics == report.metrics);
  CHECK(parsed.provenance.config == report.provenance.config);
  CHECK(parsed.provenance.inputs == report.provenance.inputs);
}

TEST_CASE("report JSON round-trips random full-precision metric maps") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> val(-1e6, 1e6);
  for (int round = 0; round < 50; ++round) {
    EvalReport report;
    const int metrics = 1 + static_cast<int>(rng() % 6);
    for (int m = 0; m < metrics; ++m) {
      MetricEntry entry;
      entry.direction = rng() % 2 ? MetricEntry::Direction::kLowerBetter
                                  : MetricEntry::Direction::kHigherBetter;
      entry.value = val(rng);
      if (rng() % 2) {
        entry.has_spread = true;
        entry.std_dev = std::abs(val(rng));
      }
      entry.n = static_cast<std::size_t>(rng() % 10000);
      report.metrics["metric_" + std::to_string(m)] = entry;
    }
    const auto parsed = report_from_json(report_to_json(report));
    CHECK(parsed.metrics == report.metrics);  // doubles survive verbatim
  }
}

TEST_CASE("identical reports serialize to identical bytes") {
  const auto a = report_to_json(sample_report());
  const auto b = report_to_json(sample_report());
  CHECK(a == b);
}

TEST_CASE("emit_report writes JSON and CSV, refuses empty metrics") {
  testutil::TempDir tmp;
  const auto report = sample_report();
  emit_report(report, tmp.path("r.json"), tmp.path("r.csv"));
  std::ifstream csv(tmp.path("r.csv"));
  std::string header;
  std::getline(csv, header);
  CHECK(header == "metric,direction,value,std,n");
  std::string row;
  std::getline(csv, row);
  CHECK(row.find("BLEU,higher,") == 0);

  EvalReport empty;
  CHECK_THROWS_AS(emit_report(empty, tmp.path("x.json")), ValidationError);
}

TEST_CASE("mos chart contains one labeled bar per system") {
  std::map<std::string, MosAggregate> mos;
  mos["slowsoft-vits"].mean = 4.1;
  mos["sds200-vits"].mean = 3.1;
  const auto svg = render_mos_chart(mos);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find(">4.1<") != std::string::npos);
  CHECK(svg.find(">3.1<") != std::string::npos);
  CHECK(svg.find("slowsoft-vits") != std::string::npos);

  std::size_t rects = 0;
  for (std::size_t pos = 0; (pos = svg.find("<rect", pos)) != std::string::npos; ++pos)
    ++rects;
  CHECK(rects == 3);  // background + two bars

  // byte-deterministic
  CHECK(render_mos_chart(mos) == svg);
}

TEST_CASE("mos chart bar spans the full axis at mean 5") {
  std::map<std::string, MosAggregate> mos;
  mos["gt"].mean = 5.0;
  const auto svg = render_mos_chart(mos);
  // bar top at the y of score 5 (pixel 20), height = full plot (240)
  CHECK(svg.find("y=\"20.0\" width=\"60\" height=\"240.0\"") != std::string::npos);
  CHECK_THROWS_AS(render_mos_chart({}), EmptyInputError);
}
