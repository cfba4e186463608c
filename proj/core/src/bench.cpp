#include "entedge/bench.hpp"

#include <algorithm>
#include <stdexcept>

#include "entedge/pipeline.hpp"
#include "entedge/threshold.hpp"

namespace entedge {

std::string_view variantName(Variant v) {
  return v == Variant::baseline ? "baseline" : "proposed";
}

std::vector<SweepRow> sweepInit(const GrayImage& img, int lo, int hi) {
  if (lo < 0 || hi > 255 || lo > hi) {
    throw std::invalid_argument("sweep range [" + std::to_string(lo) + "," +
                                std::to_string(hi) + "] is not within [0,255]");
  }

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(hi - lo) + 1);
  Rng unused(0);  // explicitInit leaves the stream untouched
  for (int t = lo; t <= hi; ++t) {
    ThresholdConfig cfg;
    cfg.explicitInit = t;
    const ThresholdReport rep = iterativeThreshold(img, cfg, unused);
    rows.push_back(SweepRow{rep.initT, rep.finalT, rep.iterations, rep.converged,
                            rep.degenerate});
  }
  return rows;
}

std::vector<CompareRow> comparePipelines(const GrayImage& img,
                                         std::span<const std::uint64_t> seeds,
                                         int repetitions, bool parallel) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");

  std::vector<CompareRow> rows;
  rows.reserve(seeds.size() * 2);
  for (const std::uint64_t seed : seeds) {
    for (const Variant variant : {Variant::baseline, Variant::proposed}) {
      PipelineConfig cfg =
          variant == Variant::baseline ? baselineConfig(seed) : proposedConfig(seed);
      cfg.parallel = parallel;

      std::vector<std::uint64_t> micros;
      micros.reserve(static_cast<std::size_t>(repetitions));
      CompareRow row;
      row.seed = seed;
      row.variant = variant;
      for (int rep = 0; rep < repetitions; ++rep) {
        PipelineResult result = runPipeline(img, cfg);
        micros.push_back(static_cast<std::uint64_t>(result.wallTime.count()));
        if (rep == 0) {
          for (const ThresholdReport& r : result.regionReports) {
            row.totalIterations += static_cast<std::uint64_t>(r.iterations);
            row.finalThresholds.push_back(r.finalT);
          }
          row.totalPixelVisits = result.totalPixelVisits;
        }
      }
      std::ranges::sort(micros);
      row.wallTimeMicros = micros[(micros.size() - 1) / 2];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

const char* boolName(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string writeCsv(std::span<const SweepRow> rows) {
  std::string out = "init_t,final_t,iterations,converged,degenerate\n";
  for (const SweepRow& r : rows) {
    out += std::to_string(r.initT);
    out += ',';
    out += std::to_string(r.finalT);
    out += ',';
    out += std::to_string(r.iterations);
    out += ',';
    out += boolName(r.converged);
    out += ',';
    out += boolName(r.degenerate);
    out += '\n';
  }
  return out;
}

std::string writeCsv(std::span<const CompareRow> rows) {
  std::string out = "seed,variant,total_iterations,total_pixel_visits,wall_time_micros,thresholds\n";
  for (const CompareRow& r : rows) {
    out += std::to_string(r.seed);
    out += ',';
    out += variantName(r.variant);
    out += ',';
    out += std::to_string(r.totalIterations);
    out += ',';
    out += std::to_string(r.totalPixelVisits);
    out += ',';
    out += std::to_string(r.wallTimeMicros);
    out += ',';
    for (std::size_t i = 0; i < r.finalThresholds.size(); ++i) {
      if (i > 0) out += ';';
      out += std::to_string(r.finalThresholds[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace entedge
