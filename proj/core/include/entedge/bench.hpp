#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entedge/image.hpp"

namespace entedge {

// One row of an initial-threshold sweep.
struct SweepRow {
  int initT = 0;
  int finalT = 0;
  int iterations = 0;
  bool converged = false;
  bool degenerate = false;

  bool operator==(const SweepRow&) const = default;
};

enum class Variant { baseline, proposed };

std::string_view variantName(Variant v);

// One pipeline run in the baseline-vs-proposed comparison. Every field
// except wallTimeMicros is deterministic in (image, seed, variant).
struct CompareRow {
  std::uint64_t seed = 0;
  Variant variant = Variant::baseline;
  std::uint64_t totalIterations = 0;
  std::uint64_t totalPixelVisits = 0;
  std::uint64_t wallTimeMicros = 0;
  std::vector<int> finalThresholds;  // one per region, row-major
};

// Runs the threshold search once per explicit init in [lo,hi], in ascending
// order. Pure: consumes no randomness.
std::vector<SweepRow> sweepInit(const GrayImage& img, int lo, int hi);

// For each seed, runs the baseline then the proposed pipeline, `repetitions`
// times each; wall time is the median repetition, counters come from the
// first run (they do not vary). Runs sequentially by default to keep the
// wall-time numbers honest; `parallel` turns on per-region concurrency
// inside the pipelines, which changes nothing but wallTimeMicros.
std::vector<CompareRow> comparePipelines(const GrayImage& img,
                                         std::span<const std::uint64_t> seeds,
                                         int repetitions = 5, bool parallel = false);

// CSV with a fixed header, '\n' line endings, no trailing blank line.
// sweep:   init_t,final_t,iterations,converged,degenerate
// compare: seed,variant,total_iterations,total_pixel_visits,wall_time_micros,thresholds
//          (thresholds joined by ';')
std::string writeCsv(std::span<const SweepRow> rows);
std::string writeCsv(std::span<const CompareRow> rows);

}  // namespace entedge
