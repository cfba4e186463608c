#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "entedge/edge.hpp"
#include "entedge/image.hpp"
#include "entedge/rng.hpp"
#include "entedge/threshold.hpp"

namespace entedge {

// End-to-end detector settings. A 1x1 grid is the single-global-threshold
// baseline; the partitioned variant thresholds each region independently,
// reassembles, and edge-detects the whole image once (windows straddle the
// region seams).
struct PipelineConfig {
  int gridRows = 2;
  int gridCols = 2;
  ThresholdConfig threshold{};
  EdgeConfig edge{};
  std::uint64_t seed = 0;
  // Empty, or exactly one explicit init per region (row-major). When set,
  // no randomness is consumed anywhere.
  std::vector<int> regionInits{};
  bool parallel = false;
};

struct PipelineResult {
  BinaryImage edges;
  std::vector<ThresholdReport> regionReports;  // row-major region order
  std::uint64_t totalPixelVisits = 0;
  std::chrono::microseconds wallTime{0};
};

// Grid 1x1, init range [0,255].
PipelineConfig baselineConfig(std::uint64_t seed);

// Grid 2x2, init range [80,140].
PipelineConfig proposedConfig(std::uint64_t seed);

// Region i (row-major) draws from its own stream, seeded with the (i+1)-th
// output of a splitmix64 sequence started at the pipeline seed. Outputs are
// therefore independent of region scheduling order.
Rng regionRng(std::uint64_t seed, std::size_t regionIndex);

PipelineResult runPipeline(const GrayImage& img, const PipelineConfig& cfg);

}  // namespace entedge
