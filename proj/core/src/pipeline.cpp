#include "entedge/pipeline.hpp"

#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entedge {

PipelineConfig baselineConfig(std::uint64_t seed) {
  PipelineConfig cfg;
  cfg.gridRows = 1;
  cfg.gridCols = 1;
  cfg.threshold.initLow = 0;
  cfg.threshold.initHigh = 255;
  cfg.seed = seed;
  return cfg;
}

PipelineConfig proposedConfig(std::uint64_t seed) {
  PipelineConfig cfg;
  cfg.gridRows = 2;
  cfg.gridCols = 2;
  cfg.threshold.initLow = 80;
  cfg.threshold.initHigh = 140;
  cfg.seed = seed;
  return cfg;
}

Rng regionRng(std::uint64_t seed, std::size_t regionIndex) {
  std::uint64_t state = seed;
  std::uint64_t derived = 0;
  for (std::size_t i = 0; i <= regionIndex; ++i) derived = splitmix64(state);
  return Rng(derived);
}

PipelineResult runPipeline(const GrayImage& img, const PipelineConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  const auto parts = splitRegions(img, cfg.gridRows, cfg.gridCols);
  const std::size_t regionCount = parts.size();
  if (!cfg.regionInits.empty() && cfg.regionInits.size() != regionCount) {
    throw std::invalid_argument("got " + std::to_string(cfg.regionInits.size()) +
                                " explicit inits for " + std::to_string(regionCount) +
                                " regions");
  }

  std::vector<ThresholdReport> reports(regionCount);
  const auto thresholdRegion = [&](std::size_t i) {
    ThresholdConfig tc = cfg.threshold;
    if (!cfg.regionInits.empty()) tc.explicitInit = cfg.regionInits[i];
    Rng rng = regionRng(cfg.seed, i);
    reports[i] = iterativeThreshold(parts[i].first, tc, rng);
  };

  if (cfg.parallel && regionCount > 1) {
    std::vector<std::future<void>> jobs;
    jobs.reserve(regionCount);
    for (std::size_t i = 0; i < regionCount; ++i) {
      jobs.push_back(std::async(std::launch::async, thresholdRegion, i));
    }
    for (auto& job : jobs) job.get();
  } else {
    for (std::size_t i = 0; i < regionCount; ++i) thresholdRegion(i);
  }

  std::vector<std::pair<BinaryImage, RegionRect>> binarized;
  binarized.reserve(regionCount);
  for (std::size_t i = 0; i < regionCount; ++i) {
    binarized.emplace_back(binarize(parts[i].first, reports[i].finalT), parts[i].second);
  }

  const BinaryImage assembled = assembleRegions(binarized, img.width(), img.height());

  PipelineResult result{
      .edges = detectEdges(assembled, cfg.edge),
      .regionReports = std::move(reports),
  };
  result.totalPixelVisits = std::accumulate(
      result.regionReports.begin(), result.regionReports.end(), std::uint64_t{0},
      [](std::uint64_t sum, const ThresholdReport& r) { return sum + r.pixelVisits; });
  result.wallTime = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace entedge
