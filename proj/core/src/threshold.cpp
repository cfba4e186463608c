#include "entedge/threshold.hpp"

#include <stdexcept>
#include <string>

namespace entedge {

namespace {

void validate(const ThresholdConfig& cfg) {
  if (cfg.initLow < 0 || cfg.initLow > cfg.initHigh || cfg.initHigh > 255) {
    throw std::invalid_argument("init range [" + std::to_string(cfg.initLow) + "," +
                                std::to_string(cfg.initHigh) + "] is not within [0,255]");
  }
  if (cfg.explicitInit && (*cfg.explicitInit < 0 || *cfg.explicitInit > 255)) {
    throw std::out_of_range("explicit init " + std::to_string(*cfg.explicitInit) +
                            " is outside [0,255]");
  }
  if (cfg.maxIterations < 1) {
    throw std::invalid_argument("maxIterations must be positive");
  }
}

}  // namespace

int drawInit(const ThresholdConfig& cfg, Rng& rng) {
  validate(cfg);
  if (cfg.explicitInit) return *cfg.explicitInit;
  return rng.uniformInt(cfg.initLow, cfg.initHigh);
}

StepResult thresholdStep(const GrayImage& img, int t) {
  std::uint64_t sumAbove = 0;
  std::uint64_t sumBelow = 0;
  std::size_t nAbove = 0;
  std::size_t nBelow = 0;

  for (std::uint8_t v : img.pixels()) {
    if (v > t) {
      sumAbove += v;
      ++nAbove;
    } else {
      sumBelow += v;
      ++nBelow;
    }
  }

  if (nAbove == 0 || nBelow == 0) return {t, true};

  const int meanAbove = static_cast<int>(sumAbove / nAbove);
  const int meanBelow = static_cast<int>(sumBelow / nBelow);
  return {(meanAbove + meanBelow) / 2, false};
}

ThresholdReport iterativeThreshold(const GrayImage& img, const ThresholdConfig& cfg,
                                   Rng& rng) {
  ThresholdReport report;
  int t = drawInit(cfg, rng);
  report.initT = t;

  // Sentinel outside [0,255]: the first step always runs, even for init 0.
  int prev = -1;
  bool capped = false;
  while (t != prev) {
    if (report.iterations >= cfg.maxIterations) {
      capped = true;
      break;
    }
    ++report.iterations;
    const StepResult step = thresholdStep(img, t);
    if (step.degenerate) {
      report.degenerate = true;
      break;
    }
    prev = t;
    t = step.next;
  }

  report.finalT = t;
  report.converged = !capped;
  report.pixelVisits = static_cast<std::uint64_t>(report.iterations) * img.pixelCount();
  return report;
}

BinaryImage binarize(const GrayImage& img, int t) {
  if (t < 0 || t > 255) throw std::out_of_range("threshold must lie in [0,255]");

  std::vector<std::uint8_t> bits(img.pixelCount());
  auto pixels = img.pixels();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] = pixels[i] >= t ? 1 : 0;
  }
  return BinaryImage(img.width(), img.height(), std::move(bits));
}

std::vector<int> fixpointSet(const GrayImage& img) {
  std::vector<int> fixpoints;
  for (int t = 0; t <= 255; ++t) {
    const StepResult step = thresholdStep(img, t);
    if (!step.degenerate && step.next == t) fixpoints.push_back(t);
  }
  return fixpoints;
}

}  // namespace entedge
