#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "entedge/image.hpp"
#include "entedge/rng.hpp"

namespace entedge {

// Initialization policy for the iterative threshold search. The default
// range [80,140] is the restricted-start variant; the full-range baseline
// uses [0,255]. explicitInit bypasses the random draw entirely.
struct ThresholdConfig {
  int initLow = 80;
  int initHigh = 140;
  std::optional<int> explicitInit{};
  int maxIterations = 256;
};

// Outcome of one threshold search on one region.
//
// pixelVisits counts pixel reads performed by the loop (iterations times the
// region's pixel count) and serves as the hardware-independent work metric.
// degenerate means an update step found one class empty; the search stops
// there with finalT unchanged.
struct ThresholdReport {
  int initT = 0;
  int finalT = 0;
  int iterations = 0;
  std::uint64_t pixelVisits = 0;
  bool converged = false;
  bool degenerate = false;

  bool operator==(const ThresholdReport&) const = default;
};

struct StepResult {
  int next = 0;
  bool degenerate = false;

  bool operator==(const StepResult&) const = default;
};

// The initial threshold: explicitInit when set (the stream is not touched),
// otherwise a uniform integer in [initLow, initHigh].
int drawInit(const ThresholdConfig& cfg, Rng& rng);

// One update of the mean-split map, all in integer floor arithmetic:
// next = floor((floor(mean of pixels > t) + floor(mean of pixels <= t)) / 2).
// An empty class makes the step degenerate and leaves t unchanged.
StepResult thresholdStep(const GrayImage& img, int t);

// Iterates thresholdStep from the drawn init until the value repeats, a
// degenerate step occurs, or maxIterations executed steps. Non-convergence
// is reported via the flags, never thrown.
ThresholdReport iterativeThreshold(const GrayImage& img, const ThresholdConfig& cfg,
                                   Rng& rng);

// bit = 1 where pixel >= t. (The update step splits classes with strict >;
// binarization uses >=. Both follow the reference procedure.)
BinaryImage binarize(const GrayImage& img, int t);

// Brute-force oracle: every t in 0..255 with thresholdStep(img,t) == (t, ok).
std::vector<int> fixpointSet(const GrayImage& img);

}  // namespace entedge
