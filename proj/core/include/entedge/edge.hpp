#pragma once

#include "entedge/image.hpp"

namespace entedge {

// countRule flags a pixel whose 3x3 match count is at most 6; entropyRule
// flags a pixel whose window entropy -p*ln(p), p = count/9, reaches the
// configured threshold. The two agree for every count at the default 0.2441.
enum class EdgeMode { countRule, entropyRule };

// What to put in the one-pixel ring the 3x3 window cannot reach: zeros, or a
// copy of the input binary values (the reference procedure's behavior).
enum class BorderPolicy { zeroBorder, copyBinary };

struct EdgeConfig {
  EdgeMode mode = EdgeMode::countRule;
  double entropyThreshold = 0.2441;
  BorderPolicy border = BorderPolicy::zeroBorder;
};

// Number of pixels in the 3x3 window equal to the center, center included,
// so the result lies in [1,9]. (x,y) must be at least one pixel from every
// border; throws std::out_of_range otherwise.
int matchCount(const BinaryImage& bin, int x, int y);

// windowEntropy(count/9), in nats.
double centralPixelEntropy(int count);

bool isEdge(int count, const EdgeConfig& cfg);

// Edge map of a binary image. Needs at least 3x3. Note the entropy is not
// monotone in the match count: the rule fires on the count interval [1,6],
// not a half-line.
BinaryImage detectEdges(const BinaryImage& bin, const EdgeConfig& cfg = {});

}  // namespace entedge
