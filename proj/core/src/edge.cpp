#include "entedge/edge.hpp"

#include <stdexcept>
#include <string>

#include "entedge/entropy.hpp"

namespace entedge {

namespace {

int windowMatches(const BinaryImage& bin, int x, int y) {
  const std::uint8_t center = bin.at(x, y);
  int count = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (bin.at(x + dx, y + dy) == center) ++count;
    }
  }
  return count;
}

}  // namespace

int matchCount(const BinaryImage& bin, int x, int y) {
  if (x < 1 || x > bin.width() - 2 || y < 1 || y > bin.height() - 2) {
    throw std::out_of_range("window center (" + std::to_string(x) + "," +
                            std::to_string(y) + ") touches the border");
  }
  return windowMatches(bin, x, y);
}

double centralPixelEntropy(int count) {
  if (count < 1 || count > 9) throw std::out_of_range("match count must lie in [1,9]");
  return windowEntropy(static_cast<double>(count) / 9.0);
}

bool isEdge(int count, const EdgeConfig& cfg) {
  if (count < 1 || count > 9) throw std::out_of_range("match count must lie in [1,9]");
  if (cfg.mode == EdgeMode::countRule) return count <= 6;
  return centralPixelEntropy(count) >= cfg.entropyThreshold;
}

BinaryImage detectEdges(const BinaryImage& bin, const EdgeConfig& cfg) {
  if (bin.width() < 3 || bin.height() < 3) {
    throw std::invalid_argument("edge detection needs an image of at least 3x3");
  }
  if (!(cfg.entropyThreshold > 0.0)) {
    throw std::invalid_argument("entropy threshold must be positive");
  }

  BinaryImage out = cfg.border == BorderPolicy::copyBinary
                        ? bin
                        : BinaryImage(bin.width(), bin.height(), 0);

  for (int y = 1; y < bin.height() - 1; ++y) {
    for (int x = 1; x < bin.width() - 1; ++x) {
      out.set(x, y, isEdge(windowMatches(bin, x, y), cfg) ? 1 : 0);
    }
  }
  return out;
}

}  // namespace entedge
