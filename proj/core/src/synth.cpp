#include "entedge/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entedge/rng.hpp"

namespace entedge {

GrayImage genConstant(int width, int height, std::uint8_t value) {
  return GrayImage(width, height, value);
}

GrayImage genCheckerboard(int width, int height, int cell, std::uint8_t lo,
                          std::uint8_t hi) {
  if (cell <= 0) throw std::invalid_argument("checkerboard cell must be positive");
  if (lo >= hi) throw std::invalid_argument("checkerboard needs lo < hi");

  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const bool even = ((x / cell) + (y / cell)) % 2 == 0;
      img.set(x, y, even ? lo : hi);
    }
  }
  return img;
}

GrayImage genBimodal(int width, int height, double mu1, double mu2, double sigma,
                     double mixRatio, std::uint64_t seed) {
  if (!(mu1 >= 0.0 && mu1 < mu2 && mu2 <= 255.0)) {
    throw std::invalid_argument("bimodal modes need 0 <= mu1 < mu2 <= 255");
  }
  if (sigma < 0.0) throw std::invalid_argument("bimodal sigma must be nonnegative");
  if (!(mixRatio > 0.0 && mixRatio < 1.0)) {
    throw std::invalid_argument("bimodal mixRatio must lie in (0,1)");
  }

  Rng rng(seed);
  GrayImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double mu = rng.uniform01() < mixRatio ? mu1 : mu2;
      const double noise = rng.gaussian() * sigma;
      const long v = std::lround(mu + noise);
      img.set(x, y, static_cast<std::uint8_t>(std::clamp(v, 0L, 255L)));
    }
  }
  return img;
}

}  // namespace entedge
