#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "entedge/image.hpp"

namespace entedge {

// Gray-level histogram: counts indexed by level, sum(counts) == total.
struct Histogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;
};

// Normalized histogram: p(g) = counts[g] / total.
using Pmf = std::array<double, 256>;

// Probabilities and Shannon entropies (nats) of the two classes split by a
// threshold: foreground is g <= T, background is g > T. Class entropies are
// computed over the class-normalized distributions.
struct ClassStats {
  double pForeground = 0.0;
  double pBackground = 0.0;
  double hForeground = 0.0;
  double hBackground = 0.0;
  double hTotal = 0.0;
};

// Raised when a class has zero probability at the requested threshold.
class EmptyClassError : public std::domain_error {
 public:
  explicit EmptyClassError(int threshold)
      : std::domain_error("class entropy undefined at threshold " +
                          std::to_string(threshold) + ": one class is empty") {}
};

enum class LogBase { two, e };

// -log(p) in the requested base. Domain: 0 < p <= 1.
double selfInformation(double p, LogBase base);

Histogram buildHistogram(const GrayImage& img);

// Throws std::invalid_argument on an empty histogram.
Pmf pmf(const Histogram& hist);

// Sum of p(0..g). Nondecreasing in g, 1 at g = 255.
double cumulative(const Pmf& p, int g);

// Class probabilities and entropies at threshold T in [0, 254]. Throws
// EmptyClassError when either class has zero probability.
ClassStats classStats(const Pmf& p, int threshold);

// -p * ln(p): the entropy contribution of a window's central pixel.
// Domain: 0 < p <= 1.
double windowEntropy(double p);

}  // namespace entedge
