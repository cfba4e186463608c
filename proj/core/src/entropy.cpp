#include "entedge/entropy.hpp"

#include <cmath>

namespace entedge {

double selfInformation(double p, LogBase base) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("self-information needs a probability in (0,1]");
  }
  return base == LogBase::two ? -std::log2(p) : -std::log(p);
}

Histogram buildHistogram(const GrayImage& img) {
  Histogram hist;
  for (std::uint8_t v : img.pixels()) ++hist.counts[v];
  hist.total = img.pixelCount();
  return hist;
}

Pmf pmf(const Histogram& hist) {
  if (hist.total == 0) throw std::invalid_argument("cannot normalize an empty histogram");
  Pmf p{};
  for (std::size_t g = 0; g < p.size(); ++g) {
    p[g] = static_cast<double>(hist.counts[g]) / static_cast<double>(hist.total);
  }
  return p;
}

double cumulative(const Pmf& p, int g) {
  if (g < 0 || g > 255) throw std::out_of_range("gray level must lie in [0,255]");
  double sum = 0.0;
  for (int i = 0; i <= g; ++i) sum += p[static_cast<std::size_t>(i)];
  return sum;
}

ClassStats classStats(const Pmf& p, int threshold) {
  if (threshold < 0 || threshold > 254) {
    throw std::out_of_range("class threshold must lie in [0,254]");
  }

  ClassStats stats;
  for (int g = 0; g <= threshold; ++g) stats.pForeground += p[static_cast<std::size_t>(g)];
  for (int g = threshold + 1; g <= 255; ++g) stats.pBackground += p[static_cast<std::size_t>(g)];

  if (stats.pForeground <= 0.0 || stats.pBackground <= 0.0) {
    throw EmptyClassError(threshold);
  }

  // Entropy of the class-normalized distribution; empty bins contribute
  // nothing (0*log 0 := 0).
  const auto classEntropy = [&p](int lo, int hi, double classProb) {
    double h = 0.0;
    for (int g = lo; g <= hi; ++g) {
      const double q = p[static_cast<std::size_t>(g)] / classProb;
      if (q > 0.0) h -= q * std::log(q);
    }
    return h;
  };
  stats.hForeground = classEntropy(0, threshold, stats.pForeground);
  stats.hBackground = classEntropy(threshold + 1, 255, stats.pBackground);
  stats.hTotal = stats.hForeground + stats.hBackground;
  return stats;
}

double windowEntropy(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::domain_error("window entropy needs a probability in (0,1]");
  }
  return -p * std::log(p);
}

}  // namespace entedge
