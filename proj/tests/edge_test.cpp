#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "entedge/edge.hpp"
#include "entedge/synth.hpp"
#include "entedge/threshold.hpp"
#include "testutil.hpp"

using namespace entedge;
using testutil::randomBinary;

namespace {

BinaryImage flipped(const BinaryImage& bin) {
  std::vector<std::uint8_t> bits(bin.bits().begin(), bin.bits().end());
  for (auto& b : bits) b ^= 1;
  return BinaryImage(bin.width(), bin.height(), std::move(bits));
}

// 0/1 checkerboard with cell 1: bit = parity of x+y.
BinaryImage checkerBits(int w, int h) {
  BinaryImage bin(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) bin.set(x, y, static_cast<std::uint8_t>((x + y) % 2));
  }
  return bin;
}

}  // namespace

TEST_CASE("matchCount counts window pixels equal to the center") {
  CHECK(matchCount(BinaryImage(3, 3, 1), 1, 1) == 9);
  CHECK(matchCount(checkerBits(3, 3), 1, 1) == 5);  // center plus the four corners

  BinaryImage lone(3, 3, 0);
  lone.set(1, 1, 1);
  CHECK(matchCount(lone, 1, 1) == 1);

  CHECK_THROWS_AS(matchCount(lone, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(matchCount(lone, 1, 0), std::out_of_range);
  CHECK_THROWS_AS(matchCount(lone, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(matchCount(lone, 1, 2), std::out_of_range);
}

TEST_CASE("centralPixelEntropy reproduces the worked window values") {
  CHECK(std::abs(centralPixelEntropy(4) - 0.3604) <= 5e-5);
  CHECK(std::abs(centralPixelEntropy(2) - 0.3342) <= 5e-5);
  CHECK(centralPixelEntropy(9) == 0.0);
  CHECK_THROWS_AS(centralPixelEntropy(0), std::out_of_range);
  CHECK_THROWS_AS(centralPixelEntropy(10), std::out_of_range);
}

TEST_CASE("isEdge: the count rule fires on counts 1..6") {
  const EdgeConfig byCount;
  CHECK_FALSE(isEdge(7, byCount));
  CHECK(isEdge(6, byCount));
  CHECK(isEdge(1, byCount));
  CHECK_FALSE(isEdge(9, byCount));

  EdgeConfig byEntropy;
  byEntropy.mode = EdgeMode::entropyRule;
  CHECK(isEdge(1, byEntropy));  // 0.24414 >= 0.2441

  CHECK_THROWS_AS(isEdge(0, byCount), std::out_of_range);
}

TEST_CASE("count rule and entropy rule agree for every count") {
  EdgeConfig byEntropy;
  byEntropy.mode = EdgeMode::entropyRule;

  EdgeConfig analytic = byEntropy;
  analytic.entropyThreshold = -(1.0 / 9.0) * std::log(1.0 / 9.0);

  const EdgeConfig byCount;
  for (int count = 1; count <= 9; ++count) {
    CHECK(isEdge(count, byCount) == isEdge(count, byEntropy));
    CHECK(isEdge(count, byCount) == isEdge(count, analytic));
  }
}

TEST_CASE("a homogeneous image has no edges") {
  const BinaryImage edges = detectEdges(BinaryImage(6, 5, 1));
  CHECK(edges == BinaryImage(6, 5, 0));
}

TEST_CASE("a cell-1 checkerboard is all edges in the interior") {
  const BinaryImage edges = detectEdges(checkerBits(7, 6));
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 7; ++x) {
      const bool interior = x >= 1 && x <= 5 && y >= 1 && y <= 4;
      CHECK(edges.at(x, y) == (interior ? 1 : 0));
    }
  }
}

TEST_CASE("a vertical split yields edges in the two columns at the boundary") {
  // columns 0..3 are 0, columns 4..7 are 1; expect edges at x=3 and x=4
  BinaryImage bin(8, 6);
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 8; ++x) bin.set(x, y, x >= 4 ? 1 : 0);
  }

  BinaryImage expected(8, 6, 0);
  for (int y = 1; y <= 4; ++y) {
    expected.set(3, y, 1);
    expected.set(4, y, 1);
  }
  CHECK(detectEdges(bin) == expected);
}

TEST_CASE("the border ring follows the configured policy") {
  const BinaryImage bin = checkerBits(5, 4);

  const BinaryImage zeroed = detectEdges(bin, {});
  for (int x = 0; x < 5; ++x) {
    CHECK(zeroed.at(x, 0) == 0);
    CHECK(zeroed.at(x, 3) == 0);
  }
  for (int y = 0; y < 4; ++y) {
    CHECK(zeroed.at(0, y) == 0);
    CHECK(zeroed.at(4, y) == 0);
  }

  EdgeConfig copy;
  copy.border = BorderPolicy::copyBinary;
  const BinaryImage copied = detectEdges(bin, copy);
  for (int x = 0; x < 5; ++x) {
    CHECK(copied.at(x, 0) == bin.at(x, 0));
    CHECK(copied.at(x, 3) == bin.at(x, 3));
  }
  for (int y = 1; y < 3; ++y) {
    CHECK(copied.at(0, y) == bin.at(0, y));
    CHECK(copied.at(4, y) == bin.at(4, y));
    for (int x = 1; x < 4; ++x) CHECK(copied.at(x, y) == zeroed.at(x, y));
  }
}

TEST_CASE("detectEdges preserves dimensions and rejects tiny images") {
  Rng rng(21);
  const BinaryImage bin = randomBinary(rng, 13, 4);
  const BinaryImage edges = detectEdges(bin);
  CHECK(edges.width() == 13);
  CHECK(edges.height() == 4);

  CHECK_THROWS_AS(detectEdges(BinaryImage(2, 5, 0)), std::invalid_argument);
  CHECK_THROWS_AS(detectEdges(BinaryImage(5, 2, 0)), std::invalid_argument);

  EdgeConfig bad;
  bad.entropyThreshold = 0.0;
  CHECK_THROWS_AS(detectEdges(bin, bad), std::invalid_argument);
}

TEST_CASE("edge maps are invariant under complementing the input") {
  Rng rng(22);
  for (int i = 0; i < 20; ++i) {
    const BinaryImage bin = randomBinary(rng, rng.uniformInt(3, 20), rng.uniformInt(3, 20));
    CHECK(detectEdges(bin) == detectEdges(flipped(bin)));

    EdgeConfig copy;
    copy.border = BorderPolicy::copyBinary;
    const BinaryImage a = detectEdges(bin, copy);
    const BinaryImage b = detectEdges(flipped(bin), copy);
    for (int y = 1; y < bin.height() - 1; ++y) {
      for (int x = 1; x < bin.width() - 1; ++x) CHECK(a.at(x, y) == b.at(x, y));
    }
  }
}
