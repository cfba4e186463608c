#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace entedge {

// Row-major 8-bit grayscale raster. Immutable in spirit: all library
// operations take it by const reference and return fresh images.
class GrayImage {
 public:
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixelCount() const { return pixels_.size(); }

  std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
  void set(int x, int y, std::uint8_t v) { pixels_[index(x, y)] = v; }

  std::span<const std::uint8_t> pixels() const { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t index(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// Row-major raster of {0,1}: both the binarized image and the edge map.
class BinaryImage {
 public:
  BinaryImage(int width, int height, std::uint8_t fill = 0);
  BinaryImage(int width, int height, std::vector<std::uint8_t> bits);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixelCount() const { return bits_.size(); }

  std::uint8_t at(int x, int y) const { return bits_[index(x, y)]; }
  void set(int x, int y, std::uint8_t v) {
    assert(v <= 1);
    bits_[index(x, y)] = v;
  }

  std::span<const std::uint8_t> bits() const { return bits_; }

  bool operator==(const BinaryImage&) const = default;

 private:
  std::size_t index(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

// One region's rectangle in parent-image coordinates.
struct RegionRect {
  int top = 0;
  int left = 0;
  int height = 0;
  int width = 0;

  bool operator==(const RegionRect&) const = default;
};

// Floor-split tiling: every row of regions has height floor(H/rows) except
// the last, which takes the remainder; likewise for columns. Regions are
// stored row-major and tile the parent exactly.
struct RegionGrid {
  int rows = 1;
  int cols = 1;
  std::vector<RegionRect> boundaries;

  static RegionGrid tile(int imageWidth, int imageHeight, int rows, int cols);
};

// Renders a binary image for file output: 0 -> 0, 1 -> 255.
GrayImage binaryToGray(const BinaryImage& bin);

// Cuts the image into a rows x cols grid of subimages with their rectangles.
// Throws std::invalid_argument when the grid exceeds the image dimensions.
std::vector<std::pair<GrayImage, RegionRect>> splitRegions(const GrayImage& img,
                                                           int rows, int cols);

// Inverse of splitRegions for binary parts. The rectangles must tile the
// width x height canvas exactly; overlap, gap, or a part whose size differs
// from its rectangle throws std::invalid_argument.
BinaryImage assembleRegions(const std::vector<std::pair<BinaryImage, RegionRect>>& parts,
                            int width, int height);

}  // namespace entedge
