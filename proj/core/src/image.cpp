#include "entedge/image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace entedge {

namespace {

void checkDims(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("image dimensions must be positive, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
}

std::size_t expectedSize(int width, int height) {
  return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  checkDims(width, height);
  pixels_.assign(expectedSize(width, height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  checkDims(width, height);
  if (pixels_.size() != expectedSize(width, height)) {
    throw std::invalid_argument("pixel buffer size " + std::to_string(pixels_.size()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

BinaryImage::BinaryImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  checkDims(width, height);
  if (fill > 1) throw std::invalid_argument("binary fill value must be 0 or 1");
  bits_.assign(expectedSize(width, height), fill);
}

BinaryImage::BinaryImage(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  checkDims(width, height);
  if (bits_.size() != expectedSize(width, height)) {
    throw std::invalid_argument("bit buffer size " + std::to_string(bits_.size()) +
                                " does not match " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
  if (std::ranges::any_of(bits_, [](std::uint8_t b) { return b > 1; })) {
    throw std::invalid_argument("binary image values must be 0 or 1");
  }
}

RegionGrid RegionGrid::tile(int imageWidth, int imageHeight, int rows, int cols) {
  checkDims(imageWidth, imageHeight);
  if (rows <= 0 || cols <= 0 || rows > imageHeight || cols > imageWidth) {
    throw std::invalid_argument("grid " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " exceeds image dimensions " + std::to_string(imageWidth) +
                                "x" + std::to_string(imageHeight));
  }

  const int baseH = imageHeight / rows;
  const int baseW = imageWidth / cols;

  RegionGrid grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.boundaries.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    const int top = r * baseH;
    const int h = (r == rows - 1) ? imageHeight - top : baseH;
    for (int c = 0; c < cols; ++c) {
      const int left = c * baseW;
      const int w = (c == cols - 1) ? imageWidth - left : baseW;
      grid.boundaries.push_back(RegionRect{top, left, h, w});
    }
  }
  return grid;
}

GrayImage binaryToGray(const BinaryImage& bin) {
  std::vector<std::uint8_t> pixels(bin.pixelCount());
  auto bits = bin.bits();
  std::ranges::transform(bits, pixels.begin(),
                         [](std::uint8_t b) { return b ? std::uint8_t{255} : std::uint8_t{0}; });
  return GrayImage(bin.width(), bin.height(), std::move(pixels));
}

std::vector<std::pair<GrayImage, RegionRect>> splitRegions(const GrayImage& img,
                                                           int rows, int cols) {
  const RegionGrid grid = RegionGrid::tile(img.width(), img.height(), rows, cols);

  std::vector<std::pair<GrayImage, RegionRect>> parts;
  parts.reserve(grid.boundaries.size());
  for (const RegionRect& rect : grid.boundaries) {
    std::vector<std::uint8_t> pixels;
    pixels.reserve(static_cast<std::size_t>(rect.height) * static_cast<std::size_t>(rect.width));
    for (int y = rect.top; y < rect.top + rect.height; ++y) {
      for (int x = rect.left; x < rect.left + rect.width; ++x) {
        pixels.push_back(img.at(x, y));
      }
    }
    parts.emplace_back(GrayImage(rect.width, rect.height, std::move(pixels)), rect);
  }
  return parts;
}

BinaryImage assembleRegions(const std::vector<std::pair<BinaryImage, RegionRect>>& parts,
                            int width, int height) {
  checkDims(width, height);

  BinaryImage out(width, height, 0);
  std::vector<std::uint8_t> covered(expectedSize(width, height), 0);

  for (const auto& [part, rect] : parts) {
    if (part.width() != rect.width || part.height() != rect.height) {
      throw std::invalid_argument("region content does not match its rectangle size");
    }
    if (rect.top < 0 || rect.left < 0 || rect.top + rect.height > height ||
        rect.left + rect.width > width) {
      throw std::invalid_argument("region rectangle lies outside the canvas");
    }
    for (int y = 0; y < rect.height; ++y) {
      for (int x = 0; x < rect.width; ++x) {
        const std::size_t idx = static_cast<std::size_t>(rect.top + y) *
                                    static_cast<std::size_t>(width) +
                                static_cast<std::size_t>(rect.left + x);
        if (covered[idx]) throw std::invalid_argument("region rectangles overlap");
        covered[idx] = 1;
        out.set(rect.left + x, rect.top + y, part.at(x, y));
      }
    }
  }

  if (std::ranges::any_of(covered, [](std::uint8_t c) { return c == 0; })) {
    throw std::invalid_argument("region rectangles leave a gap in the canvas");
  }
  return out;
}

}  // namespace entedge
