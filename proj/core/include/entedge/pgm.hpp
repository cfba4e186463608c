#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "entedge/image.hpp"

namespace entedge {

enum class PgmErrc {
  badMagic,         // not a P2/P5 file
  badHeader,        // malformed or missing header token
  zeroDimension,    // width or height is zero
  maxvalOutOfRange, // maxval < 1 or > 255 (16-bit rasters unsupported)
  truncatedData,    // raster shorter than width*height
  pixelOutOfRange,  // raster value above the declared maxval
};

class PgmError : public std::runtime_error {
 public:
  PgmError(PgmErrc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  PgmErrc code() const { return code_; }

 private:
  PgmErrc code_;
};

// Parses a P2 (ASCII) or P5 (binary) PGM with maxval in [1,255]. '#' comments
// may appear between header tokens; a single whitespace byte separates the
// maxval from a P5 raster. Pixel values are returned exactly as stored.
GrayImage readPgm(std::string_view bytes);

// Serializes with maxval 255, P5 by default or P2 when ascii.
// readPgm(writePgm(img)) == img for every image, in both modes.
std::string writePgm(const GrayImage& img, bool ascii = false);

GrayImage readPgmFile(const std::filesystem::path& path);
void writePgmFile(const std::filesystem::path& path, const GrayImage& img,
                  bool ascii = false);

}  // namespace entedge
