#include "entedge/pgm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace entedge {

namespace {

bool isPgmSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

struct Cursor {
  std::string_view data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  char peek() const { return data[pos]; }
};

// Whitespace and '#' comments (which run to end of line) separate tokens.
void skipSpaceAndComments(Cursor& c) {
  while (!c.eof()) {
    if (isPgmSpace(c.peek())) {
      ++c.pos;
    } else if (c.peek() == '#') {
      while (!c.eof() && c.peek() != '\n') ++c.pos;
    } else {
      break;
    }
  }
}

long readInt(Cursor& c, PgmErrc errc, const char* what) {
  skipSpaceAndComments(c);
  if (c.eof() || !std::isdigit(static_cast<unsigned char>(c.peek()))) {
    throw PgmError(errc, std::string("expected ") + what);
  }
  long value = 0;
  while (!c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    value = value * 10 + (c.peek() - '0');
    if (value > 1'000'000'000L) throw PgmError(errc, std::string(what) + " is out of range");
    ++c.pos;
  }
  return value;
}

}  // namespace

GrayImage readPgm(std::string_view bytes) {
  Cursor c{bytes};

  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw PgmError(PgmErrc::badMagic, "not a P2/P5 PGM file");
  }
  const bool ascii = bytes[1] == '2';
  c.pos = 2;

  const long width = readInt(c, PgmErrc::badHeader, "width");
  const long height = readInt(c, PgmErrc::badHeader, "height");
  const long maxval = readInt(c, PgmErrc::badHeader, "maxval");

  if (width == 0 || height == 0) {
    throw PgmError(PgmErrc::zeroDimension, "image has a zero dimension");
  }
  if (maxval < 1 || maxval > 255) {
    throw PgmError(PgmErrc::maxvalOutOfRange,
                   "maxval " + std::to_string(maxval) + " is outside [1,255]");
  }

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<std::uint8_t> pixels;
  pixels.reserve(count);

  if (ascii) {
    for (std::size_t i = 0; i < count; ++i) {
      long v;
      try {
        v = readInt(c, PgmErrc::truncatedData, "pixel value");
      } catch (const PgmError&) {
        throw PgmError(PgmErrc::truncatedData,
                       "raster ends after " + std::to_string(i) + " of " +
                           std::to_string(count) + " pixels");
      }
      if (v > maxval) {
        throw PgmError(PgmErrc::pixelOutOfRange,
                       "pixel value " + std::to_string(v) + " exceeds maxval " +
                           std::to_string(maxval));
      }
      pixels.push_back(static_cast<std::uint8_t>(v));
    }
  } else {
    // Exactly one whitespace byte between maxval and the raster.
    if (c.eof() || !isPgmSpace(c.peek())) {
      throw PgmError(PgmErrc::badHeader, "missing whitespace before P5 raster");
    }
    ++c.pos;
    if (bytes.size() - c.pos < count) {
      throw PgmError(PgmErrc::truncatedData,
                     "raster holds " + std::to_string(bytes.size() - c.pos) + " of " +
                         std::to_string(count) + " bytes");
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint8_t v = static_cast<std::uint8_t>(bytes[c.pos + i]);
      if (v > maxval) {
        throw PgmError(PgmErrc::pixelOutOfRange,
                       "pixel value " + std::to_string(v) + " exceeds maxval " +
                           std::to_string(maxval));
      }
      pixels.push_back(v);
    }
  }

  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::string writePgm(const GrayImage& img, bool ascii) {
  std::string out;
  out += ascii ? "P2" : "P5";
  out += '\n';
  out += std::to_string(img.width());
  out += ' ';
  out += std::to_string(img.height());
  out += "\n255\n";

  if (ascii) {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        if (x > 0) out += ' ';
        out += std::to_string(img.at(x, y));
      }
      out += '\n';
    }
  } else {
    auto pixels = img.pixels();
    out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  }
  return out;
}

GrayImage readPgmFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return readPgm(buf.str());
}

void writePgmFile(const std::filesystem::path& path, const GrayImage& img, bool ascii) {
  const std::string bytes = writePgm(img, ascii);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

}  // namespace entedge
