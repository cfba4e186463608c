#pragma once

#include <cstdint>

#include "entedge/image.hpp"

namespace entedge {

// Deterministic synthetic fixtures. Same arguments, same image — always.

GrayImage genConstant(int width, int height, std::uint8_t value);

// pixel(x,y) = lo when floor(x/cell)+floor(y/cell) is even, else hi.
GrayImage genCheckerboard(int width, int height, int cell, std::uint8_t lo,
                          std::uint8_t hi);

// Two-mode image: each pixel takes mode mu1 with probability mixRatio, else
// mu2, plus Gaussian noise of standard deviation sigma, rounded and clamped
// to [0,255]. sigma == 0 yields exactly the two mode values.
GrayImage genBimodal(int width, int height, double mu1, double mu2, double sigma,
                     double mixRatio, std::uint64_t seed);

}  // namespace entedge
