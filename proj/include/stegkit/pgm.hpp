#pragma once

// Binary PGM (P5) with maxval 255, the toolkit's only raster container.

#include <cstdint>
#include <span>
#include <vector>

#include "stegkit/image.hpp"

namespace stegkit {

// Accepts '#' comment lines between header tokens. Throws ParseError naming
// the offending header field or byte offset.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

// Canonical form: "P5\n<width> <height>\n255\n" + raw pixels, bit-exact.
std::vector<std::uint8_t> save_pgm(const GrayImage& img);

}  // namespace stegkit
