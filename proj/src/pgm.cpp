#include "stegkit/pgm.hpp"

#include <cstddef>
#include <string>

#include "stegkit/errors.hpp"

namespace stegkit {
namespace {

constexpr std::size_t kMaxDimension = 1u << 20;

bool is_pgm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Skips whitespace and '#' comments (which run to end of line).
void skip_separators(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (is_pgm_space(bytes[pos])) {
      ++pos;
    } else if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

std::uint64_t parse_unsigned(std::span<const std::uint8_t> bytes,
                             std::size_t& pos, const char* field) {
  skip_separators(bytes, pos);
  if (pos >= bytes.size()) {
    throw ParseError(std::string("missing ") + field + " in PGM header");
  }
  if (bytes[pos] < '0' || bytes[pos] > '9') {
    throw ParseError(std::string("invalid ") + field + " at byte offset " +
                     std::to_string(pos));
  }
  std::uint64_t value = 0;
  while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
    value = value * 10 + (bytes[pos] - '0');
    if (value > 0xFFFFFFFFull) {
      throw ParseError(std::string(field) + " out of range");
    }
    ++pos;
  }
  return value;
}

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw ParseError("bad magic: expected \"P5\"");
  }
  std::size_t pos = 2;

  const std::uint64_t width = parse_unsigned(bytes, pos, "width");
  const std::uint64_t height = parse_unsigned(bytes, pos, "height");
  const std::uint64_t maxval = parse_unsigned(bytes, pos, "maxval");

  if (width == 0 || width > kMaxDimension) {
    throw ParseError("width must be in [1, " + std::to_string(kMaxDimension) +
                     "], got " + std::to_string(width));
  }
  if (height == 0 || height > kMaxDimension) {
    throw ParseError("height must be in [1, " + std::to_string(kMaxDimension) +
                     "], got " + std::to_string(height));
  }
  if (maxval != 255) {
    throw ParseError("unsupported maxval " + std::to_string(maxval) +
                     " (must be 255)");
  }

  // Exactly one whitespace byte separates the header from the pixel data.
  if (pos >= bytes.size() || !is_pgm_space(bytes[pos])) {
    throw ParseError("missing whitespace after maxval at byte offset " +
                     std::to_string(pos));
  }
  ++pos;

  const std::size_t expected =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t available = bytes.size() - pos;
  if (available < expected) {
    throw ParseError("truncated pixel data: expected " +
                     std::to_string(expected) + " bytes from offset " +
                     std::to_string(pos) + ", found " +
                     std::to_string(available));
  }
  if (available > expected) {
    throw ParseError("trailing data after pixels at byte offset " +
                     std::to_string(pos + expected));
  }

  std::vector<std::uint8_t> pixels(bytes.begin() + pos, bytes.end());
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + img.pixel_count());
  out.insert(out.end(), header.begin(), header.end());
  const auto px = img.pixels();
  out.insert(out.end(), px.begin(), px.end());
  return out;
}

}  // namespace stegkit
