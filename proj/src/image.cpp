#include "stegkit/image.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace stegkit {

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ < 1 || height_ < 1) {
    throw std::invalid_argument("image dimensions must be positive, got " +
                                std::to_string(width_) + "x" +
                                std::to_string(height_));
  }
  const auto expected =
      static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  if (pixels_.size() != expected) {
    throw std::invalid_argument(
        "pixel buffer holds " + std::to_string(pixels_.size()) +
        " bytes, expected " + std::to_string(expected));
  }
}

GrayImage GrayImage::filled(int width, int height, std::uint8_t value) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(
                       static_cast<std::size_t>(width) * height, value));
}

BitPlane slice_bitplane(const GrayImage& img, int plane_index) {
  if (plane_index < 0 || plane_index > 7) {
    throw std::invalid_argument("plane index must be in [0, 7], got " +
                                std::to_string(plane_index));
  }
  BitPlane plane;
  plane.width = img.width();
  plane.height = img.height();
  plane.plane_index = plane_index;
  plane.bits.resize(img.pixel_count());
  const auto px = img.pixels();
  for (std::size_t i = 0; i < px.size(); ++i) {
    plane.bits[i] = static_cast<std::uint8_t>((px[i] >> plane_index) & 1u);
  }
  return plane;
}

GrayImage compose_bitplanes(std::span<const BitPlane> planes) {
  if (planes.size() != 8) {
    throw std::invalid_argument("expected 8 bit-planes, got " +
                                std::to_string(planes.size()));
  }
  const int w = planes[0].width;
  const int h = planes[0].height;
  const auto n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  unsigned seen = 0;
  for (const BitPlane& p : planes) {
    if (p.width != w || p.height != h || p.bits.size() != n) {
      throw std::invalid_argument("bit-plane dimensions do not match");
    }
    if (p.plane_index < 0 || p.plane_index > 7) {
      throw std::invalid_argument("plane index must be in [0, 7]");
    }
    const unsigned bit = 1u << p.plane_index;
    if (seen & bit) {
      throw std::invalid_argument("duplicate plane index " +
                                  std::to_string(p.plane_index));
    }
    seen |= bit;
  }
  if (seen != 0xFFu) {
    throw std::invalid_argument("missing plane indices");
  }

  std::vector<std::uint8_t> pixels(n, 0);
  for (const BitPlane& p : planes) {
    const auto weight = static_cast<std::uint8_t>(1u << p.plane_index);
    for (std::size_t i = 0; i < n; ++i) {
      if (p.bits[i]) pixels[i] = static_cast<std::uint8_t>(pixels[i] | weight);
    }
  }
  return GrayImage(w, h, std::move(pixels));
}

GrayImage plane_to_image(const BitPlane& plane) {
  std::vector<std::uint8_t> pixels(plane.bits.size());
  for (std::size_t i = 0; i < plane.bits.size(); ++i) {
    pixels[i] = plane.bits[i] ? 255 : 0;
  }
  return GrayImage(plane.width, plane.height, std::move(pixels));
}

std::optional<double> psnr(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("psnr requires equal dimensions");
  }
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sq_sum = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = static_cast<int>(pa[i]) - static_cast<int>(pb[i]);
    sq_sum += static_cast<std::uint64_t>(d * d);
  }
  if (sq_sum == 0) return std::nullopt;
  const double mse = static_cast<double>(sq_sum) / static_cast<double>(pa.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

}  // namespace stegkit
