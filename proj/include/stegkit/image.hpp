#pragma once

// 8-bit grayscale raster plus bit-plane decomposition and PSNR.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace stegkit {

class GrayImage {
 public:
  // Throws std::invalid_argument on non-positive dimensions or a pixel
  // buffer whose size is not width*height.
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  static GrayImage filled(int width, int height, std::uint8_t value);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  // Row-major: (x, y) = (column, row).
  std::uint8_t at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

// One binary digit position across all pixels; plane 0 is least significant.
struct BitPlane {
  int width = 0;
  int height = 0;
  int plane_index = 0;
  std::vector<std::uint8_t> bits;  // row-major, each 0 or 1
};

BitPlane slice_bitplane(const GrayImage& img, int plane_index);

// Expects exactly the planes 0..7 of one image (any order). Throws
// std::invalid_argument on dimension mismatch or missing/duplicate indices.
GrayImage compose_bitplanes(std::span<const BitPlane> planes);

// 0/255 rendering of a plane, for viewing with any PGM viewer.
GrayImage plane_to_image(const BitPlane& plane);

// nullopt means the images are identical (MSE == 0); otherwise decibels
// with peak fixed at 255. Throws std::invalid_argument on size mismatch.
std::optional<double> psnr(const GrayImage& a, const GrayImage& b);

}  // namespace stegkit
