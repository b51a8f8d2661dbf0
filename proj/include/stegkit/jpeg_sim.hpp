#pragma once

// Blockwise 8x8 DCT, quantization and zig-zag scan: the lossy half of a
// baseline JPEG encode-decode cycle, without any bitstream coding. Used to
// reproduce the histogram damage a lossy save inflicts on embedded planes.

#include <array>
#include <cstdint>

#include "stegkit/image.hpp"

namespace stegkit {

inline constexpr int kBlockSize = 8;

// Row-major 8x8 sample block.
using PixelBlock = std::array<std::uint8_t, 64>;

struct DctBlock {
  std::array<double, 64> f{};  // f[u*8 + v]; (0,0) is the DC coefficient
  double& at(int u, int v) { return f[u * 8 + v]; }
  double at(int u, int v) const { return f[u * 8 + v]; }
};

struct QuantTable {
  std::array<int, 64> q{};  // every entry >= 1
  int quality = 50;
  int& at(int i, int j) { return q[i * 8 + j]; }
  int at(int i, int j) const { return q[i * 8 + j]; }
};

struct QuantizedBlock {
  std::array<int, 64> c{};
  int& at(int i, int j) { return c[i * 8 + j]; }
  int at(int i, int j) const { return c[i * 8 + j]; }
};

// Level-shifts samples by -128, then applies the orthonormal cosine kernel
// in double precision.
DctBlock forward_dct(const PixelBlock& samples);

// Inverse kernel plus the +128 level shift; no rounding or clamping here.
std::array<double, 64> inverse_dct(const DctBlock& coeffs);

// Entrywise round-half-away-from-zero of coefficient / table entry.
QuantizedBlock quantize(const DctBlock& coeffs, const QuantTable& table);

// Entrywise product; exact.
DctBlock dequantize(const QuantizedBlock& block, const QuantTable& table);

// The standard luminance table, quality 50.
const QuantTable& base_quant_table();

// S = 5000/quality below 50, else 200 - 2*quality; entries become
// floor((base*S + 50)/100), clamped to >= 1. Quality must be in [1, 100].
QuantTable scale_quant_table(const QuantTable& base, int quality);

// Diagonal scan order starting (0,0),(0,1),(1,0),(2,0),(1,1),(0,2),...
std::array<int, 64> zigzag_scan(const QuantizedBlock& block);

// Per block: forward DCT, quantize at the given quality, dequantize,
// inverse DCT, round half away from zero, clamp to [0,255]. Dimensions that
// are not multiples of 8 are edge-replicated before and cropped after.
GrayImage jpeg_roundtrip(const GrayImage& img, int quality);

}  // namespace stegkit
