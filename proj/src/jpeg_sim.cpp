#include "stegkit/jpeg_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stegkit {
namespace {

// basis[u][x] = alpha(u) * cos((2x+1) * u * pi / 16); rows are orthonormal.
struct CosineBasis {
  double b[8][8];
  CosineBasis() {
    for (int u = 0; u < 8; ++u) {
      const double alpha = u == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      for (int x = 0; x < 8; ++x) {
        b[u][x] = alpha * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
      }
    }
  }
};

const CosineBasis kBasis;

double round_half_away(double v) { return std::round(v); }

// (row, col) visiting order of the diagonal scan.
struct ZigzagOrder {
  int pos[64];
  ZigzagOrder() {
    int i = 0;
    for (int d = 0; d < 15; ++d) {
      if (d % 2 == 0) {  // walk up-right
        for (int r = std::min(d, 7); r >= std::max(0, d - 7); --r) {
          pos[i++] = r * 8 + (d - r);
        }
      } else {  // walk down-left
        for (int r = std::max(0, d - 7); r <= std::min(d, 7); ++r) {
          pos[i++] = r * 8 + (d - r);
        }
      }
    }
  }
};

const ZigzagOrder kZigzag;

void check_quality(int quality) {
  if (quality < 1 || quality > 100) {
    throw std::invalid_argument("quality must be in [1, 100], got " +
                                std::to_string(quality));
  }
}

}  // namespace

DctBlock forward_dct(const PixelBlock& samples) {
  double shifted[8][8];
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      shifted[x][y] = static_cast<double>(samples[x * 8 + y]) - 128.0;
    }
  }
  // Separable: rows first, then columns.
  double rows[8][8];
  for (int u = 0; u < 8; ++u) {
    for (int y = 0; y < 8; ++y) {
      double acc = 0.0;
      for (int x = 0; x < 8; ++x) acc += kBasis.b[u][x] * shifted[x][y];
      rows[u][y] = acc;
    }
  }
  DctBlock out;
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      double acc = 0.0;
      for (int y = 0; y < 8; ++y) acc += kBasis.b[v][y] * rows[u][y];
      out.at(u, v) = acc;
    }
  }
  return out;
}

std::array<double, 64> inverse_dct(const DctBlock& coeffs) {
  double cols[8][8];
  for (int u = 0; u < 8; ++u) {
    for (int y = 0; y < 8; ++y) {
      double acc = 0.0;
      for (int v = 0; v < 8; ++v) acc += kBasis.b[v][y] * coeffs.at(u, v);
      cols[u][y] = acc;
    }
  }
  std::array<double, 64> out{};
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      double acc = 0.0;
      for (int u = 0; u < 8; ++u) acc += kBasis.b[u][x] * cols[u][y];
      out[x * 8 + y] = acc + 128.0;
    }
  }
  return out;
}

QuantizedBlock quantize(const DctBlock& coeffs, const QuantTable& table) {
  QuantizedBlock out;
  for (int i = 0; i < 64; ++i) {
    out.c[i] = static_cast<int>(round_half_away(coeffs.f[i] / table.q[i]));
  }
  return out;
}

DctBlock dequantize(const QuantizedBlock& block, const QuantTable& table) {
  DctBlock out;
  for (int i = 0; i < 64; ++i) {
    out.f[i] = static_cast<double>(block.c[i]) * table.q[i];
  }
  return out;
}

const QuantTable& base_quant_table() {
  // Standard luminance table at quality 50.
  static const QuantTable kQ50 = {
      {16, 11, 10, 16, 24,  40,  51,  61,   //
       12, 12, 14, 19, 26,  58,  60,  55,   //
       14, 13, 16, 24, 40,  57,  69,  56,   //
       14, 17, 22, 29, 51,  87,  80,  62,   //
       18, 22, 37, 56, 68,  109, 103, 77,   //
       24, 35, 55, 64, 81,  104, 113, 92,   //
       49, 64, 78, 87, 103, 121, 120, 101,  //
       72, 92, 95, 98, 112, 100, 103, 99},
      50};
  return kQ50;
}

QuantTable scale_quant_table(const QuantTable& base, int quality) {
  check_quality(quality);
  const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
  QuantTable out;
  out.quality = quality;
  for (int i = 0; i < 64; ++i) {
    out.q[i] = std::max(1, (base.q[i] * scale + 50) / 100);
  }
  return out;
}

std::array<int, 64> zigzag_scan(const QuantizedBlock& block) {
  std::array<int, 64> out{};
  for (int i = 0; i < 64; ++i) {
    out[i] = block.c[kZigzag.pos[i]];
  }
  return out;
}

GrayImage jpeg_roundtrip(const GrayImage& img, int quality) {
  check_quality(quality);
  const QuantTable table = scale_quant_table(base_quant_table(), quality);

  const int w = img.width();
  const int h = img.height();
  const int pw = (w + 7) / 8 * 8;
  const int ph = (h + 7) / 8 * 8;

  // Edge-replicated padding; cropped again after reconstruction.
  std::vector<std::uint8_t> padded(static_cast<std::size_t>(pw) * ph);
  for (int y = 0; y < ph; ++y) {
    const int sy = std::min(y, h - 1);
    for (int x = 0; x < pw; ++x) {
      const int sx = std::min(x, w - 1);
      padded[static_cast<std::size_t>(y) * pw + x] = img.at(sx, sy);
    }
  }

  for (int by = 0; by < ph; by += 8) {
    for (int bx = 0; bx < pw; bx += 8) {
      PixelBlock block;
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
          block[r * 8 + c] =
              padded[static_cast<std::size_t>(by + r) * pw + (bx + c)];
        }
      }
      const DctBlock restored =
          dequantize(quantize(forward_dct(block), table), table);
      const auto samples = inverse_dct(restored);
      for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
          const double v = round_half_away(samples[r * 8 + c]);
          padded[static_cast<std::size_t>(by + r) * pw + (bx + c)] =
              static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
        }
      }
    }
  }

  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      pixels[static_cast<std::size_t>(y) * w + x] =
          padded[static_cast<std::size_t>(y) * pw + x];
    }
  }
  return GrayImage(w, h, std::move(pixels));
}

}  // namespace stegkit
