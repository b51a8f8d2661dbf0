#include "stegkit/histogram.hpp"

#include "stegkit/errors.hpp"

namespace stegkit {

Histogram compute_histogram(const GrayImage& img) {
  Histogram h;
  for (std::uint8_t v : img.pixels()) {
    ++h.counts[v];
  }
  h.total = img.pixel_count();
  return h;
}

std::array<double, 256> normalize(const Histogram& h) {
  if (h.total == 0) {
    throw DegenerateInputError("cannot normalize an empty histogram");
  }
  std::array<double, 256> p{};
  const auto n = static_cast<double>(h.total);
  for (int k = 0; k < 256; ++k) {
    p[k] = static_cast<double>(h.counts[k]) / n;
  }
  return p;
}

std::pair<int, int> occupied_range(const Histogram& h) {
  if (h.total == 0) {
    throw DegenerateInputError("empty histogram has no occupied range");
  }
  int lo = 0;
  while (h.counts[lo] == 0) ++lo;
  int hi = 255;
  while (h.counts[hi] == 0) --hi;
  return {lo, hi};
}

}  // namespace stegkit
