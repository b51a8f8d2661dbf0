#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "stegkit/image.hpp"

namespace stegkit {

// 256-bin gray level counts. counts[v] is the number of pixels with value v.
struct Histogram {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;
};

Histogram compute_histogram(const GrayImage& img);

// counts[k] / total for every bin; throws DegenerateInputError on total == 0.
std::array<double, 256> normalize(const Histogram& h);

// (lowest, highest) occupied level; throws DegenerateInputError on total == 0.
std::pair<int, int> occupied_range(const Histogram& h);

}  // namespace stegkit
