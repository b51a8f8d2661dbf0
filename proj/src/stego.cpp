#include "stegkit/stego.hpp"

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>

#include "stegkit/errors.hpp"

namespace stegkit {
namespace {

void check_planes(int n_planes) {
  if (n_planes < 1 || n_planes > kMaxEmbedPlanes) {
    throw std::invalid_argument("n_planes must be in [1, " +
                                std::to_string(kMaxEmbedPlanes) + "], got " +
                                std::to_string(n_planes));
  }
}

// Carrier bit positions in the fixed scan order: all of plane 0 row-major,
// then plane 1, then plane 2.
class CarrierReader {
 public:
  CarrierReader(std::span<const std::uint8_t> pixels, int n_planes)
      : pixels_(pixels), limit_(pixels.size() * n_planes) {}

  std::uint64_t remaining() const { return limit_ - cursor_; }

  int next_bit() {
    const std::size_t plane = cursor_ / pixels_.size();
    const std::size_t pixel = cursor_ % pixels_.size();
    ++cursor_;
    return (pixels_[pixel] >> plane) & 1;
  }

  std::uint8_t next_byte() {
    std::uint8_t b = 0;
    for (int i = 0; i < 8; ++i) {
      b = static_cast<std::uint8_t>((b << 1) | next_bit());
    }
    return b;
  }

 private:
  std::span<const std::uint8_t> pixels_;
  std::uint64_t limit_;
  std::uint64_t cursor_ = 0;
};

}  // namespace

std::uint64_t capacity(const GrayImage& img, int n_planes) {
  check_planes(n_planes);
  return static_cast<std::uint64_t>(img.pixel_count()) * n_planes;
}

std::vector<std::uint8_t> serialize_frame(
    std::span<const std::uint8_t> message) {
  if (message.size() > 0xFFFFFFFFull) {
    throw std::invalid_argument("message exceeds the 32-bit length field");
  }
  const auto len = static_cast<std::uint32_t>(message.size());
  std::vector<std::uint8_t> frame;
  frame.reserve(kFrameHeaderBytes + message.size());
  frame.push_back(static_cast<std::uint8_t>(kFrameMagic >> 8));    // 'S'
  frame.push_back(static_cast<std::uint8_t>(kFrameMagic & 0xFF));  // 'G'
  frame.push_back(static_cast<std::uint8_t>(len >> 24));
  frame.push_back(static_cast<std::uint8_t>(len >> 16));
  frame.push_back(static_cast<std::uint8_t>(len >> 8));
  frame.push_back(static_cast<std::uint8_t>(len));
  frame.insert(frame.end(), message.begin(), message.end());
  return frame;
}

void whiten(std::span<std::uint8_t> bytes, const StegoKey& key) {
  std::mt19937_64 rng(key.seed);
  std::uint64_t word = 0;
  int held = 0;
  for (auto& b : bytes) {
    if (held == 0) {
      word = rng();
      held = 8;
    }
    b ^= static_cast<std::uint8_t>(word >> 56);
    word <<= 8;
    --held;
  }
}

GrayImage embed(const GrayImage& cover, std::span<const std::uint8_t> message,
                int n_planes, std::optional<StegoKey> key) {
  check_planes(n_planes);

  std::vector<std::uint8_t> frame = serialize_frame(message);
  if (key) whiten(frame, *key);

  const std::uint64_t required = static_cast<std::uint64_t>(frame.size()) * 8;
  const std::uint64_t available = capacity(cover, n_planes);
  if (required > available) {
    throw CapacityError(required, available);
  }

  std::vector<std::uint8_t> pixels(cover.pixels().begin(),
                                   cover.pixels().end());
  const std::size_t n = pixels.size();
  for (std::uint64_t i = 0; i < required; ++i) {
    const std::size_t plane = i / n;
    const std::size_t pixel = i % n;
    const int bit = (frame[i / 8] >> (7 - i % 8)) & 1;
    const auto mask = static_cast<std::uint8_t>(1u << plane);
    if (bit) {
      pixels[pixel] = static_cast<std::uint8_t>(pixels[pixel] | mask);
    } else {
      pixels[pixel] = static_cast<std::uint8_t>(pixels[pixel] & ~mask);
    }
  }
  return GrayImage(cover.width(), cover.height(), std::move(pixels));
}

std::vector<std::uint8_t> extract(const GrayImage& stego, int n_planes,
                                  std::optional<StegoKey> key) {
  check_planes(n_planes);

  CarrierReader reader(stego.pixels(), n_planes);
  std::mt19937_64 keystream(key ? key->seed : 0);
  std::uint64_t word = 0;
  int held = 0;
  auto dewhiten = [&](std::uint8_t b) -> std::uint8_t {
    if (!key) return b;
    if (held == 0) {
      word = keystream();
      held = 8;
    }
    const auto k = static_cast<std::uint8_t>(word >> 56);
    word <<= 8;
    --held;
    return b ^ k;
  };

  if (reader.remaining() < 16) {
    throw FrameError(FrameFault::no_frame,
                     "no frame found: carrier holds fewer than 16 bits");
  }
  const std::uint8_t m0 = dewhiten(reader.next_byte());
  const std::uint8_t m1 = dewhiten(reader.next_byte());
  const auto magic = static_cast<std::uint16_t>((m0 << 8) | m1);
  if (magic != kFrameMagic) {
    throw FrameError(FrameFault::no_frame, "no frame found: magic mismatch");
  }

  if (reader.remaining() < 32) {
    throw FrameError(FrameFault::corrupt_length,
                     "corrupt length: carrier ends inside the length field");
  }
  std::uint32_t length = 0;
  for (int i = 0; i < 4; ++i) {
    length = (length << 8) | dewhiten(reader.next_byte());
  }

  if (static_cast<std::uint64_t>(length) * 8 > reader.remaining()) {
    throw FrameError(FrameFault::truncated_payload,
                     "truncated payload: frame claims " +
                         std::to_string(length) +
                         " bytes but the carrier holds only " +
                         std::to_string(reader.remaining() / 8));
  }

  std::vector<std::uint8_t> payload;
  payload.reserve(length);
  for (std::uint32_t i = 0; i < length; ++i) {
    payload.push_back(dewhiten(reader.next_byte()));
  }
  return payload;
}

}  // namespace stegkit
