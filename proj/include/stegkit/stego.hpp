#pragma once

// Message embedding into the lowest bit-planes and extraction back out.
//
// Frame layout, bit-exact: bytes 0x53 0x47, then a 4-byte big-endian payload
// length, then the payload. Frame bits enter the carrier most significant
// bit first, plane-major: all of plane 0 in row-major order, then plane 1,
// then plane 2. Carrier bits past the end of the frame are left untouched.
//
// An optional key XOR-whitens the frame bytes with a keystream drawn from
// std::mt19937_64 seeded with the key; each 64-bit draw contributes eight
// keystream bytes, most significant first. Whitening is an involution, so
// embedding and extraction use the same key.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stegkit/image.hpp"

namespace stegkit {

inline constexpr int kMaxEmbedPlanes = 3;
inline constexpr std::uint16_t kFrameMagic = 0x5347;  // "SG"
inline constexpr std::size_t kFrameHeaderBytes = 6;

struct StegoKey {
  std::uint64_t seed = 0;
};

// Total carrier bits: width * height * n_planes. Usable payload is smaller
// by the 48-bit frame header. n_planes must be in [1, 3].
std::uint64_t capacity(const GrayImage& img, int n_planes);

std::vector<std::uint8_t> serialize_frame(std::span<const std::uint8_t> message);

// In-place XOR with the keystream; applying it twice restores the input.
void whiten(std::span<std::uint8_t> bytes, const StegoKey& key);

// Throws CapacityError when the framed message does not fit.
GrayImage embed(const GrayImage& cover, std::span<const std::uint8_t> message,
                int n_planes, std::optional<StegoKey> key = std::nullopt);

// Validates magic and length before returning the payload. Throws FrameError
// with fault no_frame / corrupt_length / truncated_payload.
std::vector<std::uint8_t> extract(const GrayImage& stego, int n_planes,
                                  std::optional<StegoKey> key = std::nullopt);

}  // namespace stegkit
