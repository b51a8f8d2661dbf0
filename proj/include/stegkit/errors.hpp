#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stegkit {

// Malformed input bytes: PGM headers, thresholds files. Maps to CLI exit 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Message does not fit the carrier at the requested plane count.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::uint64_t required_bits, std::uint64_t available_bits);

  std::uint64_t required_bits() const noexcept { return required_bits_; }
  std::uint64_t available_bits() const noexcept { return available_bits_; }

 private:
  std::uint64_t required_bits_;
  std::uint64_t available_bits_;
};

enum class FrameFault {
  no_frame,           // carrier too small for the magic, or magic mismatch
  corrupt_length,     // magic present but the length field is incomplete
  truncated_payload,  // header valid, payload overruns the carrier
};

class FrameError : public std::runtime_error {
 public:
  FrameError(FrameFault fault, const std::string& message);

  FrameFault fault() const noexcept { return fault_; }

 private:
  FrameFault fault_;
};

// Input lacks the statistical mass a score or calibration needs.
class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace stegkit
