#include "stegkit/errors.hpp"

namespace stegkit {

CapacityError::CapacityError(std::uint64_t required_bits,
                             std::uint64_t available_bits)
    : std::runtime_error("message needs " + std::to_string(required_bits) +
                         " carrier bits but only " +
                         std::to_string(available_bits) + " are available"),
      required_bits_(required_bits),
      available_bits_(available_bits) {}

FrameError::FrameError(FrameFault fault, const std::string& message)
    : std::runtime_error(message), fault_(fault) {}

}  // namespace stegkit
