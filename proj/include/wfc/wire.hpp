#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wfc {

// Self-describing frame carrying one word batch:
//
//   offset 0   magic "WCX1" (0x57 0x43 0x58 0x31)
//   offset 4   u32-LE word count
//   offset 8   u32-LE byte length of each word, in order
//   then       concatenated UTF-8 word payloads, in order
//
// Total length is 4 + 4 + 4*count + sum(lengths); nothing may follow.
using WireMessage = std::vector<std::uint8_t>;

inline constexpr std::array<std::uint8_t, 4> kFrameMagic = {0x57, 0x43, 0x58, 0x31};

class WireError : public std::runtime_error {
public:
    enum class Kind {
        BadMagic,       // frame does not start with "WCX1"
        Truncated,      // declared contents exceed the available bytes
        TrailingBytes,  // bytes left over after the declared contents
        BadEncoding,    // a word payload is not valid UTF-8
    };

    WireError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Throws std::length_error if the batch has more than 2^32-1 words or any
// word longer than 2^32-1 bytes.
WireMessage encode_message(std::span<const std::string> words);

// Exact inverse of encode_message; preserves word order. Throws WireError.
std::vector<std::string> decode_message(std::span<const std::uint8_t> frame);

}  // namespace wfc
