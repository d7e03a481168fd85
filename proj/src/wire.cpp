#include "wfc/wire.hpp"

#include <limits>

#include "wfc/unicode.hpp"

namespace wfc {

namespace {

constexpr std::uint64_t kU32Max = std::numeric_limits<std::uint32_t>::max();

void put_u32le(WireMessage& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v));
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v >> 16));
    out.push_back(std::uint8_t(v >> 24));
}

std::uint32_t get_u32le(std::span<const std::uint8_t> frame, std::size_t pos) {
    return std::uint32_t(frame[pos]) | (std::uint32_t(frame[pos + 1]) << 8) |
           (std::uint32_t(frame[pos + 2]) << 16) | (std::uint32_t(frame[pos + 3]) << 24);
}

}  // namespace

WireMessage encode_message(std::span<const std::string> words) {
    if (words.size() > kU32Max) {
        throw std::length_error("word batch exceeds 2^32-1 words");
    }
    std::uint64_t payload = 0;
    for (const auto& w : words) {
        if (w.size() > kU32Max) {
            throw std::length_error("word exceeds 2^32-1 bytes");
        }
        payload += w.size();
    }

    WireMessage out;
    out.reserve(8 + 4 * words.size() + payload);
    out.insert(out.end(), kFrameMagic.begin(), kFrameMagic.end());
    put_u32le(out, std::uint32_t(words.size()));
    for (const auto& w : words) put_u32le(out, std::uint32_t(w.size()));
    for (const auto& w : words) {
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

std::vector<std::string> decode_message(std::span<const std::uint8_t> frame) {
    if (frame.size() < 4 || !std::equal(kFrameMagic.begin(), kFrameMagic.end(), frame.begin())) {
        throw WireError(WireError::Kind::BadMagic, "malformed frame: bad magic");
    }
    if (frame.size() < 8) {
        throw WireError(WireError::Kind::Truncated, "truncated frame: missing word count");
    }
    const std::uint32_t count = get_u32le(frame, 4);

    const std::uint64_t lengths_end = 8 + 4 * std::uint64_t(count);
    if (frame.size() < lengths_end) {
        throw WireError(WireError::Kind::Truncated, "truncated frame: missing word lengths");
    }
    std::uint64_t total = lengths_end;
    for (std::uint32_t i = 0; i < count; ++i) {
        total += get_u32le(frame, 8 + 4 * std::size_t(i));
    }
    if (frame.size() < total) {
        throw WireError(WireError::Kind::Truncated, "truncated frame: payload short of declared lengths");
    }
    if (frame.size() > total) {
        throw WireError(WireError::Kind::TrailingBytes, "framing error: trailing bytes after payload");
    }

    std::vector<std::string> words;
    words.reserve(count);
    std::size_t pos = std::size_t(lengths_end);
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::uint32_t len = get_u32le(frame, 8 + 4 * std::size_t(i));
        std::string word(reinterpret_cast<const char*>(frame.data() + pos), len);
        if (!utf8_valid(word)) {
            throw WireError(WireError::Kind::BadEncoding, "encoding error: word payload is not UTF-8");
        }
        words.push_back(std::move(word));
        pos += len;
    }
    return words;
}

}  // namespace wfc
