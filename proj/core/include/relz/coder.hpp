#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relz/parsing.hpp"
#include "relz/text.hpp"

namespace relz {

enum class EncoderId : std::uint8_t {
    gamma = 0,
    delta = 1,
    fixed = 2,  // distance and length in ceil(log2 n) bits each
};

EncoderId encoder_from_name(const std::string& name);
const char* encoder_name(EncoderId id);

// Bit-exact compressed container: an 18-byte header followed by the phrase
// bitstream. Header layout: magic "ReLZ" + version 0x01, n as 64-bit
// little-endian, sigma as 32-bit little-endian, encoder id as one byte.
// Payload bits are packed most-significant-bit first; the final byte is
// zero-padded.
struct EncodedBlob {
    std::uint64_t text_length = 0;
    std::uint32_t sigma = 1;
    EncoderId encoder = EncoderId::gamma;
    std::vector<std::uint8_t> payload;

    static constexpr std::size_t kHeaderSize = 18;

    std::vector<std::uint8_t> to_bytes() const;
    static EncodedBlob from_bytes(std::span<const std::uint8_t> bytes);
};

// Re-points every copy phrase at the start of the latest earlier phrase with
// identical content, when that makes the source no farther than it already
// is; phrases without an earlier equal phrase keep their source. Phrase
// boundaries never change and the result still verifies. Idempotent, and the
// distance of every reassigned phrase never grows.
Parsing rightmost_reassign(const Parsing& parsing, const Text& text);

// Serializes a parsing: per phrase one flag bit, then either the literal
// symbol in ceil(log2 sigma) bits or the (distance, length) pair in the
// selected universal code. By default the parsing is passed through
// rightmost_reassign first; `reassign = false` keeps the parser-provided
// sources (for source-choice experiments).
EncodedBlob encode(const Parsing& parsing, std::uint64_t sigma, EncoderId encoder,
                   bool reassign = true);

// Exact payload size in bits of the given parsing as-is (no reassignment).
std::uint64_t encoded_size_bits(const Parsing& parsing, std::uint64_t sigma,
                                EncoderId encoder);

// Single left-to-right pass reconstructing the text; copies resolve symbol
// by symbol. Malformed streams raise CorruptInputError with a bit offset.
Text decode(const EncodedBlob& blob);

}  // namespace relz
