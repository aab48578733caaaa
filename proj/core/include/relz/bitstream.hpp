#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relz/errors.hpp"

namespace relz {

// Bit sink, most-significant-bit first within each byte; the final byte is
// zero-padded when the buffer is taken.
class BitWriter {
public:
    void put_bit(bool b) {
        if (fill_ == 0) bytes_.push_back(0);
        bytes_.back() = static_cast<std::uint8_t>(bytes_.back() | (b ? (0x80u >> fill_) : 0u));
        fill_ = (fill_ + 1) & 7;
    }

    // Writes the low `width` bits of value, most significant first.
    void put_bits(std::uint64_t value, std::uint32_t width) {
        for (std::uint32_t i = width; i > 0; --i)
            put_bit((value >> (i - 1)) & 1u);
    }

    std::uint64_t bit_count() const {
        return bytes_.size() * 8 - (fill_ == 0 ? 0 : 8 - fill_);
    }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take() { fill_ = 0; return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint32_t fill_ = 0;  // bits used in the last byte
};

// Matching bit source. Reading past the end throws CorruptInputError with
// the current bit offset.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t bit_pos() const { return pos_; }
    std::uint64_t bit_size() const { return bytes_.size() * 8; }

    bool get_bit() {
        if (pos_ >= bit_size())
            throw CorruptInputError("truncated bitstream at bit offset " + std::to_string(pos_));
        bool b = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return b;
    }

    std::uint64_t get_bits(std::uint32_t width) {
        std::uint64_t v = 0;
        for (std::uint32_t i = 0; i < width; ++i)
            v = (v << 1) | static_cast<std::uint64_t>(get_bit());
        return v;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t pos_ = 0;
};

// Elias gamma: floor(log2 x) zeros, then the binary digits of x.
void elias_gamma(BitWriter& w, std::uint64_t x);
std::uint64_t elias_gamma_decode(BitReader& r);
std::uint32_t elias_gamma_bits(std::uint64_t x);

// Elias delta: gamma(floor(log2 x) + 1), then the digits of x without the
// leading one.
void elias_delta(BitWriter& w, std::uint64_t x);
std::uint64_t elias_delta_decode(BitReader& r);
std::uint32_t elias_delta_bits(std::uint64_t x);

}  // namespace relz
