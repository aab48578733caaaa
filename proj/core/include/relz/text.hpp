#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "relz/errors.hpp"

namespace relz {

using Symbol = std::uint32_t;

// Immutable sequence of symbols over the integer alphabet {0, ..., sigma-1}.
// Positions in the data model are 1-based; the symbol vector itself is a
// plain 0-based array.
struct Text {
    std::vector<Symbol> symbols;
    std::uint64_t sigma = 1;

    std::uint64_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    friend bool operator==(const Text&, const Text&) = default;
};

inline Text text_from_bytes(std::span<const std::uint8_t> bytes) {
    Text t;
    t.sigma = 256;
    t.symbols.assign(bytes.begin(), bytes.end());
    return t;
}

inline Text text_from_string(std::string_view s) {
    Text t;
    t.sigma = 256;
    t.symbols.reserve(s.size());
    for (unsigned char c : s) t.symbols.push_back(c);
    return t;
}

inline std::vector<std::uint8_t> text_to_bytes(const Text& t) {
    if (t.sigma > 256) throw UsageError("text alphabet does not fit in bytes");
    std::vector<std::uint8_t> out;
    out.reserve(t.symbols.size());
    for (Symbol s : t.symbols) out.push_back(static_cast<std::uint8_t>(s));
    return out;
}

inline void validate_text(const Text& t) {
    if (t.sigma < 1) throw StructuralError("alphabet size must be at least 1");
    for (std::size_t i = 0; i < t.symbols.size(); ++i)
        if (t.symbols[i] >= t.sigma)
            throw StructuralError("symbol at position " + std::to_string(i + 1) +
                                  " is outside the alphabet");
}

}  // namespace relz
