#pragma once

#include <cstdint>
#include <vector>

#include "relz/text.hpp"

namespace relz {

// Suffix array over an integer-alphabet text. Immutable after construction;
// concurrent queries are safe.
struct SuffixIndex {
    Text text;
    std::vector<std::uint32_t> sa;  // 1-based suffix start positions, lexicographic
};

// Linear-time construction (difference-cover recursion). Handles byte
// alphabets and large integer alphabets alike; symbols far sparser than the
// text are rank-compressed first. Texts are limited to 2^31 - 4 symbols.
SuffixIndex build_index(Text text);

// 0-based suffix array used internally by the parsers.
std::vector<std::uint32_t> suffix_sort(const std::vector<Symbol>& symbols);

struct RefMatch {
    std::uint64_t length = 0;      // 0 = no symbol of the pattern occurs
    std::uint64_t occurrence = 0;  // 1-based witness start in the reference
};

// Longest prefix of pattern[from..] that occurs somewhere in the indexed
// reference, found by binary search over the suffix array with plain prefix
// comparisons. `from` is 1-based and may be |pattern| + 1 (empty rest).
RefMatch longest_reference_match(const SuffixIndex& index, const Text& pattern,
                                 std::uint64_t from);

}  // namespace relz
