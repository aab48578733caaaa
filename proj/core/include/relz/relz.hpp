#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relz/parsing.hpp"
#include "relz/text.hpp"

namespace relz {

// Bytes of suffix-array working set per input symbol. Used to derive the
// longest affordable reference prefix from a memory budget (one text byte
// plus an 8-byte suffix array entry).
inline constexpr std::uint64_t kBytesPerSymbol = 9;

struct RelzConfig {
    // Exactly one of the two must be set.
    std::optional<std::uint64_t> prefix_len;  // explicit reference length
    std::optional<std::uint64_t> mem_budget;  // bytes; reference length derived

    // Recursive-call limit for relz_recursive; 0 means single pass only.
    std::uint32_t max_recursion = 16;
};

struct RelzStats {
    std::uint64_t prefix_len = 0;      // reference length used at the top level
    std::uint64_t stage1_phrases = 0;  // phrase count after the first reference pass
    std::uint64_t meta_alphabet = 0;   // distinct phrase contents at the top level
    std::uint64_t phrases = 0;         // final phrase count
    std::uint32_t recursion_depth = 0; // recursive calls taken (0 = single pass)
    std::vector<std::uint64_t> level_phrases;  // stage-1 phrase count per level
    double seconds = 0.0;
};

// Longest reference prefix affordable under `mem_budget` bytes:
// min(n, floor(budget / kBytesPerSymbol)), raised to sigma because the
// reference must span the whole alphabet. A budget that cannot hold even
// sigma symbols is rejected.
std::uint64_t derive_ell(std::uint64_t mem_budget, std::uint64_t n, std::uint64_t sigma);

// The full pipeline: reference-prefix parse, metasymbolization, LZ over the
// id string, remap back to text coordinates. Returns an LZ-like parsing of
// `text`. Stats, when requested, report the stage sizes and timings.
Parsing relz_parse(const Text& text, const RelzConfig& config, RelzStats* stats = nullptr);

// Memory-bounded variant: when the id string after the first pass is still
// too long for in-memory LZ under the budget, the pipeline is applied to the
// id string recursively, up to max_recursion extra levels; the deepest parse
// is rewritten back to text coordinates bottom-up. At the recursion cap the
// last level keeps its reference-prefix parse as is, which is still a valid
// LZ-like parsing.
Parsing relz_recursive(const Text& text, const RelzConfig& config, RelzStats* stats = nullptr);

// Flag-bit phrase-to-integer mapping for metasymbol alphabets: a literal c
// maps to flag 0 followed by ceil(log2 sigma_prev) symbol bits, a copy
// (p, len) to flag 1 followed by two ceil(log2 ref_len)-bit fields stored
// as-is. The code width therefore grows by exactly one bit per iteration.
// Fields that do not fit raise StructuralError.
std::uint64_t meta_alphabet_code(const Phrase& phrase, std::uint64_t sigma_prev,
                                 std::uint64_t ref_len);
Phrase meta_alphabet_decode(std::uint64_t code, std::uint64_t sigma_prev,
                            std::uint64_t ref_len);
std::uint32_t meta_alphabet_width(std::uint64_t sigma_prev, std::uint64_t ref_len);

}  // namespace relz
