#pragma once

#include <cstdint>

#include "relz/parsing.hpp"
#include "relz/suffix_index.hpp"
#include "relz/text.hpp"

namespace relz {

// Greedy parse of `text` where each copy phrase is the longest prefix that
// occurs anywhere in the reference; copy sources are reference coordinates.
// Not an LZ-like parsing of `text` on its own (sources point into another
// string).
Parsing rlz_parse(const Text& text, const SuffixIndex& reference);

// LZ parse of text[1..ell] followed by the reference parse of the remainder
// against that prefix, all source positions in whole-text coordinates. The
// result is an LZ-like parsing of the full text. ell may be 0 (all-literal
// remainder) or |text| (plain LZ).
Parsing rlz_pref_parse(const Text& text, std::uint64_t ell);

}  // namespace relz
