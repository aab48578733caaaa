#pragma once

#include <cstdint>

#include "relz/parsing.hpp"
#include "relz/text.hpp"

namespace relz {

// Greedy leftmost LZ parse: at each position the phrase is the longest
// prefix with an occurrence starting strictly before it, or a literal when
// that length is zero. Repeated single symbols become length-1 copies.
// Computed from the suffix array via previous/next smaller values, so large
// integer alphabets are fine. The reported copy sources are whatever the
// factorization yields; canonical source selection happens at encoding time.
Parsing lz_parse(const Text& text);

// Quadratic exhaustive-search oracle with the same output contract as
// lz_parse. Refuses texts longer than `cap`.
Parsing naive_lz_parse(const Text& text, std::uint64_t cap = 10000);

}  // namespace relz
