#pragma once

#include <cstdint>
#include <vector>

#include "relz/parsing.hpp"
#include "relz/text.hpp"

namespace relz {

// A range of the original text, 1-based start.
struct Span {
    std::uint64_t start = 0;
    std::uint64_t length = 0;

    friend bool operator==(const Span&, const Span&) = default;
};

// The phrase sequence of a parsing with equal phrase contents collapsed to
// one integer id each, assigned densely in first-occurrence order. Keeps the
// underlying phrases and their start positions so a parsing of the id string
// can be remapped back onto the original text.
struct MetaText {
    std::vector<Symbol> ids;                 // one id per phrase
    std::vector<Span> dictionary;            // id -> first occurrence of the content
    std::vector<std::uint64_t> boundaries;   // 1-based start of each phrase
    std::vector<Phrase> phrases;             // the underlying parsing
    std::uint64_t text_length = 0;

    std::uint64_t alphabet() const { return dictionary.size(); }

    // The id string as a text over the dense meta alphabet.
    Text to_text() const {
        Text t;
        t.symbols = ids;
        t.sigma = dictionary.empty() ? 1 : dictionary.size();
        return t;
    }
};

// Requires verify_parsing(parsing, text) to hold. Phrase contents are
// compared via a length + hash fingerprint with a full symbol comparison on
// collision, so the whole pass is O(n) expected.
MetaText metasymbolize(const Parsing& parsing, const Text& text);

// Translates a parsing of meta.ids back to a parsing of the original text:
// a literal metaphrase becomes the underlying phrase unchanged; a copy
// metaphrase with meta source [p, q] becomes one copy whose source starts at
// boundaries[p] and runs to the end of metasymbol q.
Parsing remap_metaparse(const Parsing& meta_parsing, const MetaText& meta);

}  // namespace relz
