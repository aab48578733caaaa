#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "relz/text.hpp"

namespace relz {

// One unit of a parsing: either a single literal symbol, or a copy of
// `length` symbols whose source starts at the 1-based position `source`,
// strictly before the phrase itself. The copied range may overlap the
// phrase (self-referencing copies expand symbol by symbol).
struct Phrase {
    std::uint64_t source = 0;
    std::uint64_t length = 1;
    Symbol symbol = 0;
    bool literal = true;

    static Phrase make_literal(Symbol c) {
        Phrase p;
        p.symbol = c;
        return p;
    }
    static Phrase make_copy(std::uint64_t source_start, std::uint64_t length) {
        Phrase p;
        p.literal = false;
        p.source = source_start;
        p.length = length;
        return p;
    }

    std::uint64_t size() const { return literal ? 1 : length; }

    friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct Parsing {
    std::vector<Phrase> phrases;
    std::uint64_t text_length = 0;

    void push(const Phrase& p) {
        phrases.push_back(p);
        text_length += p.size();
    }
    std::size_t size() const { return phrases.size(); }
    bool empty() const { return phrases.empty(); }

    friend bool operator==(const Parsing&, const Parsing&) = default;
};

// Expands a parsing into the unique text it denotes. Copies are resolved
// left to right, symbol by symbol, so self-overlapping sources work.
// Throws StructuralError (with the phrase index) on malformed phrases.
Text expand_parsing(const Parsing& parsing, std::uint64_t sigma);

struct VerifyResult {
    bool ok = true;
    std::size_t phrase_index = 0;  // 0-based index of the offending phrase
    std::uint64_t position = 0;    // 1-based text position of the violation
    std::string message;

    explicit operator bool() const { return ok; }
};

// True iff the parsing expands exactly to `text` and every phrase satisfies
// the phrase invariants against it. Violations are reported, not thrown.
VerifyResult verify_parsing(const Parsing& parsing, const Text& text);

// Debug dump format: one phrase per line, `L <symbol>` or
// `C <source_start> <length>`. Serialized source offsets are 0-based; the
// in-memory data model stays 1-based.
void dump_parsing(const Parsing& parsing, std::ostream& os);
Parsing read_parsing_dump(std::istream& is);

}  // namespace relz
