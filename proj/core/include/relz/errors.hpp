#pragma once

#include <stdexcept>

namespace relz {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// stable exit codes: usage errors -> 1, I/O errors -> 2, corrupt input -> 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CorruptInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated structural invariant: malformed phrase, inconsistent boundaries,
// field overflow. Indicates a broken precondition rather than bad user input.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace relz
