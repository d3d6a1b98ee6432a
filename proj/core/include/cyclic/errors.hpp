#pragma once

#include <stdexcept>
#include <string>

namespace cyclic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (serialized documents, rational literals, references).
struct ParseError : Error {
    using Error::Error;
};

// A violated precondition or structural invariant; the message names a witness.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace cyclic
